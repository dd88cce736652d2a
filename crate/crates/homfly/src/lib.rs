//! Exact computation of colored HOMFLY-PT polynomials of framed, oriented,
//! labeled links presented as braid closures.
//!
//! The pipeline follows the green-red web calculus: braid strands colored by
//! Young diagrams are cabled, Gyoja-Aiston idempotents built from green
//! (antisymmetrizing) and red (symmetrizing) clasps are inserted on the
//! cables, the result is evaluated in the Iwahori-Hecke algebra `H_K(q)`,
//! and the Jones-Ocneanu trace produces an exact rational function in `a`
//! and `q`. Specializing `a = q^(N-M)` recovers the Reshetikhin-Turaev
//! gl(N|M) invariant, and transposing all Young diagrams while inverting
//! `q` changes the polynomial by at most a global sign.
//!
//! All arithmetic is exact: integer Laurent polynomials in `a, q` and
//! fractions with `q`-only denominators. There is no floating point
//! anywhere.

pub mod clasp;
pub mod hecke;
pub mod input;
pub mod invariant;
pub mod perm;
pub mod ring;
pub mod trace;
pub mod web;

pub use clasp::{clasp_closed, clasp_recursive, young_idempotent, ClaspColor};
pub use hecke::HeckeElt;
pub use invariant::ColoredBraid;
pub use perm::{Partition, Permutation};
pub use ring::{qbinom, qfact, qint, BiLaurent, RatFun};

/// Default bound on clasp size / total cable width. Exceeding it is a clean
/// error, never silent truncation.
pub const DEFAULT_MAX_CABLE: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot invert {0}: only q-scalars and a-monomial multiples are invertible")]
    NotInvertible(String),
    #[error("exact division failed: {0}")]
    NotDivisible(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("index {index} out of range for {context}")]
    IndexOutOfRange { index: usize, context: String },
    #[error("cable size {got} exceeds limit {limit}")]
    LimitExceeded { got: usize, limit: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("malformed web: {0}")]
    MalformedWeb(String),
    #[error("color swap is undefined on webs with crossings")]
    ColorSwapWithCrossing,
    #[error("unknown relation id: {0}")]
    UnknownRelation(String),
    #[error("idempotent scalar inconsistent across coefficients for {0}")]
    InconsistentScalar(String),
    #[error("idempotent scalar vanishes for {0}")]
    ZeroScalar(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
