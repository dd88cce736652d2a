//! Green and red clasps and Gyoja-Aiston idempotents, as elements of
//! `H_K(q)`.
//!
//! The green clasp projects onto the q-antisymmetric part of the K-fold
//! cable, the red clasp onto the q-symmetric part; both are built by the
//! closed permutation-braid formula
//! `CL^g_K = q^(K(K-1)/2) (1/[K]!) sum_w (-q)^(-len(w)) H_w` and
//! `CL^r_K = q^(-K(K-1)/2) (1/[K]!) sum_w q^(len(w)) H_w`.
//! The two-term recursion (peel one strand, subtract `[K-1]/[K]` times the
//! clasped dumbbell correction) is kept as a cross-check.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::hecke::HeckeElt;
use crate::perm::{sorting_permutation, Partition, Permutation};
use crate::ring::{qfact, qint, BiLaurent, RatFun};
use crate::{Error, Result, DEFAULT_MAX_CABLE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaspColor {
    Green,
    Red,
}

impl ClaspColor {
    pub fn other(self) -> ClaspColor {
        match self {
            ClaspColor::Green => ClaspColor::Red,
            ClaspColor::Red => ClaspColor::Green,
        }
    }
}

fn cache() -> &'static RwLock<HashMap<(usize, ClaspColor), HeckeElt>> {
    static CACHE: OnceLock<RwLock<HashMap<(usize, ClaspColor), HeckeElt>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn idem_cache() -> &'static RwLock<HashMap<Partition, (HeckeElt, RatFun)>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, (HeckeElt, RatFun)>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The K-th clasp by the closed formula, summing over all of `S_K`.
/// `K = 0` is the empty product and `K = 1` the identity strand.
pub fn clasp_closed(k: usize, color: ClaspColor) -> Result<HeckeElt> {
    clasp_closed_with_limit(k, color, DEFAULT_MAX_CABLE)
}

pub fn clasp_closed_with_limit(k: usize, color: ClaspColor, limit: usize) -> Result<HeckeElt> {
    if k > limit {
        return Err(Error::LimitExceeded { got: k, limit });
    }
    if let Some(hit) = cache().read().unwrap().get(&(k, color)) {
        return Ok(hit.clone());
    }
    if k <= 1 {
        return Ok(HeckeElt::one(k));
    }
    let fact = qfact(k as u32);
    let half = (k * (k - 1) / 2) as i64;
    let mut out = HeckeElt::zero(k);
    for w in Permutation::all(k) {
        let len = w.length() as i64;
        let num = match color {
            ClaspColor::Green => {
                // q^(K(K-1)/2) * (-q)^(-len)
                let sign = if len % 2 == 0 { 1 } else { -1 };
                BiLaurent::monomial(sign.into(), 0, half - len)
            }
            ClaspColor::Red => BiLaurent::monomial(1.into(), 0, len - half),
        };
        let coeff = RatFun::new(num, fact.clone())?;
        out = out.add(&HeckeElt::from_term(w, coeff))?;
    }
    cache().write().unwrap().insert((k, color), out.clone());
    Ok(out)
}

/// The clasp by the defining recursion; equals `clasp_closed`.
pub fn clasp_recursive(k: usize, color: ClaspColor) -> Result<HeckeElt> {
    if k > DEFAULT_MAX_CABLE {
        return Err(Error::LimitExceeded {
            got: k,
            limit: DEFAULT_MAX_CABLE,
        });
    }
    if k <= 1 {
        return Ok(HeckeElt::one(k));
    }
    let prev = clasp_recursive(k - 1, color)?.embed(0, k)?;
    // The correction inserts the label-2 edge of the opposite color on the
    // last two strands; under the explosion dictionary that edge is
    // [2] * CL_2 of that color.
    let dumbbell = clasp_closed(2, color.other())?
        .embed(k - 2, k)?
        .scale(&RatFun::from_poly(qint(2)));
    let coeff = RatFun::new(qint(k as i64 - 1), qint(k as i64))?;
    let correction = prev.mul(&dumbbell)?.mul(&prev)?.scale(&coeff);
    prev.sub(&correction)
}

/// Tensor the clasps of `sizes` along consecutive offsets inside `H_K`.
pub fn clasp_tensor(sizes: &[usize], color: ClaspColor, k: usize) -> Result<HeckeElt> {
    let total: usize = sizes.iter().sum();
    if total != k {
        return Err(Error::SizeMismatch(format!(
            "clasp tensor over {sizes:?} does not fill H_{k}"
        )));
    }
    let mut out = HeckeElt::one(k);
    let mut offset = 0;
    for &s in sizes {
        if s > 1 {
            let cl = clasp_closed(s, color)?.embed(offset, k)?;
            out = out.mul(&cl)?;
        }
        offset += s;
    }
    Ok(out)
}

/// The Gyoja-Aiston idempotent `e_q(lambda)` together with its scalar
/// `a(lambda)`.
///
/// The quasi-idempotent is `e_col ∘ H_w ∘ e_row ∘ H_(w^-1)` with `e_col` the
/// green clasps over column lengths, `e_row` the red clasps over row
/// lengths, and `w` the tableau sorting permutation; `a(lambda)` is the
/// scalar with `quasi^2 = a * quasi`, verified over every coefficient.
pub fn young_idempotent(lambda: &Partition) -> Result<(HeckeElt, RatFun)> {
    young_idempotent_with_limit(lambda, DEFAULT_MAX_CABLE)
}

pub fn young_idempotent_with_limit(
    lambda: &Partition,
    limit: usize,
) -> Result<(HeckeElt, RatFun)> {
    let k = lambda.size();
    if k > limit {
        return Err(Error::LimitExceeded { got: k, limit });
    }
    if let Some(hit) = idem_cache().read().unwrap().get(lambda) {
        return Ok(hit.clone());
    }
    let e_col = clasp_tensor(&lambda.columns(), ClaspColor::Green, k)?;
    let e_row = clasp_tensor(lambda.rows(), ClaspColor::Red, k)?;
    let w = sorting_permutation(lambda);
    // The permutation braid carrying row positions to column positions has
    // strand-endpoint permutation w, which under the word-to-permutation
    // composition convention used here is the basis element H_(w^-1).
    let braid = HeckeElt::from_term(w.inverse(), RatFun::one());
    let braid_inv = HeckeElt::from_term(w, RatFun::one());
    let quasi = e_col.mul(&braid)?.mul(&e_row)?.mul(&braid_inv)?;
    let square = quasi.mul(&quasi)?;

    let id = Permutation::identity(k);
    let probe = if !quasi.coeff(&id).is_zero() {
        id
    } else {
        quasi
            .iter()
            .next()
            .map(|(w, _)| w.clone())
            .ok_or_else(|| Error::ZeroScalar(lambda.to_string()))?
    };
    let a = square.coeff(&probe).div_exact(&quasi.coeff(&probe))?;
    if a.is_zero() {
        return Err(Error::ZeroScalar(lambda.to_string()));
    }
    if square != quasi.scale(&a) {
        return Err(Error::InconsistentScalar(lambda.to_string()));
    }
    let e = quasi.scale(&a.inv()?);
    idem_cache()
        .write()
        .unwrap()
        .insert(lambda.clone(), (e.clone(), a.clone()));
    Ok((e, a))
}
