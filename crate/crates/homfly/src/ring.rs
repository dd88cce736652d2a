//! Exact coefficient arithmetic: integer Laurent polynomials in the two
//! variables `a`, `q`, and rational functions whose denominators involve `q`
//! only. Quantum integers, factorials and binomials live here, as do the
//! substitution `a -> q^d` and the involution `q -> q^(-1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Integer Laurent polynomial in `a` and `q`.
///
/// Terms are keyed by `(a_exponent, q_exponent)`; no stored coefficient is
/// zero and the zero polynomial has an empty term map. The `BTreeMap` gives
/// a deterministic term order, so printing is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiLaurent {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        BiLaurent::default()
    }

    pub fn one() -> Self {
        BiLaurent::monomial(BigInt::one(), 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        BiLaurent::monomial(BigInt::from(n), 0, 0)
    }

    pub fn monomial(coeff: BigInt, a_exp: i64, q_exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((a_exp, q_exp), coeff);
        }
        BiLaurent { terms }
    }

    /// `q^j`.
    pub fn q_power(j: i64) -> Self {
        BiLaurent::monomial(BigInt::one(), 0, j)
    }

    /// `a^i`.
    pub fn a_power(i: i64) -> Self {
        BiLaurent::monomial(BigInt::one(), i, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    fn insert_add(&mut self, key: (i64, i64), coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return BiLaurent::zero();
        }
        BiLaurent {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v * c))
                .collect(),
        }
    }

    /// Multiply by the monomial `a^i q^j`.
    pub fn shift(&self, a_exp: i64, q_exp: i64) -> Self {
        BiLaurent {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), v)| ((i + a_exp, j + q_exp), v.clone()))
                .collect(),
        }
    }

    /// True when every term has a-exponent zero.
    pub fn is_q_only(&self) -> bool {
        self.terms.keys().all(|&(i, _)| i == 0)
    }

    /// Substitute `a -> q^d`, merging terms.
    pub fn substitute_a(&self, d: i64) -> Self {
        let mut out = BiLaurent::zero();
        for (&(i, j), c) in &self.terms {
            out.insert_add((0, j + d * i), c.clone());
        }
        out
    }

    /// Substitute `q -> q^(-1)`; `a` is fixed.
    pub fn invert_q(&self) -> Self {
        BiLaurent {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i, -j), c.clone()))
                .collect(),
        }
    }

    /// gcd of all integer coefficients (zero polynomial has content 0).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_content(&self, g: &BigInt) -> Self {
        if g.is_one() {
            return self.clone();
        }
        BiLaurent {
            terms: self.terms.iter().map(|(k, v)| (*k, v / g)).collect(),
        }
    }

    /// Group terms by a-exponent: each slice is a q-only Laurent polynomial.
    fn a_slices(&self) -> BTreeMap<i64, BTreeMap<i64, BigInt>> {
        let mut out: BTreeMap<i64, BTreeMap<i64, BigInt>> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            out.entry(i).or_default().insert(j, c.clone());
        }
        out
    }

    fn from_a_slices(slices: BTreeMap<i64, BTreeMap<i64, BigInt>>) -> Self {
        let mut terms = BTreeMap::new();
        for (i, slice) in slices {
            for (j, c) in slice {
                if !c.is_zero() {
                    terms.insert((i, j), c);
                }
            }
        }
        BiLaurent { terms }
    }
}

impl Add for &BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(*k, c.clone());
        }
        out
    }
}

impl Sub for &BiLaurent {
    type Output = BiLaurent;
    fn sub(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(*k, -c.clone());
        }
        out
    }
}

impl Neg for &BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        BiLaurent {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl Mul for &BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = BiLaurent::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.insert_add((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Ordinary integer polynomials in q, used for gcd computations. A q-only
// Laurent polynomial is an ordinary polynomial times a power of q; the gcd is
// taken on the ordinary parts and the unit shifts are tracked separately.
// ---------------------------------------------------------------------------

/// Dense coefficients, ascending degree, no trailing zeros. Empty = zero.
type QPoly = Vec<BigInt>;

fn qpoly_trim(p: &mut QPoly) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn qpoly_content(p: &QPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn qpoly_primitive(mut p: QPoly) -> QPoly {
    let g = qpoly_content(&p);
    if !g.is_zero() && !g.is_one() {
        for c in p.iter_mut() {
            *c = &*c / &g;
        }
    }
    p
}

fn qpoly_scale(x: &QPoly, c: &BigInt) -> QPoly {
    if c.is_zero() {
        return Vec::new();
    }
    x.iter().map(|a| a * c).collect()
}

fn qpoly_sub(x: &QPoly, y: &QPoly) -> QPoly {
    let mut out = x.clone();
    if out.len() < y.len() {
        out.resize(y.len(), BigInt::zero());
    }
    for (i, b) in y.iter().enumerate() {
        out[i] -= b;
    }
    qpoly_trim(&mut out);
    out
}

/// Pseudo-remainder of `f` by `g` (g nonzero).
fn qpoly_prem(f: &QPoly, g: &QPoly) -> QPoly {
    let mut r = f.clone();
    let dg = g.len() - 1;
    let lg = g.last().unwrap().clone();
    while r.len() >= g.len() && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        // lg * r - lr * q^(dr-dg) * g
        let mut shifted = vec![BigInt::zero(); dr - dg];
        shifted.extend(g.iter().cloned());
        r = qpoly_sub(&qpoly_scale(&r, &lg), &qpoly_scale(&shifted, &lr));
    }
    r
}

/// Primitive gcd in Z[q] via the primitive polynomial remainder sequence.
fn qpoly_gcd(f: &QPoly, g: &QPoly) -> QPoly {
    if f.is_empty() {
        return qpoly_primitive(g.clone());
    }
    if g.is_empty() {
        return qpoly_primitive(f.clone());
    }
    let mut a = qpoly_primitive(f.clone());
    let mut b = qpoly_primitive(g.clone());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = qpoly_primitive(qpoly_prem(&a, &b));
        a = b;
        b = r;
    }
    if a.last().map(|c| c.is_negative()).unwrap_or(false) {
        a = qpoly_scale(&a, &BigInt::from(-1));
    }
    a
}

/// Exact division in Z[q]; `None` when the division is not exact.
fn qpoly_div_exact(f: &QPoly, g: &QPoly) -> Option<QPoly> {
    if g.is_empty() {
        return None;
    }
    if f.is_empty() {
        return Some(Vec::new());
    }
    if f.len() < g.len() {
        return None;
    }
    let mut r = f.clone();
    let mut quot = vec![BigInt::zero(); f.len() - g.len() + 1];
    let lg = g.last().unwrap();
    while !r.is_empty() {
        if r.len() < g.len() {
            return None;
        }
        let lr = r.last().unwrap();
        let (c, rem) = lr.div_rem(lg);
        if !rem.is_zero() {
            return None;
        }
        let pos = r.len() - g.len();
        quot[pos] = c.clone();
        let mut shifted = vec![BigInt::zero(); pos];
        shifted.extend(g.iter().cloned());
        r = qpoly_sub(&r, &qpoly_scale(&shifted, &c));
    }
    Some(quot)
}

/// A q-only Laurent polynomial as `(shift, ordinary polynomial)`.
fn laurent_to_qpoly(x: &BTreeMap<i64, BigInt>) -> (i64, QPoly) {
    if x.is_empty() {
        return (0, Vec::new());
    }
    let low = *x.keys().next().unwrap();
    let high = *x.keys().next_back().unwrap();
    let mut p = vec![BigInt::zero(); (high - low + 1) as usize];
    for (&j, c) in x {
        p[(j - low) as usize] = c.clone();
    }
    (low, p)
}

fn qpoly_to_bilaurent(shift: i64, p: &QPoly) -> BiLaurent {
    let mut terms = BTreeMap::new();
    for (d, c) in p.iter().enumerate() {
        if !c.is_zero() {
            terms.insert((0, shift + d as i64), c.clone());
        }
    }
    BiLaurent { terms }
}

// ---------------------------------------------------------------------------
// RatFun
// ---------------------------------------------------------------------------

/// Rational function with a `q`-only denominator, held in canonical form:
/// the denominator is an ordinary polynomial in `q` with nonzero constant
/// term and positive lowest coefficient, no common `q`-polynomial factor
/// with the numerator, and joint integer content 1. Equal values have equal
/// representations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RatFun {
    num: BiLaurent,
    den: BiLaurent,
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun {
            num: BiLaurent::zero(),
            den: BiLaurent::one(),
        }
    }

    pub fn one() -> Self {
        RatFun {
            num: BiLaurent::one(),
            den: BiLaurent::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        RatFun {
            num: BiLaurent::from_int(n),
            den: BiLaurent::one(),
        }
    }

    pub fn from_poly(p: BiLaurent) -> Self {
        RatFun::normalized(p, BiLaurent::one())
    }

    /// `c * a^i * q^j`.
    pub fn monomial(coeff: i64, a_exp: i64, q_exp: i64) -> Self {
        RatFun::from_poly(BiLaurent::monomial(BigInt::from(coeff), a_exp, q_exp))
    }

    pub fn q_power(j: i64) -> Self {
        RatFun::from_poly(BiLaurent::q_power(j))
    }

    pub fn a_power(i: i64) -> Self {
        RatFun::from_poly(BiLaurent::a_power(i))
    }

    /// `num / den`; fails on a zero or non-q-only denominator.
    pub fn new(num: BiLaurent, den: BiLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !den.is_q_only() {
            return Err(Error::NotDivisible(format!(
                "denominator {den} involves the variable a"
            )));
        }
        Ok(RatFun::normalized(num, den))
    }

    pub fn num(&self) -> &BiLaurent {
        &self.num
    }

    pub fn den(&self) -> &BiLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn normalized(num: BiLaurent, den: BiLaurent) -> Self {
        debug_assert!(!den.is_zero());
        debug_assert!(den.is_q_only());
        if num.is_zero() {
            return RatFun::zero();
        }
        // A denominator of 1 is already canonical: no common factor, joint
        // content 1, positive lowest coefficient.
        if den.is_one() {
            return RatFun {
                num,
                den: BiLaurent::one(),
            };
        }

        // Shift the denominator to an ordinary polynomial with nonzero
        // constant term; the unit q^shift moves into the numerator.
        let den_slices = den.a_slices();
        let (den_shift, mut den_poly) = laurent_to_qpoly(den_slices.get(&0).unwrap());
        let mut num = num.shift(0, -den_shift);

        // Common q-polynomial factor of numerator and denominator.
        let num_slices = num.a_slices();
        let mut g: QPoly = den_poly.clone();
        for slice in num_slices.values() {
            let (_, p) = laurent_to_qpoly(slice);
            g = qpoly_gcd(&g, &p);
            if g.len() == 1 {
                break;
            }
        }
        if g.len() > 1 {
            den_poly = qpoly_div_exact(&den_poly, &g).expect("gcd divides denominator");
            let mut new_slices = BTreeMap::new();
            for (i, slice) in num_slices {
                let (shift, p) = laurent_to_qpoly(&slice);
                let q = qpoly_div_exact(&p, &g).expect("gcd divides numerator slice");
                let reb = qpoly_to_bilaurent(shift, &q);
                for (&(_, j), c) in &reb.terms {
                    new_slices
                        .entry(i)
                        .or_insert_with(BTreeMap::new)
                        .insert(j, c.clone());
                }
            }
            num = BiLaurent::from_a_slices(new_slices);
        }

        // Joint integer content.
        let c = num.content().gcd(&qpoly_content(&den_poly));
        if !c.is_one() {
            num = num.div_content(&c);
            den_poly = den_poly.iter().map(|x| x / &c).collect();
        }

        // Positive lowest denominator coefficient.
        let lowest = den_poly
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero denominator");
        if lowest.is_negative() {
            num = -&num;
            den_poly = qpoly_scale(&den_poly, &BigInt::from(-1));
        }

        RatFun {
            num,
            den: qpoly_to_bilaurent(0, &den_poly),
        }
    }

    pub fn add(&self, rhs: &RatFun) -> RatFun {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::normalized(&self.num + &rhs.num, BiLaurent::one());
        }
        if self.den == rhs.den {
            return RatFun::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::normalized(num, &self.den * &rhs.den)
    }

    pub fn sub(&self, rhs: &RatFun) -> RatFun {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::normalized(&self.num - &rhs.num, BiLaurent::one());
        }
        if self.den == rhs.den {
            return RatFun::normalized(&self.num - &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RatFun::normalized(num, &self.den * &rhs.den)
    }

    pub fn mul(&self, rhs: &RatFun) -> RatFun {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::normalized(&self.num * &rhs.num, BiLaurent::one());
        }
        RatFun::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn scale_int(&self, n: i64) -> RatFun {
        RatFun::normalized(self.num.scale_int(&BigInt::from(n)), self.den.clone())
    }

    /// Multiplicative inverse. Defined for nonzero values whose numerator is
    /// q-only, or a single power of `a` times a q-only polynomial.
    pub fn inv(&self) -> Result<RatFun> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let slices = self.num.a_slices();
        if slices.len() != 1 {
            return Err(Error::NotInvertible(self.to_string()));
        }
        let (&a_exp, slice) = slices.iter().next().unwrap();
        let num_q = BiLaurent::from_a_slices([(0i64, slice.clone())].into_iter().collect());
        RatFun::new(self.den.shift(-a_exp, 0), num_q)
    }

    /// Exact division `self / rhs`. Succeeds whenever the quotient again has
    /// a q-only denominator; used for framing factors and unknot
    /// normalization where divisibility is guaranteed by construction.
    pub fn div_exact(&self, rhs: &RatFun) -> Result<RatFun> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(RatFun::zero());
        }
        if let Ok(inv) = rhs.inv() {
            return Ok(self.mul(&inv));
        }
        // (n1/d1)/(n2/d2) = (n1*d2) / (n2*d1): divide out the a-dependence of
        // n2 by long division in a with coefficients in Q(q).
        let u = &self.num * &rhs.den;
        let v = &rhs.num * &self.den;
        let quot = bilaurent_div_by_a_poly(&u, &v)?;
        Ok(quot)
    }

    /// Substitute `a -> q^d` (d = N - M), renormalized.
    pub fn substitute_a(&self, d: i64) -> RatFun {
        RatFun::normalized(self.num.substitute_a(d), self.den.clone())
    }

    /// The involution `q -> q^(-1)` with `a` fixed.
    pub fn invert_q(&self) -> RatFun {
        RatFun::normalized(self.num.invert_q(), self.den.invert_q())
    }
}

/// Divide `u` by `v` where `v` genuinely involves `a`, by long division on
/// a-degrees with coefficients in Q(q). The remainder must vanish.
fn bilaurent_div_by_a_poly(u: &BiLaurent, v: &BiLaurent) -> Result<RatFun> {
    let v_slices = v.a_slices();
    let (&v_top, v_lead) = v_slices.iter().next_back().unwrap();
    let v_lead_rf = RatFun::from_poly(BiLaurent::from_a_slices(
        [(0i64, v_lead.clone())].into_iter().collect(),
    ));
    let v_rf = RatFun::from_poly(v.clone());

    let mut rem = RatFun::from_poly(u.clone());
    let mut quot = RatFun::zero();
    loop {
        if rem.is_zero() {
            return Ok(quot);
        }
        let rem_slices = rem.num().a_slices();
        let (&r_top, r_lead) = rem_slices.iter().next_back().unwrap();
        let r_lead_rf = RatFun::new(
            BiLaurent::from_a_slices([(0i64, r_lead.clone())].into_iter().collect()),
            rem.den().clone(),
        )?;
        // Leading-coefficient quotient in Q(q); den of a RatFun is q-only, so
        // this is just a fraction swap.
        let c = r_lead_rf.mul(&v_lead_rf.inv().map_err(|_| {
            Error::NotDivisible(format!("leading coefficient {v_lead_rf} not invertible"))
        })?);
        let term = c.mul(&RatFun::a_power(r_top - v_top));
        quot = quot.add(&term);
        rem = rem.sub(&term.mul(&v_rf));
        // a-degree strictly decreases; if it stops doing so the division is
        // not exact.
        if !rem.is_zero() {
            let (&new_top, _) = rem.num().a_slices().iter().next_back().unwrap();
            if new_top >= r_top {
                return Err(Error::NotDivisible(format!("{u} by {v}")));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Quantum integers
// ---------------------------------------------------------------------------

/// Balanced quantum integer `[s] = (q^s - q^(-s)) / (q - q^(-1))`.
pub fn qint(s: i64) -> BiLaurent {
    if s == 0 {
        return BiLaurent::zero();
    }
    if s < 0 {
        return -&qint(-s);
    }
    let mut out = BiLaurent::zero();
    let mut j = s - 1;
    while j >= -(s - 1) {
        out.insert_add((0, j), BigInt::one());
        j -= 2;
    }
    out
}

/// Quantum factorial `[t]! = [1][2]...[t]`.
pub fn qfact(t: u32) -> BiLaurent {
    let mut out = BiLaurent::one();
    for i in 1..=t as i64 {
        out = &out * &qint(i);
    }
    out
}

/// Quantum binomial `[s over t] = [s][s-1]...[s-t+1] / [t]!`.
///
/// Reduces to a Laurent polynomial whenever `s >= 0`; in particular it is 0
/// for `0 <= s < t`.
pub fn qbinom(s: i64, t: u32) -> RatFun {
    let mut num = BiLaurent::one();
    for i in 0..t as i64 {
        num = &num * &qint(s - i);
        if num.is_zero() {
            return RatFun::zero();
        }
    }
    RatFun::new(num, qfact(t)).expect("quantum factorial is nonzero")
}

// ---------------------------------------------------------------------------
// Printing and parsing
// ---------------------------------------------------------------------------

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Descending by a-exponent, then q-exponent.
        let mut first = true;
        for (&(i, j), c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || (i == 0 && j == 0) {
                factors.push(abs.to_string());
            }
            if i != 0 {
                factors.push(if i == 1 {
                    "a".to_string()
                } else {
                    format!("a^{i}")
                });
            }
            if j != 0 {
                factors.push(if j == 1 {
                    "q".to_string()
                } else {
                    format!("q^{j}")
                });
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            chars: s.chars().peekable(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.peek().map(|c| c.is_whitespace()).unwrap_or(false) {
            self.chars.next();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.chars.peek() == Some(&c) {
            self.chars.next();
            true
        } else {
            false
        }
    }

    fn parse_int(&mut self) -> Result<i64> {
        self.skip_ws();
        let mut s = String::new();
        if self.chars.peek() == Some(&'-') {
            s.push('-');
            self.chars.next();
        }
        while self
            .chars
            .peek()
            .map(|c| c.is_ascii_digit())
            .unwrap_or(false)
        {
            s.push(self.chars.next().unwrap());
        }
        s.parse::<i64>()
            .map_err(|_| Error::Parse(format!("expected integer, got `{s}`")))
    }

    fn parse_bigint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let mut s = String::new();
        while self
            .chars
            .peek()
            .map(|c| c.is_ascii_digit())
            .unwrap_or(false)
        {
            s.push(self.chars.next().unwrap());
        }
        BigInt::from_str(&s).map_err(|_| Error::Parse(format!("expected integer, got `{s}`")))
    }

    /// One monomial, sign excluded: `c`, `c*a^i*q^j`, `a^i`, `q^j`, ...
    fn parse_monomial(&mut self) -> Result<(BigInt, i64, i64)> {
        self.skip_ws();
        let mut coeff = BigInt::one();
        let mut a_exp = 0i64;
        let mut q_exp = 0i64;
        let mut saw_factor = false;
        loop {
            self.skip_ws();
            match self.chars.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff = &coeff * self.parse_bigint()?;
                    saw_factor = true;
                }
                Some('a') => {
                    self.chars.next();
                    let e = if self.eat('^') { self.parse_int()? } else { 1 };
                    a_exp += e;
                    saw_factor = true;
                }
                Some('q') => {
                    self.chars.next();
                    let e = if self.eat('^') { self.parse_int()? } else { 1 };
                    q_exp += e;
                    saw_factor = true;
                }
                _ => break,
            }
            if !self.eat('*') {
                break;
            }
        }
        if !saw_factor {
            return Err(Error::Parse("expected monomial".into()));
        }
        Ok((coeff, a_exp, q_exp))
    }

    fn parse_poly(&mut self) -> Result<BiLaurent> {
        let mut out = BiLaurent::zero();
        let mut sign = if self.eat('-') { -1 } else { 1 };
        loop {
            let (c, i, j) = self.parse_monomial()?;
            out.insert_add((i, j), c * BigInt::from(sign));
            self.skip_ws();
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                break;
            }
        }
        Ok(out)
    }

    fn parse_ratfun(&mut self) -> Result<RatFun> {
        self.skip_ws();
        if self.eat('(') {
            let num = self.parse_poly()?;
            if !self.eat(')') {
                return Err(Error::Parse("expected `)`".into()));
            }
            if self.eat('/') {
                if !self.eat('(') {
                    return Err(Error::Parse("expected `(` after `/`".into()));
                }
                let den = self.parse_poly()?;
                if !self.eat(')') {
                    return Err(Error::Parse("expected `)`".into()));
                }
                return RatFun::new(num, den);
            }
            return Ok(RatFun::from_poly(num));
        }
        Ok(RatFun::from_poly(self.parse_poly()?))
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if let Some(c) = self.chars.peek() {
            return Err(Error::Parse(format!("trailing input at `{c}`")));
        }
        Ok(())
    }
}

impl FromStr for RatFun {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let r = p.parse_ratfun()?;
        p.finish()?;
        Ok(r)
    }
}

impl FromStr for BiLaurent {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let r = p.parse_poly()?;
        p.finish()?;
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    /// circle value (a - a^(-1)) / (q - q^(-1))
    fn delta() -> RatFun {
        rf("(a - a^-1)/(q - q^-1)")
    }

    #[test]
    fn qint_examples() {
        assert_eq!(qint(2).to_string(), "q + q^-1");
        assert!(qint(0).is_zero());
        // [-3] = -(q^2 + 1 + q^-2), by polynomial division of
        // (q^s - q^-s)/(q - q^-1).
        assert_eq!(qint(-3), "-q^2 - 1 - q^-2".parse().unwrap());
        assert_eq!(qint(-5), -&qint(5));
    }

    #[test]
    fn qfact_examples() {
        assert!(qfact(0).is_one());
        assert_eq!(qfact(2), qint(2));
        // [2][3] multiplied out directly.
        assert_eq!(&qint(2) * &qint(3), qfact(3));
        assert_eq!(qfact(3).to_string(), "q^3 + 2*q + 2*q^-1 + q^-3");
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom(2, 1), RatFun::from_poly(qint(2)));
        // Brute-force product/division oracle for [4 over 2]:
        // [4][3]/[2]! computed as a raw fraction must normalize to the
        // Laurent polynomial below.
        let raw = RatFun::new(&qint(4) * &qint(3), qfact(2)).unwrap();
        assert_eq!(raw, rf("q^4 + q^2 + 2 + q^-2 + q^-4"));
        assert_eq!(qbinom(4, 2), raw);
        assert!(qbinom(1, 2).is_zero());
        // Laurent whenever s >= 0.
        for s in 0..=8i64 {
            for t in 0..=8u32 {
                assert!(qbinom(s, t).is_polynomial(), "[{s} over {t}]");
            }
        }
    }

    #[test]
    fn qbinom_pascal() {
        // [s over t] = q^t [s-1 over t] + q^(t-s) [s-1 over t-1]
        for s in 0..=8i64 {
            for t in 1..=s as u32 {
                let lhs = qbinom(s, t);
                let rhs = qbinom(s - 1, t)
                    .mul(&RatFun::q_power(t as i64))
                    .add(&qbinom(s - 1, t - 1).mul(&RatFun::q_power(t as i64 - s)));
                assert_eq!(lhs, rhs, "Pascal fails at ({s},{t})");
            }
        }
    }

    #[test]
    fn qint_product_identity() {
        // [s+1][s-1] = [s]^2 - 1
        for s in -10..=10i64 {
            let lhs = &qint(s + 1) * &qint(s - 1);
            let rhs = &(&qint(s) * &qint(s)) - &BiLaurent::one();
            assert_eq!(lhs, rhs, "identity fails at s={s}");
        }
    }

    #[test]
    fn ratfun_field_ops() {
        let d = delta();
        assert!(d.add(&d.neg()).is_zero());
        let half = RatFun::new(BiLaurent::one(), qint(2)).unwrap();
        assert!(half.mul(&RatFun::from_poly(qint(2))).is_one());
        // ((a - a^-1)/(q - q^-1)) * (q - q^-1) = a - a^-1 by cancellation.
        let z = rf("q - q^-1");
        assert_eq!(d.mul(&z), rf("a - a^-1"));
    }

    #[test]
    fn substitute_a_examples() {
        let d = delta();
        assert_eq!(d.substitute_a(2), RatFun::from_poly(qint(2)));
        assert!(RatFun::a_power(1).substitute_a(0).is_one());
        let bubble = rf("(a*q^-1 - a^-1*q)/(q - q^-1)");
        assert!(bubble.substitute_a(1).is_zero());
    }

    #[test]
    fn invert_q_examples() {
        let two = RatFun::from_poly(qint(2));
        assert_eq!(two.invert_q(), two);
        assert_eq!(
            rf("a*q^2").invert_q(),
            rf("a*q^-2")
        );
        let d = delta();
        assert_eq!(d.invert_q(), d.neg());
        // Involution.
        let x = rf("(a^2*q^3 - 2*a + 7*q^-2)/(q^2 + 1)");
        assert_eq!(x.invert_q().invert_q(), x);
    }

    #[test]
    fn substitution_is_multiplicative() {
        let x = rf("(a*q - 3)/(q^2 + 1)");
        let y = rf("(a^-2 + q^-1)/(q - q^-1)");
        for d in [-2i64, 0, 1, 3] {
            assert_eq!(
                x.mul(&y).substitute_a(d),
                x.substitute_a(d).mul(&y.substitute_a(d))
            );
        }
    }

    #[test]
    fn div_exact_monomial_and_general() {
        let d = delta();
        let x = d.mul(&rf("a^2*q^-1")).neg();
        assert_eq!(x.div_exact(&d).unwrap(), rf("-a^2*q^-1"));
        // Non-monomial quotient.
        let p = d.mul(&rf("a*q^2 + a^-1"));
        assert_eq!(p.div_exact(&d).unwrap(), rf("a*q^2 + a^-1"));
        assert!(RatFun::one().div_exact(&RatFun::zero()).is_err());
    }

    #[test]
    fn inv_errors() {
        assert_eq!(RatFun::zero().inv(), Err(Error::DivisionByZero));
        assert!(rf("a + q").inv().is_err());
        assert_eq!(rf("a*q^2").inv().unwrap(), rf("a^-1*q^-2"));
    }

    #[test]
    fn display_round_trip() {
        for s in [
            "a*q^-1 - a^-1*q",
            "(a - a^-1)/(q - q^-1)",
            "0",
            "-3*a^2*q^-5 + 2",
            "(2*a^3 - q^4 + 1)/(q^2 + 3*q + 1)",
        ] {
            let x: RatFun = s.parse().unwrap();
            let y: RatFun = x.to_string().parse().unwrap();
            assert_eq!(x, y);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_bilaurent() -> impl Strategy<Value = BiLaurent> {
            proptest::collection::vec(((-3i64..4, -4i64..5), -5i64..6), 0..6).prop_map(|v| {
                let mut out = BiLaurent::zero();
                for ((i, j), c) in v {
                    out.insert_add((i, j), BigInt::from(c));
                }
                out
            })
        }

        fn arb_qden() -> impl Strategy<Value = BiLaurent> {
            proptest::collection::vec((-4i64..5, -5i64..6), 1..4).prop_map(|v| {
                let mut out = BiLaurent::zero();
                for (j, c) in v {
                    out.insert_add((0, j), BigInt::from(c));
                }
                if out.is_zero() {
                    BiLaurent::one()
                } else {
                    out
                }
            })
        }

        proptest! {
            #[test]
            fn ring_axioms(x in arb_bilaurent(), y in arb_bilaurent(), z in arb_bilaurent()) {
                prop_assert_eq!(&x + &y, &y + &x);
                prop_assert_eq!(&x * &y, &y * &x);
                prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
                prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
                prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            }

            #[test]
            fn canonical_form_idempotent(n in arb_bilaurent(), d in arb_qden()) {
                let r = RatFun::new(n, d).unwrap();
                let r2 = RatFun::new(r.num().clone(), r.den().clone()).unwrap();
                prop_assert_eq!(&r, &r2);
            }

            #[test]
            fn equal_values_equal_forms(n in arb_bilaurent(), d in arb_qden(), m in arb_qden()) {
                // n/d constructed directly and as (n*m)/(d*m) must agree.
                let r1 = RatFun::new(n.clone(), d.clone()).unwrap();
                let r2 = RatFun::new(&n * &m, &d * &m).unwrap();
                prop_assert_eq!(r1, r2);
            }

            #[test]
            fn invert_q_involution(n in arb_bilaurent(), d in arb_qden()) {
                let r = RatFun::new(n, d).unwrap();
                prop_assert_eq!(r.invert_q().invert_q(), r);
            }

            #[test]
            fn poly_display_roundtrip(x in arb_bilaurent(), d in arb_qden()) {
                let r = RatFun::new(x, d).unwrap();
                let back: RatFun = r.to_string().parse().unwrap();
                prop_assert_eq!(back, r);
            }
        }
    }
}
