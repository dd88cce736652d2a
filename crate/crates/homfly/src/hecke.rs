//! The Iwahori-Hecke algebra `H_K(q)` in the standard basis `{H_w}`, with
//! generators satisfying `H_i^2 = (q - q^(-1)) H_i + 1` and the braid
//! relations. Products expand the right factor through its canonical
//! reduced word; the basis rule `H_w H_i = H_{w s_i}` (length up) or
//! `(q - q^(-1)) H_w + H_{w s_i}` (length down) forces everything else.

use std::collections::BTreeMap;
use std::fmt;

use crate::perm::Permutation;
use crate::ring::RatFun;
use crate::{Error, Result};

/// Sparse linear combination of basis elements `H_w` with `RatFun`
/// coefficients. All permutations share the strand count `K`; no zero
/// coefficient is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElt {
    k: usize,
    terms: BTreeMap<Permutation, RatFun>,
}

impl HeckeElt {
    pub fn zero(k: usize) -> Self {
        HeckeElt {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: usize) -> Self {
        HeckeElt::from_term(Permutation::identity(k), RatFun::one())
    }

    pub fn from_term(w: Permutation, coeff: RatFun) -> Self {
        let k = w.degree();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(w, coeff);
        }
        HeckeElt { k, terms }
    }

    /// `H_i` for `sign = +1`, its inverse `H_i - (q - q^(-1))` for `-1`.
    pub fn gen(k: usize, i: usize, sign: i8) -> Result<Self> {
        if i == 0 || i >= k {
            return Err(Error::IndexOutOfRange {
                index: i,
                context: format!("generator of H_{k}"),
            });
        }
        let s = Permutation::transposition(k, i)?;
        let mut out = HeckeElt::from_term(s, RatFun::one());
        if sign < 0 {
            // H_i^(-1) = H_i - (q - q^(-1)), forced by the quadratic relation.
            out.insert_add(
                Permutation::identity(k),
                RatFun::q_power(-1).sub(&RatFun::q_power(1)),
            );
        }
        Ok(out)
    }

    pub fn strands(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &RatFun)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> RatFun {
        self.terms.get(w).cloned().unwrap_or_else(RatFun::zero)
    }

    fn insert_add(&mut self, w: Permutation, coeff: RatFun) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let merged = e.get().add(&coeff);
                if merged.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = merged;
                }
            }
        }
    }

    pub fn add(&self, rhs: &HeckeElt) -> Result<HeckeElt> {
        self.check_size(rhs)?;
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.insert_add(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &HeckeElt) -> Result<HeckeElt> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> HeckeElt {
        HeckeElt {
            k: self.k,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &RatFun) -> HeckeElt {
        if c.is_zero() {
            return HeckeElt::zero(self.k);
        }
        if c.is_one() {
            return self.clone();
        }
        HeckeElt {
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x.mul(c)))
                .collect(),
        }
    }

    fn check_size(&self, rhs: &HeckeElt) -> Result<()> {
        if self.k != rhs.k {
            return Err(Error::SizeMismatch(format!(
                "H_{} with H_{}",
                self.k, rhs.k
            )));
        }
        Ok(())
    }

    /// Right multiplication by the generator `H_i`.
    pub fn mul_gen(&self, i: usize) -> Result<HeckeElt> {
        if i == 0 || i >= self.k {
            return Err(Error::IndexOutOfRange {
                index: i,
                context: format!("generator of H_{}", self.k),
            });
        }
        let z = RatFun::q_power(1).sub(&RatFun::q_power(-1));
        let mut out = HeckeElt::zero(self.k);
        for (w, c) in &self.terms {
            let ws = w.right_mul_s(i);
            if w.has_ascent(i) {
                out.insert_add(ws, c.clone());
            } else {
                out.insert_add(w.clone(), c.mul(&z));
                out.insert_add(ws, c.clone());
            }
        }
        Ok(out)
    }

    /// Product in `H_K(q)`, expanding the right factor through canonical
    /// reduced words per basis term.
    pub fn mul(&self, rhs: &HeckeElt) -> Result<HeckeElt> {
        self.check_size(rhs)?;
        let mut out = HeckeElt::zero(self.k);
        for (v, d) in &rhs.terms {
            let mut part = self.scale(d);
            for i in v.reduced_word() {
                part = part.mul_gen(i)?;
            }
            for (w, c) in part.terms {
                out.insert_add(w, c);
            }
        }
        Ok(out)
    }

    /// Image under the algebra embedding shifting strand `i` to `i+offset`.
    pub fn embed(&self, offset: usize, k_new: usize) -> Result<HeckeElt> {
        let mut out = HeckeElt::zero(k_new);
        for (w, c) in &self.terms {
            out.insert_add(w.embed(offset, k_new)?, c.clone());
        }
        Ok(out)
    }

    /// Apply a function to every coefficient, pruning zeros.
    pub fn map_coeffs(&self, f: impl Fn(&RatFun) -> RatFun) -> HeckeElt {
        let mut out = HeckeElt::zero(self.k);
        for (w, c) in &self.terms {
            out.insert_add(w.clone(), f(c));
        }
        out
    }
}

/// Image of a signed braid word: the product of `gen(K, |i|, sign(i))` in
/// word order. Positive letters are positive crossings.
pub fn braid_to_hecke(word: &[i32], k: usize) -> Result<HeckeElt> {
    let mut out = HeckeElt::one(k);
    for &letter in word {
        if letter == 0 {
            return Err(Error::IndexOutOfRange {
                index: 0,
                context: "braid word letter".into(),
            });
        }
        let i = letter.unsigned_abs() as usize;
        let g = HeckeElt::gen(k, i, if letter > 0 { 1 } else { -1 })?;
        out = out.mul(&g)?;
    }
    Ok(out)
}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut entries: Vec<(&Permutation, &RatFun)> = self.terms.iter().collect();
        entries.sort_by_key(|(w, _)| (w.length(), (*w).clone()));
        for (n, (w, c)) in entries.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) * H{w}")?;
        }
        Ok(())
    }
}
