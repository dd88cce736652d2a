//! Permutations of `S_K`, reduced words, Young diagrams, and the tableau
//! sorting permutations used to build idempotents and cabled braids.

use std::fmt;

use crate::{Error, Result};

/// Element of `S_K`, stored as images: position `i` maps to `images[i-1]`
/// (1-based values).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (1..=k).collect(),
        }
    }

    /// Build from 1-based images; must be a bijection on `{1..K}`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &v in &images {
            if v == 0 || v > k || seen[v - 1] {
                return Err(Error::Parse(format!("not a bijection: {images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The adjacent transposition `s_i` in `S_K`, `1 <= i < K`.
    pub fn transposition(k: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= k {
            return Err(Error::IndexOutOfRange {
                index: i,
                context: format!("transposition in S_{k}"),
            });
        }
        let mut images: Vec<usize> = (1..=k).collect();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` with 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `(w ∘ v)(i) = w(v(i))`.
    pub fn compose(&self, v: &Permutation) -> Result<Permutation> {
        if self.degree() != v.degree() {
            return Err(Error::SizeMismatch(format!(
                "compose S_{} with S_{}",
                self.degree(),
                v.degree()
            )));
        }
        Ok(Permutation {
            images: v.images.iter().map(|&i| self.images[i - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Coxeter length = inversion count.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// True iff `len(w ∘ s_i) > len(w)`, i.e. `w(i) < w(i+1)`.
    pub fn has_ascent(&self, i: usize) -> bool {
        self.images[i - 1] < self.images[i]
    }

    /// Right multiplication by `s_i`: swaps the images at positions `i, i+1`.
    pub fn right_mul_s(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Canonical reduced word: repeatedly move the largest misplaced value
    /// into position (lexicographic bubble factorization). Multiplying
    /// `s_{w1} ∘ s_{w2} ∘ ...` in word order reproduces the permutation.
    pub fn reduced_word(&self) -> Vec<usize> {
        let k = self.degree();
        let mut v = self.clone();
        let mut suffix = Vec::with_capacity(self.length());
        for val in (2..=k).rev() {
            let mut pos = v.images.iter().position(|&x| x == val).unwrap() + 1;
            while pos < val {
                suffix.push(pos);
                v = v.right_mul_s(pos);
                pos += 1;
            }
        }
        debug_assert!(v.is_identity());
        suffix.reverse();
        suffix
    }

    /// Fixes the last strand, restricting to `S_{K-1}`. Panics if not fixed.
    pub fn restrict(&self) -> Permutation {
        let k = self.degree();
        assert_eq!(self.images[k - 1], k, "last strand not fixed");
        Permutation {
            images: self.images[..k - 1].to_vec(),
        }
    }

    /// Extend to `S_{K'}` shifting strand `i` to `i + offset`; strands
    /// outside the window are fixed.
    pub fn embed(&self, offset: usize, k_new: usize) -> Result<Permutation> {
        if offset + self.degree() > k_new {
            return Err(Error::SizeMismatch(format!(
                "embed S_{} at offset {offset} into S_{k_new}",
                self.degree()
            )));
        }
        let mut images: Vec<usize> = (1..=k_new).collect();
        for (i, &v) in self.images.iter().enumerate() {
            images[offset + i] = v + offset;
        }
        Ok(Permutation { images })
    }

    /// Cycles of the permutation, as 1-based strand indices.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let k = self.degree();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for start in 1..=k {
            if seen[start - 1] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start - 1] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur - 1] = true;
                cyc.push(cur);
                cur = self.apply(cur);
            }
            out.push(cyc);
        }
        out
    }

    /// All of `S_K` in a deterministic order.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (1..=k).collect();
        loop {
            out.push(Permutation {
                images: images.clone(),
            });
            // next lexicographic permutation
            let n = images.len();
            if n < 2 {
                break;
            }
            let mut i = n - 1;
            while i > 0 && images[i - 1] >= images[i] {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            let mut j = n - 1;
            while images[j] <= images[i - 1] {
                j -= 1;
            }
            images.swap(i - 1, j);
            images[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Young diagram: weakly decreasing positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        for w in rows.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!(
                    "rows not weakly decreasing: {rows:?}"
                )));
            }
        }
        if rows.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero row in {rows:?}")));
        }
        Ok(Partition { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Node count.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Column lengths = rows of the transpose.
    pub fn columns(&self) -> Vec<usize> {
        if self.rows.is_empty() {
            return Vec::new();
        }
        let width = self.rows[0];
        (1..=width)
            .map(|c| self.rows.iter().filter(|&&r| r >= c).count())
            .collect()
    }

    pub fn transpose(&self) -> Partition {
        Partition {
            rows: self.columns(),
        }
    }

    /// `b` rows of length `a` each (the box-shaped diagram).
    pub fn boxed(rows: usize, cols: usize) -> Result<Partition> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidPartition("empty box".into()));
        }
        Partition::new(vec![cols; rows])
    }

    /// Single row `(K)`.
    pub fn row(k: usize) -> Partition {
        Partition { rows: vec![k] }
    }

    /// Single column `(1,...,1)`.
    pub fn column(k: usize) -> Partition {
        Partition { rows: vec![1; k] }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let cleaned = s.trim().trim_start_matches('[').trim_end_matches(']');
        let rows: Vec<usize> = cleaned
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad row `{p}` in `{s}`")))
            })
            .collect::<Result<_>>()?;
        Partition::new(rows)
    }
}

/// The permutation `w` with `w(T_down(c)) = T_right(c)` for every cell `c`,
/// where `T_right` fills `1..K` rows-first and `T_down` fills columns-first.
pub fn sorting_permutation(lambda: &Partition) -> Permutation {
    let k = lambda.size();
    let cols = lambda.columns();
    let mut images = vec![0usize; k];
    // Fill both tableaux cell by cell: cell (r, c) with 0-based indices.
    let mut rows_first = vec![vec![0usize; 0]; lambda.rows().len()];
    let mut n = 1;
    for (r, &len) in lambda.rows().iter().enumerate() {
        for _ in 0..len {
            rows_first[r].push(n);
            n += 1;
        }
    }
    let mut cols_first: Vec<Vec<usize>> = lambda
        .rows()
        .iter()
        .map(|&len| vec![0usize; len])
        .collect();
    n = 1;
    for (c, &len) in cols.iter().enumerate() {
        for row in cols_first.iter_mut().take(len) {
            row[c] = n;
            n += 1;
        }
    }
    for (r, row) in rows_first.iter().enumerate() {
        for (c, &val) in row.iter().enumerate() {
            images[cols_first[r][c] - 1] = val;
        }
    }
    Permutation::from_images(images).expect("tableau fillings are bijections")
}

/// A positive reduced word realizing the transposition of the adjacent
/// width-`p` and width-`r` blocks of flattened strands, `p*r` letters long.
/// `i` is the 1-based crossing position in the widths list.
pub fn block_permutation_word(widths: &[usize], i: usize) -> Result<Vec<usize>> {
    if i == 0 || i >= widths.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            context: format!("block crossing among {} cables", widths.len()),
        });
    }
    let offset: usize = widths[..i - 1].iter().sum();
    let p = widths[i - 1];
    let r = widths[i];
    let mut word = Vec::with_capacity(p * r);
    for c in 0..p {
        for d in 0..r {
            word.push(offset + (p - c) + d);
        }
    }
    Ok(word)
}

/// Multiply a word of adjacent transpositions in `S_K` (word order).
pub fn word_to_permutation(word: &[usize], k: usize) -> Result<Permutation> {
    let mut w = Permutation::identity(k);
    for &i in word {
        w = w.compose(&Permutation::transposition(k, i)?)?;
    }
    Ok(w)
}
