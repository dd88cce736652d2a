//! Green-red webs as words of generators over boundary objects, evaluated
//! into Hecke algebras by cable explosion.
//!
//! A boundary object is a list of labeled, colored edges; a word is a
//! sequence of slices, each applying one generator (merge, split, crossing)
//! at an entry position with identities elsewhere. Evaluation sends the
//! identity of a label-k color-c edge to the clasp `CL^c_k` on its cable
//! range, merges to the merged clasp with scalar 1, splits to the quantum
//! binomial `[k+l over l]` times the clasp, and crossings to the
//! clasp-sandwiched block permutation braid. Webs are never compared as
//! planar graphs; two webs are equal exactly when their evaluations agree.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::clasp::{clasp_closed_with_limit, ClaspColor};
use crate::hecke::{braid_to_hecke, HeckeElt};
use crate::perm::block_permutation_word;
use crate::ring::{qbinom, qint, RatFun};
use crate::{Error, Result, DEFAULT_MAX_CABLE};

// Identity morphisms (products of edge clasps) recur across every relation
// instance sharing an object; memoize them.
fn object_cache() -> &'static RwLock<HashMap<WebObject, HeckeElt>> {
    static CACHE: OnceLock<RwLock<HashMap<WebObject, HeckeElt>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeColor {
    Black,
    Green,
    Red,
}

impl EdgeColor {
    pub fn swap(self) -> EdgeColor {
        match self {
            EdgeColor::Black => EdgeColor::Black,
            EdgeColor::Green => EdgeColor::Red,
            EdgeColor::Red => EdgeColor::Green,
        }
    }

    fn clasp_color(self) -> Option<ClaspColor> {
        match self {
            EdgeColor::Black => None,
            EdgeColor::Green => Some(ClaspColor::Green),
            EdgeColor::Red => Some(ClaspColor::Red),
        }
    }
}

/// One boundary edge: a label and a color. Labels 0 and 1 are black; labels
/// at least 2 are green or red.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub label: usize,
    pub color: EdgeColor,
}

/// Boundary sequence of edges; the cable size is the label sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WebObject {
    entries: Vec<Edge>,
}

impl WebObject {
    /// Labels of 0 or 1 are aliased to black; labels of 2 or more must be
    /// green or red.
    pub fn new(entries: Vec<(usize, EdgeColor)>) -> Result<Self> {
        let mut out = Vec::with_capacity(entries.len());
        for (label, color) in entries {
            out.push(Edge::normalized(label, color)?);
        }
        Ok(WebObject { entries: out })
    }

    /// `k` black strands.
    pub fn strands(k: usize) -> Self {
        WebObject {
            entries: vec![
                Edge {
                    label: 1,
                    color: EdgeColor::Black,
                };
                k
            ],
        }
    }

    pub fn entries(&self) -> &[Edge] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total cable size.
    pub fn cable_size(&self) -> usize {
        self.entries.iter().map(|e| e.label).sum()
    }

    fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.entries.len());
        let mut acc = 0;
        for e in &self.entries {
            out.push(acc);
            acc += e.label;
        }
        out
    }

    pub fn color_swap(&self) -> WebObject {
        WebObject {
            entries: self
                .entries
                .iter()
                .map(|e| Edge {
                    label: e.label,
                    color: e.color.swap(),
                })
                .collect(),
        }
    }

    /// The identity morphism of the object: the product of its edge clasps.
    fn clasp_product(&self, limit: usize) -> Result<HeckeElt> {
        let k = self.cable_size();
        if k > limit {
            return Err(Error::LimitExceeded { got: k, limit });
        }
        if let Some(hit) = object_cache().read().unwrap().get(self) {
            return Ok(hit.clone());
        }
        let mut out = HeckeElt::one(k);
        let offsets = self.offsets();
        for (e, &off) in self.entries.iter().zip(&offsets) {
            if e.label >= 2 {
                let color = e.color.clasp_color().expect("validated at construction");
                let cl = clasp_closed_with_limit(e.label, color, limit)?.embed(off, k)?;
                out = out.mul(&cl)?;
            }
        }
        object_cache()
            .write()
            .unwrap()
            .insert(self.clone(), out.clone());
        Ok(out)
    }
}

impl Edge {
    fn normalized(label: usize, color: EdgeColor) -> Result<Edge> {
        if label <= 1 {
            Ok(Edge {
                label,
                color: EdgeColor::Black,
            })
        } else if color == EdgeColor::Black {
            Err(Error::MalformedWeb(format!(
                "label {label} edge must be green or red"
            )))
        } else {
            Ok(Edge { label, color })
        }
    }

    /// Whether this edge may take part in a colored generator of color `c`:
    /// labels up to 1 have any color, larger labels must match.
    fn compatible(&self, c: EdgeColor) -> bool {
        self.label <= 1 || self.color == c
    }
}

impl fmt::Display for WebObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let tag = match e.color {
                EdgeColor::Black => "",
                EdgeColor::Green => "g",
                EdgeColor::Red => "r",
            };
            write!(f, "{}{}", e.label, tag)?;
        }
        write!(f, ")")
    }
}

/// One generator applied at an entry position (1-based), identity elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slice {
    /// Merge entries `pos`, `pos+1` into one edge of the given color.
    Merge { pos: usize, color: EdgeColor },
    /// Split entry `pos` into `(left, label - left)`.
    Split { pos: usize, left: usize },
    /// Swap entries `pos`, `pos+1` with a signed cabled crossing.
    Crossing { pos: usize, sign: i8 },
}

/// A word of slices with its chain of intermediate objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WebWord {
    objects: Vec<WebObject>,
    slices: Vec<Slice>,
}

impl WebWord {
    pub fn identity(domain: WebObject) -> Self {
        WebWord {
            objects: vec![domain],
            slices: Vec::new(),
        }
    }

    pub fn domain(&self) -> &WebObject {
        &self.objects[0]
    }

    pub fn codomain(&self) -> &WebObject {
        self.objects.last().unwrap()
    }

    pub fn has_crossing(&self) -> bool {
        self.slices
            .iter()
            .any(|s| matches!(s, Slice::Crossing { .. }))
    }

    fn entry(&self, pos: usize) -> Result<Edge> {
        let obj = self.codomain();
        if pos == 0 || pos > obj.len() {
            return Err(Error::IndexOutOfRange {
                index: pos,
                context: format!("entry of {obj}"),
            });
        }
        Ok(obj.entries[pos - 1])
    }

    pub fn merge(mut self, pos: usize, color: EdgeColor) -> Result<Self> {
        let left = self.entry(pos)?;
        let right = self.entry(pos + 1)?;
        if !left.compatible(color) || !right.compatible(color) {
            return Err(Error::MalformedWeb(format!(
                "merge of {}{:?} and {}{:?} into {:?}",
                left.label, left.color, right.label, right.color, color
            )));
        }
        let merged = Edge::normalized(left.label + right.label, color)?;
        let mut entries = self.codomain().entries.clone();
        entries[pos - 1] = merged;
        entries.remove(pos);
        self.objects.push(WebObject { entries });
        self.slices.push(Slice::Merge { pos, color });
        Ok(self)
    }

    pub fn split(mut self, pos: usize, left: usize) -> Result<Self> {
        let edge = self.entry(pos)?;
        if left > edge.label {
            return Err(Error::MalformedWeb(format!(
                "split of label {} into left part {left}",
                edge.label
            )));
        }
        let l = Edge::normalized(left, edge.color)?;
        let r = Edge::normalized(edge.label - left, edge.color)?;
        let mut entries = self.codomain().entries.clone();
        entries[pos - 1] = l;
        entries.insert(pos, r);
        self.objects.push(WebObject { entries });
        self.slices.push(Slice::Split { pos, left });
        Ok(self)
    }

    pub fn crossing(mut self, pos: usize, sign: i8) -> Result<Self> {
        let left = self.entry(pos)?;
        let right = self.entry(pos + 1)?;
        let mut entries = self.codomain().entries.clone();
        entries[pos - 1] = right;
        entries[pos] = left;
        self.objects.push(WebObject { entries });
        self.slices.push(Slice::Crossing { pos, sign });
        Ok(self)
    }

    pub fn color_swap(&self) -> Result<WebWord> {
        if self.has_crossing() {
            return Err(Error::ColorSwapWithCrossing);
        }
        let mut out = WebWord::identity(self.domain().color_swap());
        for s in &self.slices {
            out = match *s {
                Slice::Merge { pos, color } => out.merge(pos, color.swap())?,
                Slice::Split { pos, left } => out.split(pos, left)?,
                Slice::Crossing { .. } => unreachable!(),
            };
        }
        Ok(out)
    }

    /// Evaluate into the Hecke algebra of the cable.
    ///
    /// With `absorb` set, the clasp product of an object refining the last
    /// clasped object is skipped: the coarser clasps absorb the finer ones
    /// (`CL_K (CL_J ⊗ 1) = CL_K`), so the product is unchanged. The
    /// unabsorbed path is kept for cross-checking.
    fn eval_with(&self, limit: usize, absorb: bool) -> Result<HeckeElt> {
        let mut acc = self.objects[0].clasp_product(limit)?;
        let mut last: Option<&WebObject> = Some(&self.objects[0]);
        let mut scalar = RatFun::one();
        for (n, slice) in self.slices.iter().enumerate() {
            let before = &self.objects[n];
            let after = &self.objects[n + 1];
            match *slice {
                Slice::Merge { .. } => {}
                Slice::Split { pos, left } => {
                    let label = before.entries[pos - 1].label;
                    scalar = scalar.mul(&qbinom(label as i64, (label - left) as u32));
                }
                Slice::Crossing { pos, sign } => {
                    let mut widths: Vec<usize> = before.entries.iter().map(|e| e.label).collect();
                    let k = before.cable_size();
                    // A negative crossing is the inverse of the positive
                    // crossing coming from the swapped widths.
                    let braid: Vec<i32> = if sign >= 0 {
                        let word = block_permutation_word(&widths, pos)?;
                        word.iter().map(|&i| i as i32).collect()
                    } else {
                        widths.swap(pos - 1, pos);
                        let word = block_permutation_word(&widths, pos)?;
                        word.iter().rev().map(|&i| -(i as i32)).collect()
                    };
                    acc = acc.mul(&braid_to_hecke(&braid, k)?)?;
                    last = None;
                }
            }
            if absorb && matches!(last, Some(l) if refines(after, l)) {
                continue;
            }
            acc = acc.mul(&after.clasp_product(limit)?)?;
            last = Some(after);
        }
        Ok(acc.scale(&scalar))
    }

    fn eval(&self, limit: usize) -> Result<HeckeElt> {
        self.eval_with(limit, true)
    }
}

/// True when every edge of `fine` lies inside a single edge of `coarse`,
/// with matching color wherever the fine edge has label at least 2. Then
/// the clasp product of `coarse` absorbs that of `fine` on both sides.
fn refines(fine: &WebObject, coarse: &WebObject) -> bool {
    let coarse_offsets = coarse.offsets();
    let fine_offsets = fine.offsets();
    'edges: for (e, &off) in fine.entries.iter().zip(&fine_offsets) {
        if e.label == 0 {
            continue;
        }
        for (c, &coff) in coarse.entries.iter().zip(&coarse_offsets) {
            if coff <= off && off + e.label <= coff + c.label {
                if e.label >= 2 && e.color != c.color {
                    return false;
                }
                continue 'edges;
            }
        }
        return false;
    }
    true
}

/// Formal sum of words with `RatFun` scalars. All terms share a domain and
/// codomain; invalid rungs (negative labels) are dropped as zero.
#[derive(Debug, Clone)]
pub struct WebExpr {
    domain: WebObject,
    codomain: WebObject,
    terms: Vec<(RatFun, WebWord)>,
}

impl WebExpr {
    pub fn from_word(word: WebWord) -> Self {
        WebExpr {
            domain: word.domain().clone(),
            codomain: word.codomain().clone(),
            terms: vec![(RatFun::one(), word)],
        }
    }

    pub fn identity(obj: WebObject) -> Self {
        WebExpr::from_word(WebWord::identity(obj))
    }

    pub fn zero(domain: WebObject, codomain: WebObject) -> Self {
        WebExpr {
            domain,
            codomain,
            terms: Vec::new(),
        }
    }

    pub fn is_zero_expr(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn domain(&self) -> &WebObject {
        &self.domain
    }

    pub fn codomain(&self) -> &WebObject {
        &self.codomain
    }

    pub fn scale(mut self, c: &RatFun) -> Self {
        if c.is_zero() {
            self.terms.clear();
            return self;
        }
        for (s, _) in self.terms.iter_mut() {
            *s = s.mul(c);
        }
        self
    }

    pub fn add(mut self, rhs: &WebExpr) -> Result<Self> {
        if self.domain != rhs.domain || self.codomain != rhs.codomain {
            return Err(Error::MalformedWeb(format!(
                "sum of webs {} -> {} and {} -> {}",
                self.domain, self.codomain, rhs.domain, rhs.codomain
            )));
        }
        self.terms.extend(rhs.terms.iter().cloned());
        Ok(self)
    }

    /// Composition: `self` first, `rhs` stacked on top.
    pub fn then(&self, rhs: &WebExpr) -> Result<WebExpr> {
        if self.codomain != rhs.domain {
            return Err(Error::MalformedWeb(format!(
                "composition mismatch: {} vs {}",
                self.codomain, rhs.domain
            )));
        }
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (c1, w1) in &self.terms {
            for (c2, w2) in &rhs.terms {
                let mut word = w1.clone();
                for s in &w2.slices {
                    word = match *s {
                        Slice::Merge { pos, color } => word.merge(pos, color)?,
                        Slice::Split { pos, left } => word.split(pos, left)?,
                        Slice::Crossing { pos, sign } => word.crossing(pos, sign)?,
                    };
                }
                terms.push((c1.mul(c2), word));
            }
        }
        Ok(WebExpr {
            domain: self.domain.clone(),
            codomain: rhs.codomain.clone(),
            terms,
        })
    }

    pub fn color_swap(&self) -> Result<WebExpr> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, w) in &self.terms {
            terms.push((c.clone(), w.color_swap()?));
        }
        Ok(WebExpr {
            domain: self.domain.color_swap(),
            codomain: self.codomain.color_swap(),
            terms,
        })
    }
}

/// Evaluate a web expression in `H_(K')(q)` where `K'` is the cable size.
pub fn eval_web(expr: &WebExpr) -> Result<HeckeElt> {
    eval_web_with_limit(expr, DEFAULT_MAX_CABLE)
}

pub fn eval_web_with_limit(expr: &WebExpr, limit: usize) -> Result<HeckeElt> {
    let k = expr.domain.cable_size();
    if !expr.terms.is_empty() && expr.codomain.cable_size() != k {
        return Err(Error::MalformedWeb(format!(
            "cable size changes from {} to {}",
            k,
            expr.codomain.cable_size()
        )));
    }
    if k > limit {
        return Err(Error::LimitExceeded { got: k, limit });
    }
    let mut out = HeckeElt::zero(k);
    for (c, w) in &expr.terms {
        out = out.add(&w.eval(limit)?.scale(c))?;
    }
    Ok(out)
}

/// The F-ladder rung: transfer `j` cable strands from entry `pos` to entry
/// `pos+1`; `color` is the color of the enlarged recipient edge. Returns the
/// zero expression when the transfer would create a negative label.
pub fn rung_f(obj: &WebObject, pos: usize, j: usize, color: EdgeColor) -> Result<WebExpr> {
    rung(obj, pos, j, color, true)
}

/// The E-ladder rung: transfer `j` cable strands from entry `pos+1` to
/// entry `pos`.
pub fn rung_e(obj: &WebObject, pos: usize, j: usize, color: EdgeColor) -> Result<WebExpr> {
    rung(obj, pos, j, color, false)
}

fn rung(obj: &WebObject, pos: usize, j: usize, color: EdgeColor, forward: bool) -> Result<WebExpr> {
    if pos == 0 || pos + 1 > obj.len() {
        return Err(Error::IndexOutOfRange {
            index: pos,
            context: format!("rung on {obj}"),
        });
    }
    if j == 0 {
        return Ok(WebExpr::identity(obj.clone()));
    }
    let src = if forward {
        obj.entries[pos - 1]
    } else {
        obj.entries[pos]
    };
    let dst = if forward {
        obj.entries[pos]
    } else {
        obj.entries[pos - 1]
    };
    if j > src.label {
        // The split would produce a negative label: the rung is zero. The
        // recorded codomain keeps the cable size balanced by crediting the
        // whole source to the recipient; the expression carries no terms,
        // so only its shape matters to callers that skip zero summands.
        let mut entries: Vec<(usize, EdgeColor)> = obj
            .entries
            .iter()
            .map(|e| (e.label, e.color))
            .collect();
        let (si, di) = if forward { (pos - 1, pos) } else { (pos, pos - 1) };
        entries[di] = (dst.label + src.label, color);
        entries[si] = (0, EdgeColor::Black);
        let codomain = WebObject::new(entries)?;
        return Ok(WebExpr::zero(obj.clone(), codomain));
    }
    // Mixed rungs (differently colored edges of label >= 2 on both sides)
    // exist only for j = 1; monochromatic rungs allow any j. With the
    // recipient color given, both cases reduce to slice validity.
    let word = if forward {
        WebWord::identity(obj.clone())
            .split(pos, src.label - j)?
            .merge(pos + 1, color)?
    } else {
        WebWord::identity(obj.clone())
            .split(pos + 1, j)?
            .merge(pos, color)?
    };
    Ok(WebExpr::from_word(word))
}

/// The elementary cabled crossing on a two-entry object: clasps, the block
/// permutation braid (signed), clasps.
pub fn crossing_expr(k: usize, l: usize, ck: EdgeColor, cl: EdgeColor, sign: i8) -> Result<WebExpr> {
    let obj = WebObject::new(vec![(k, ck), (l, cl)])?;
    Ok(WebExpr::from_word(
        WebWord::identity(obj).crossing(1, sign)?,
    ))
}

/// The ladder expansion of the monochromatic elementary crossing:
/// `(-1)^(k+kl) q^k sum (-q)^(-j1) E^(j2) F^(j1)` for green,
/// `(-1)^k q^(-k) sum q^(j1) (-1)^(j1) E^(j2) F^(j1)` for red,
/// summing over `j1 - j2 = k - l`.
pub fn crossing_ladder_sum(k: usize, l: usize, color: EdgeColor) -> Result<WebExpr> {
    if color == EdgeColor::Black {
        return Err(Error::MalformedWeb(
            "ladder crossing needs green or red".into(),
        ));
    }
    let obj = WebObject::new(vec![(k, color), (l, color)])?;
    let codomain = WebObject::new(vec![(l, color), (k, color)])?;
    let mut out = WebExpr::zero(obj.clone(), codomain);
    for j1 in 0..=k {
        let j2 = j1 as i64 - (k as i64 - l as i64);
        if j2 < 0 {
            continue;
        }
        let j2 = j2 as usize;
        let f = rung_f(&obj, 1, j1, color)?;
        if f.is_zero_expr() {
            continue;
        }
        let e = rung_e(f.codomain(), 1, j2, color)?;
        if e.is_zero_expr() {
            continue;
        }
        let term = f.then(&e)?;
        let coeff = match color {
            EdgeColor::Green => {
                // (-1)^(k+kl) q^k (-q)^(-j1)
                let outer = if (k + k * l) % 2 == 0 { 1 } else { -1 };
                let inner = if j1 % 2 == 0 { 1 } else { -1 };
                RatFun::monomial(outer * inner, 0, k as i64 - j1 as i64)
            }
            EdgeColor::Red => {
                let outer = if k % 2 == 0 { 1 } else { -1 };
                let inner = if j1 % 2 == 0 { 1 } else { -1 };
                RatFun::monomial(outer * inner, 0, j1 as i64 - k as i64)
            }
            EdgeColor::Black => unreachable!(),
        };
        out = out.add(&term.scale(&coeff))?;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Relation suite
// ---------------------------------------------------------------------------

/// A named instance of one of the diagrammatic relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    /// split then merge = [k+l over l] id, on a single colored edge
    Digon { k: usize, l: usize, color: EdgeColor },
    /// the two triple-merge orders agree (and the two triple-split orders)
    Associativity {
        h: usize,
        k: usize,
        l: usize,
        color: EdgeColor,
    },
    /// E^(j2) after F^(j1) = sum of F after E with binomial coefficients
    SquareSwitch {
        k: usize,
        l: usize,
        j1: usize,
        j2: usize,
        color: EdgeColor,
    },
    /// [2] id = green dumbbell + red dumbbell on two black strands
    Dumbbell,
    /// splitting into single strands and remerging in the other color is 0
    OppositeColorAnnihilation { k: usize },
    /// both mixed squares vanish on a green-red pair
    MixedSquareZero { k: usize, l: usize },
    /// EF + FE = [k+l] id on a green-red pair
    MixedEfFe { k: usize, l: usize },
    /// the four-strand [2]-relation mixing two green and two red edges
    FourStrand {
        k1: usize,
        k2: usize,
        k3: usize,
        k4: usize,
    },
    /// crossings slide past merges and splits
    Pitchfork {
        k: usize,
        l1: usize,
        l2: usize,
        ck: EdgeColor,
        cl: EdgeColor,
        sign: i8,
    },
    /// Reidemeister 3 and invertibility for elementary crossings
    BraidRelation {
        labels: [usize; 3],
        colors: [EdgeColor; 3],
    },
    /// clasp-sandwich crossing equals the ladder-sum crossing
    CrossingLadderConsistency { k: usize, l: usize, color: EdgeColor },
}

impl Relation {
    /// Parse a relation id with integer parameters. Colors are encoded
    /// 0 = green, 1 = red.
    pub fn from_name(name: &str, params: &[i64]) -> Result<Relation> {
        fn color(v: i64) -> EdgeColor {
            if v == 0 {
                EdgeColor::Green
            } else {
                EdgeColor::Red
            }
        }
        let get = |i: usize| -> usize { params.get(i).copied().unwrap_or(0).max(0) as usize };
        match name {
            "digon" => Ok(Relation::Digon {
                k: get(0),
                l: get(1),
                color: color(params.get(2).copied().unwrap_or(0)),
            }),
            "associativity" => Ok(Relation::Associativity {
                h: get(0),
                k: get(1),
                l: get(2),
                color: color(params.get(3).copied().unwrap_or(0)),
            }),
            "square_switch" => Ok(Relation::SquareSwitch {
                k: get(0),
                l: get(1),
                j1: get(2),
                j2: get(3),
                color: color(params.get(4).copied().unwrap_or(0)),
            }),
            "dumbbell" => Ok(Relation::Dumbbell),
            "opposite_color_annihilation" => {
                Ok(Relation::OppositeColorAnnihilation { k: get(0) })
            }
            "mixed_square_zero" => Ok(Relation::MixedSquareZero {
                k: get(0),
                l: get(1),
            }),
            "mixed_ef_fe" => Ok(Relation::MixedEfFe {
                k: get(0),
                l: get(1),
            }),
            "four_strand" => Ok(Relation::FourStrand {
                k1: get(0),
                k2: get(1),
                k3: get(2),
                k4: get(3),
            }),
            "pitchfork" => Ok(Relation::Pitchfork {
                k: get(0),
                l1: get(1),
                l2: get(2),
                ck: color(params.get(3).copied().unwrap_or(0)),
                cl: color(params.get(4).copied().unwrap_or(0)),
                sign: if params.get(5).copied().unwrap_or(1) < 0 {
                    -1
                } else {
                    1
                },
            }),
            "braid_relation" => Ok(Relation::BraidRelation {
                labels: [get(0), get(1), get(2)],
                colors: [
                    color(params.get(3).copied().unwrap_or(0)),
                    color(params.get(4).copied().unwrap_or(0)),
                    color(params.get(5).copied().unwrap_or(0)),
                ],
            }),
            "crossing_ladder" => Ok(Relation::CrossingLadderConsistency {
                k: get(0),
                l: get(1),
                color: color(params.get(2).copied().unwrap_or(0)),
            }),
            other => Err(Error::UnknownRelation(other.to_string())),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Relation::Digon { k, l, color } => format!("digon k={k} l={l} {color:?}"),
            Relation::Associativity { h, k, l, color } => {
                format!("associativity h={h} k={k} l={l} {color:?}")
            }
            Relation::SquareSwitch { k, l, j1, j2, color } => {
                format!("square_switch k={k} l={l} j1={j1} j2={j2} {color:?}")
            }
            Relation::Dumbbell => "dumbbell".into(),
            Relation::OppositeColorAnnihilation { k } => {
                format!("opposite_color_annihilation k={k}")
            }
            Relation::MixedSquareZero { k, l } => format!("mixed_square_zero k={k} l={l}"),
            Relation::MixedEfFe { k, l } => format!("mixed_ef_fe k={k} l={l}"),
            Relation::FourStrand { k1, k2, k3, k4 } => {
                format!("four_strand ({k1},{k2},{k3},{k4})")
            }
            Relation::Pitchfork {
                k,
                l1,
                l2,
                ck,
                cl,
                sign,
            } => format!("pitchfork k={k} l=({l1},{l2}) {ck:?}/{cl:?} sign={sign}"),
            Relation::BraidRelation { labels, colors } => {
                format!("braid_relation {labels:?} {colors:?}")
            }
            Relation::CrossingLadderConsistency { k, l, color } => {
                format!("crossing_ladder k={k} l={l} {color:?}")
            }
        }
    }

    /// True iff both sides evaluate to the same Hecke element.
    pub fn verify(&self, limit: usize) -> Result<bool> {
        match *self {
            Relation::Digon { k, l, color } => {
                let obj = WebObject::new(vec![(k + l, color)])?;
                let lhs = WebExpr::from_word(
                    WebWord::identity(obj.clone()).split(1, k)?.merge(1, color)?,
                );
                let rhs = WebExpr::identity(obj).scale(&qbinom((k + l) as i64, l as u32));
                Ok(eval_web_with_limit(&lhs, limit)? == eval_web_with_limit(&rhs, limit)?)
            }
            Relation::Associativity { h, k, l, color } => {
                let obj = WebObject::new(vec![(h, color), (k, color), (l, color)])?;
                let lhs = WebExpr::from_word(
                    WebWord::identity(obj.clone())
                        .merge(1, color)?
                        .merge(1, color)?,
                );
                let rhs = WebExpr::from_word(
                    WebWord::identity(obj).merge(2, color)?.merge(1, color)?,
                );
                if eval_web_with_limit(&lhs, limit)? != eval_web_with_limit(&rhs, limit)? {
                    return Ok(false);
                }
                // Split side: both association orders of the triple split,
                // whose scalars agree by the q-multinomial identity.
                let whole = WebObject::new(vec![(h + k + l, color)])?;
                let lhs = WebExpr::from_word(
                    WebWord::identity(whole.clone())
                        .split(1, h + k)?
                        .split(1, h)?,
                );
                let rhs = WebExpr::from_word(
                    WebWord::identity(whole).split(1, h)?.split(2, k)?,
                );
                Ok(eval_web_with_limit(&lhs, limit)? == eval_web_with_limit(&rhs, limit)?)
            }
            Relation::SquareSwitch { k, l, j1, j2, color } => {
                let obj = WebObject::new(vec![(k, color), (l, color)])?;
                let f = rung_f(&obj, 1, j1, color)?;
                let lhs = if f.is_zero_expr() {
                    f
                } else {
                    let e = rung_e(f.codomain(), 1, j2, color)?;
                    if e.is_zero_expr() {
                        WebExpr::zero(obj.clone(), e.codomain().clone())
                    } else {
                        f.then(&e)?
                    }
                };
                let mut rhs: Option<WebExpr> = None;
                for jp in 0..=j1.min(j2) {
                    let e = rung_e(&obj, 1, j2 - jp, color)?;
                    if e.is_zero_expr() {
                        continue;
                    }
                    let fexp = rung_f(e.codomain(), 1, j1 - jp, color)?;
                    if fexp.is_zero_expr() {
                        continue;
                    }
                    let coeff = qbinom(
                        k as i64 - j1 as i64 - l as i64 + j2 as i64,
                        jp as u32,
                    );
                    let term = e.then(&fexp)?.scale(&coeff);
                    rhs = Some(match rhs {
                        None => term,
                        Some(acc) => acc.add(&term)?,
                    });
                }
                let lhs_val = eval_web_with_limit(&lhs, limit)?;
                let rhs_val = match rhs {
                    Some(r) => eval_web_with_limit(&r, limit)?,
                    None => HeckeElt::zero(lhs_val.strands()),
                };
                Ok(lhs_val == rhs_val)
            }
            Relation::Dumbbell => {
                let obj = WebObject::strands(2);
                let green = WebExpr::from_word(
                    WebWord::identity(obj.clone())
                        .merge(1, EdgeColor::Green)?
                        .split(1, 1)?,
                );
                let red = WebExpr::from_word(
                    WebWord::identity(obj.clone())
                        .merge(1, EdgeColor::Red)?
                        .split(1, 1)?,
                );
                let lhs = WebExpr::identity(obj).scale(&RatFun::from_poly(qint(2)));
                Ok(eval_web_with_limit(&lhs, limit)?
                    == eval_web_with_limit(&green.add(&red)?, limit)?)
            }
            Relation::OppositeColorAnnihilation { k } => {
                for (from, to) in [
                    (EdgeColor::Green, EdgeColor::Red),
                    (EdgeColor::Red, EdgeColor::Green),
                ] {
                    let mut word = WebWord::identity(WebObject::new(vec![(k, from)])?);
                    for pos in 1..k {
                        word = word.split(pos, 1)?;
                    }
                    for _ in 1..k {
                        word = word.merge(1, to)?;
                    }
                    if !eval_web_with_limit(&WebExpr::from_word(word), limit)?.is_zero() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Relation::MixedSquareZero { k, l } => {
                for (c1, c2) in [
                    (EdgeColor::Green, EdgeColor::Red),
                    (EdgeColor::Red, EdgeColor::Green),
                ] {
                    let obj = WebObject::new(vec![(k, c1), (l, c2)])?;
                    // two F-rungs in a row
                    let f1 = rung_f(&obj, 1, 1, c2)?;
                    if !f1.is_zero_expr() {
                        let f2 = rung_f(f1.codomain(), 1, 1, c2)?;
                        if !f2.is_zero_expr()
                            && !eval_web_with_limit(&f1.then(&f2)?, limit)?.is_zero()
                        {
                            return Ok(false);
                        }
                    }
                    // two E-rungs in a row
                    let e1 = rung_e(&obj, 1, 1, c1)?;
                    if !e1.is_zero_expr() {
                        let e2 = rung_e(e1.codomain(), 1, 1, c1)?;
                        if !e2.is_zero_expr()
                            && !eval_web_with_limit(&e1.then(&e2)?, limit)?.is_zero()
                        {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
            Relation::MixedEfFe { k, l } => {
                for (c1, c2) in [
                    (EdgeColor::Green, EdgeColor::Red),
                    (EdgeColor::Red, EdgeColor::Green),
                ] {
                    let obj = WebObject::new(vec![(k, c1), (l, c2)])?;
                    let mut sum: Option<WebExpr> = None;
                    // E then F
                    let e = rung_e(&obj, 1, 1, c1)?;
                    if !e.is_zero_expr() {
                        let f = rung_f(e.codomain(), 1, 1, c2)?;
                        if !f.is_zero_expr() {
                            sum = Some(e.then(&f)?);
                        }
                    }
                    // F then E
                    let f = rung_f(&obj, 1, 1, c2)?;
                    if !f.is_zero_expr() {
                        let e2 = rung_e(f.codomain(), 1, 1, c1)?;
                        if !e2.is_zero_expr() {
                            let t = f.then(&e2)?;
                            sum = Some(match sum {
                                None => t,
                                Some(acc) => acc.add(&t)?,
                            });
                        }
                    }
                    let lhs = WebExpr::identity(obj)
                        .scale(&RatFun::from_poly(qint((k + l) as i64)));
                    let lhs_val = eval_web_with_limit(&lhs, limit)?;
                    let rhs_val = match sum {
                        Some(s) => eval_web_with_limit(&s, limit)?,
                        None => HeckeElt::zero(lhs_val.strands()),
                    };
                    if lhs_val != rhs_val {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Relation::FourStrand { k1, k2, k3, k4 } => {
                let obj = WebObject::new(vec![
                    (k1, EdgeColor::Green),
                    (k2, EdgeColor::Green),
                    (k3, EdgeColor::Red),
                    (k4, EdgeColor::Red),
                ])?;
                let chain = |order: [usize; 4], start: &WebObject| -> Result<WebExpr> {
                    // rung codes: 0 = green F at 1, 1 = mixed F at 2, 2 = red F at 3
                    let mut acc: Option<WebExpr> = None;
                    let mut cur = start.clone();
                    for code in order {
                        let (pos, color) = match code {
                            0 => (1, EdgeColor::Green),
                            1 => (2, EdgeColor::Red),
                            _ => (3, EdgeColor::Red),
                        };
                        let r = rung_f(&cur, pos, 1, color)?;
                        if r.is_zero_expr() {
                            return Ok(WebExpr::zero(start.clone(), r.codomain().clone()));
                        }
                        cur = r.codomain().clone();
                        acc = Some(match acc {
                            None => r,
                            Some(a) => a.then(&r)?,
                        });
                    }
                    Ok(acc.unwrap())
                };
                // LHS: mixed, then green and red in parallel, then mixed.
                let lhs = chain([1, 0, 2, 1], &obj)?
                    .scale(&RatFun::from_poly(qint(2)));
                let t1 = chain([0, 1, 2, 1], &obj)?;
                let t2 = chain([1, 2, 1, 0], &obj)?;
                let t3 = chain([1, 0, 1, 2], &obj)?;
                let t4 = chain([2, 1, 0, 1], &obj)?;
                let lhs_val = eval_web_with_limit(&lhs, limit)?;
                let mut rhs_val = HeckeElt::zero(lhs_val.strands());
                for t in [t1, t2, t3, t4] {
                    rhs_val = rhs_val.add(&eval_web_with_limit(&t, limit)?)?;
                }
                Ok(lhs_val == rhs_val)
            }
            Relation::Pitchfork {
                k,
                l1,
                l2,
                ck,
                cl,
                sign,
            } => {
                // merge slides through the crossing from the right factor
                let obj = WebObject::new(vec![(k, ck), (l1, cl), (l2, cl)])?;
                let lhs = WebExpr::from_word(
                    WebWord::identity(obj.clone())
                        .merge(2, cl)?
                        .crossing(1, sign)?,
                );
                let rhs = WebExpr::from_word(
                    WebWord::identity(obj)
                        .crossing(1, sign)?
                        .crossing(2, sign)?
                        .merge(1, cl)?,
                );
                if eval_web_with_limit(&lhs, limit)? != eval_web_with_limit(&rhs, limit)? {
                    return Ok(false);
                }
                // split slides through the crossing
                let obj = WebObject::new(vec![(k, ck), (l1 + l2, cl)])?;
                let lhs = WebExpr::from_word(
                    WebWord::identity(obj.clone())
                        .split(2, l1)?
                        .crossing(1, sign)?
                        .crossing(2, sign)?,
                );
                let rhs = WebExpr::from_word(
                    WebWord::identity(obj).crossing(1, sign)?.split(1, l1)?,
                );
                Ok(eval_web_with_limit(&lhs, limit)? == eval_web_with_limit(&rhs, limit)?)
            }
            Relation::BraidRelation { labels, colors } => {
                let obj = WebObject::new(vec![
                    (labels[0], colors[0]),
                    (labels[1], colors[1]),
                    (labels[2], colors[2]),
                ])?;
                let lhs = WebExpr::from_word(
                    WebWord::identity(obj.clone())
                        .crossing(1, 1)?
                        .crossing(2, 1)?
                        .crossing(1, 1)?,
                );
                let rhs = WebExpr::from_word(
                    WebWord::identity(obj.clone())
                        .crossing(2, 1)?
                        .crossing(1, 1)?
                        .crossing(2, 1)?,
                );
                if eval_web_with_limit(&lhs, limit)? != eval_web_with_limit(&rhs, limit)? {
                    return Ok(false);
                }
                // Invertibility at position 1.
                let two = WebObject::new(vec![
                    (labels[0], colors[0]),
                    (labels[1], colors[1]),
                ])?;
                let round_trip = WebExpr::from_word(
                    WebWord::identity(two.clone())
                        .crossing(1, 1)?
                        .crossing(1, -1)?,
                );
                Ok(eval_web_with_limit(&round_trip, limit)?
                    == eval_web_with_limit(&WebExpr::identity(two), limit)?)
            }
            Relation::CrossingLadderConsistency { k, l, color } => {
                let sandwich = crossing_expr(k, l, color, color, 1)?;
                let ladder = crossing_ladder_sum(k, l, color)?;
                Ok(eval_web_with_limit(&sandwich, limit)?
                    == eval_web_with_limit(&ladder, limit)?)
            }
        }
    }
}

/// Verify a relation given by name and integer parameters.
pub fn verify_relation(name: &str, params: &[i64]) -> Result<bool> {
    Relation::from_name(name, params)?.verify(DEFAULT_MAX_CABLE)
}

/// All relation instances at the given bounds, in a deterministic order.
pub fn relation_suite(max_label: usize, max_cable: usize) -> Vec<Relation> {
    let colors = [EdgeColor::Green, EdgeColor::Red];
    let mut out = Vec::new();
    out.push(Relation::Dumbbell);
    for color in colors {
        for k in 1..=max_label {
            for l in 1..=max_label {
                if k + l <= max_cable {
                    out.push(Relation::Digon { k, l, color });
                }
            }
        }
    }
    for color in colors {
        for h in 1..=2usize.min(max_label) {
            for k in 1..=2usize.min(max_label) {
                for l in 1..=2usize.min(max_label) {
                    if h + k + l <= max_cable {
                        out.push(Relation::Associativity { h, k, l, color });
                    }
                }
            }
        }
    }
    for color in colors {
        // Zero labels exercise the truncation of the j'-sum by negative
        // labels.
        for k in 0..=max_label {
            for l in 0..=max_label {
                if k + l == 0 || k + l > max_cable {
                    continue;
                }
                for j1 in 0..=2usize {
                    for j2 in 0..=2usize {
                        out.push(Relation::SquareSwitch { k, l, j1, j2, color });
                    }
                }
            }
        }
    }
    for k in 2..=3usize.min(max_cable) {
        out.push(Relation::OppositeColorAnnihilation { k });
    }
    for k in 1..=max_label {
        for l in 1..=max_label {
            if k + l <= max_cable {
                out.push(Relation::MixedSquareZero { k, l });
                out.push(Relation::MixedEfFe { k, l });
            }
        }
    }
    for k1 in 1..=2usize {
        for k2 in 1..=2usize {
            for k3 in 1..=2usize {
                for k4 in 1..=2usize {
                    if k1 + k2 + k3 + k4 <= max_cable {
                        out.push(Relation::FourStrand { k1, k2, k3, k4 });
                    }
                }
            }
        }
    }
    for ck in colors {
        for cl in colors {
            for k in 1..=2usize.min(max_label) {
                for l1 in 1..=2usize.min(max_label) {
                    for l2 in 1..=2usize.min(max_label) {
                        if k + l1 + l2 > max_cable {
                            continue;
                        }
                        for sign in [1i8, -1] {
                            out.push(Relation::Pitchfork {
                                k,
                                l1,
                                l2,
                                ck,
                                cl,
                                sign,
                            });
                        }
                    }
                }
            }
        }
    }
    for k1 in 1..=2usize.min(max_label) {
        for k2 in 1..=2usize.min(max_label) {
            for k3 in 1..=2usize.min(max_label) {
                if k1 + k2 + k3 > max_cable {
                    continue;
                }
                for c1 in colors {
                    for c2 in colors {
                        for c3 in colors {
                            // colors only matter on labels >= 2; skip
                            // duplicates where every edge is black
                            if k1 == 1 && c1 == EdgeColor::Red {
                                continue;
                            }
                            if k2 == 1 && c2 == EdgeColor::Red {
                                continue;
                            }
                            if k3 == 1 && c3 == EdgeColor::Red {
                                continue;
                            }
                            out.push(Relation::BraidRelation {
                                labels: [k1, k2, k3],
                                colors: [c1, c2, c3],
                            });
                        }
                    }
                }
            }
        }
    }
    for color in colors {
        for k in 1..=2usize.min(max_label) {
            for l in 1..=2usize.min(max_label) {
                if k + l <= max_cable {
                    out.push(Relation::CrossingLadderConsistency { k, l, color });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clasp::clasp_closed;

    #[test]
    fn empty_word_is_clasp_product() {
        let obj = WebObject::new(vec![(2, EdgeColor::Green), (1, EdgeColor::Black)]).unwrap();
        let val = eval_web(&WebExpr::identity(obj)).unwrap();
        let expect = clasp_closed(2, ClaspColor::Green)
            .unwrap()
            .embed(0, 3)
            .unwrap();
        assert_eq!(val, expect);
    }

    #[test]
    fn dumbbell_evaluates_to_scaled_clasp() {
        // green dumbbell on (1,1) = [2] CL^g_2 = q 1 - H_1
        let word = WebWord::identity(WebObject::strands(2))
            .merge(1, EdgeColor::Green)
            .unwrap()
            .split(1, 1)
            .unwrap();
        let val = eval_web(&WebExpr::from_word(word)).unwrap();
        let expect = clasp_closed(2, ClaspColor::Green)
            .unwrap()
            .scale(&RatFun::from_poly(qint(2)));
        assert_eq!(val, expect);
        let h1: HeckeElt = HeckeElt::one(2)
            .scale(&"q".parse().unwrap())
            .sub(&HeckeElt::gen(2, 1, 1).unwrap())
            .unwrap();
        assert_eq!(val, h1);
    }

    #[test]
    fn crossing_1_1_is_generator() {
        let x = crossing_expr(1, 1, EdgeColor::Black, EdgeColor::Black, 1).unwrap();
        assert_eq!(eval_web(&x).unwrap(), HeckeElt::gen(2, 1, 1).unwrap());
        let xi = crossing_expr(1, 1, EdgeColor::Black, EdgeColor::Black, -1).unwrap();
        assert_eq!(eval_web(&xi).unwrap(), HeckeElt::gen(2, 1, -1).unwrap());
    }

    #[test]
    fn rung_examples() {
        // F-rung j=1 on two black strands composed with the E-rung back
        // equals the green dumbbell path through (0, 2).
        let obj = WebObject::strands(2);
        let f = rung_f(&obj, 1, 1, EdgeColor::Green).unwrap();
        let e = rung_e(f.codomain(), 1, 1, EdgeColor::Black).unwrap();
        let path = f.then(&e).unwrap();
        let dumbbell = WebExpr::from_word(
            WebWord::identity(obj)
                .merge(1, EdgeColor::Green)
                .unwrap()
                .split(1, 1)
                .unwrap(),
        );
        assert_eq!(eval_web(&path).unwrap(), eval_web(&dumbbell).unwrap());
        // j larger than the source label gives the zero expression.
        let z = rung_f(&WebObject::strands(2), 1, 2, EdgeColor::Green).unwrap();
        assert!(z.is_zero_expr());
    }

    #[test]
    fn color_swap_examples() {
        let green = WebWord::identity(WebObject::strands(2))
            .merge(1, EdgeColor::Green)
            .unwrap()
            .split(1, 1)
            .unwrap();
        let swapped = green.color_swap().unwrap();
        let red = WebWord::identity(WebObject::strands(2))
            .merge(1, EdgeColor::Red)
            .unwrap()
            .split(1, 1)
            .unwrap();
        assert_eq!(swapped, red);
        let crossing = WebWord::identity(WebObject::strands(2))
            .crossing(1, 1)
            .unwrap();
        assert!(matches!(
            crossing.color_swap(),
            Err(Error::ColorSwapWithCrossing)
        ));
    }

    #[test]
    fn absorbed_eval_matches_plain_eval() {
        // The absorption shortcut must agree with plain clasp-product
        // chaining on words covering every slice pattern.
        let mut words = Vec::new();
        // digon on a 4-edge
        words.push(
            WebWord::identity(WebObject::new(vec![(4, EdgeColor::Green)]).unwrap())
                .split(1, 2)
                .unwrap()
                .merge(1, EdgeColor::Green)
                .unwrap(),
        );
        // opposite-color annihilation at k=2
        words.push(
            WebWord::identity(WebObject::new(vec![(2, EdgeColor::Red)]).unwrap())
                .split(1, 1)
                .unwrap()
                .merge(1, EdgeColor::Green)
                .unwrap(),
        );
        // rung path with a crossing in the middle
        words.push(
            WebWord::identity(WebObject::new(vec![(2, EdgeColor::Green), (1, EdgeColor::Black)]).unwrap())
                .split(1, 1)
                .unwrap()
                .crossing(2, 1)
                .unwrap()
                .merge(2, EdgeColor::Green)
                .unwrap(),
        );
        // split chain down to strands and partial remerge in the other color
        words.push(
            WebWord::identity(WebObject::new(vec![(3, EdgeColor::Red)]).unwrap())
                .split(1, 1)
                .unwrap()
                .split(2, 1)
                .unwrap()
                .merge(1, EdgeColor::Red)
                .unwrap()
                .merge(1, EdgeColor::Red)
                .unwrap(),
        );
        for word in words {
            let fast = word.eval_with(DEFAULT_MAX_CABLE, true).unwrap();
            let plain = word.eval_with(DEFAULT_MAX_CABLE, false).unwrap();
            assert_eq!(fast, plain);
        }
    }

    #[test]
    fn relation_name_dispatch() {
        assert!(verify_relation("dumbbell", &[]).unwrap());
        assert!(verify_relation("digon", &[1, 1, 0]).unwrap());
        assert!(matches!(
            verify_relation("no_such_relation", &[]),
            Err(Error::UnknownRelation(_))
        ));
    }

    #[test]
    fn square_switch_truncation_example() {
        // k=2, l=0, j1=j2=1: the j'-sum truncates to [2] times the identity.
        assert!(Relation::SquareSwitch {
            k: 2,
            l: 0,
            j1: 1,
            j2: 1,
            color: EdgeColor::Green
        }
        .verify(DEFAULT_MAX_CABLE)
        .unwrap());
    }

    #[test]
    fn spot_check_relations() {
        for rel in [
            Relation::Digon {
                k: 2,
                l: 1,
                color: EdgeColor::Green,
            },
            Relation::Digon {
                k: 1,
                l: 2,
                color: EdgeColor::Red,
            },
            Relation::Associativity {
                h: 1,
                k: 1,
                l: 2,
                color: EdgeColor::Red,
            },
            Relation::MixedSquareZero { k: 2, l: 1 },
            Relation::MixedEfFe { k: 1, l: 1 },
            Relation::MixedEfFe { k: 2, l: 1 },
            Relation::OppositeColorAnnihilation { k: 2 },
            Relation::SquareSwitch {
                k: 2,
                l: 1,
                j1: 1,
                j2: 1,
                color: EdgeColor::Green,
            },
            Relation::Pitchfork {
                k: 1,
                l1: 1,
                l2: 1,
                ck: EdgeColor::Green,
                cl: EdgeColor::Green,
                sign: 1,
            },
            Relation::BraidRelation {
                labels: [1, 1, 1],
                colors: [EdgeColor::Green; 3],
            },
            Relation::CrossingLadderConsistency {
                k: 1,
                l: 1,
                color: EdgeColor::Green,
            },
            Relation::CrossingLadderConsistency {
                k: 2,
                l: 1,
                color: EdgeColor::Green,
            },
            Relation::CrossingLadderConsistency {
                k: 2,
                l: 2,
                color: EdgeColor::Red,
            },
            Relation::FourStrand {
                k1: 1,
                k2: 1,
                k3: 1,
                k4: 1,
            },
            Relation::FourStrand {
                k1: 2,
                k2: 1,
                k3: 1,
                k4: 2,
            },
        ] {
            assert!(
                rel.verify(DEFAULT_MAX_CABLE).unwrap(),
                "relation failed: {}",
                rel.name()
            );
        }
    }
}
