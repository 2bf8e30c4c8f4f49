//! Biliaison types and linkage.
//!
//! A biliaison type `(k_1 < ... < k_u)` records the degrees of the chain of
//! special biliaisons that builds an ACM curve from the empty curve. It is
//! equivalent to the h-vector: drawing a dot at `(n, p)` for
//! `1 <= p <= h(n)`, `k_i` is the number of dots on row `s + 1 - i`.
//! (In Gruson-Peskine terms the numerical character is `n_j = j + k_{s-j}`;
//! nothing here needs it.)

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hvector::{parse_int_list, write_list, CurveInvariants, HVector, Speciality};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct BiliaisonType(Vec<i64>);

impl BiliaisonType {
    pub fn new(ks: Vec<i64>) -> Result<Self> {
        if let Some(&k) = ks.iter().find(|&&k| k < 1) {
            return Err(Error::InvalidLambda(format!("entry {k} is not positive")));
        }
        if let Some(w) = ks.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidLambda(format!(
                "entries {} and {} are not strictly increasing",
                w[0], w[1]
            )));
        }
        Ok(BiliaisonType(ks))
    }

    pub fn empty() -> Self {
        BiliaisonType(Vec::new())
    }

    pub fn ks(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn min(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.0.last().copied()
    }

    /// `self < other`: every entry of `self` is below every entry of
    /// `other`. Empty types precede and follow everything.
    pub fn precedes(&self, other: &BiliaisonType) -> bool {
        match (self.max(), other.min()) {
            (Some(a), Some(b)) => a < b,
            _ => true,
        }
    }

    /// Concatenation `self ∪ other`; requires `self < other`.
    pub fn union(&self, other: &BiliaisonType) -> Result<BiliaisonType> {
        if !self.precedes(other) {
            return Err(not_ordered(self, other));
        }
        Ok(BiliaisonType(
            self.0.iter().chain(&other.0).copied().collect(),
        ))
    }

    pub fn from_hvector(h: &HVector) -> BiliaisonType {
        let s = h.s();
        let ks = (1..=s)
            .map(|i| h.values().iter().filter(|&&v| v >= s + 1 - i).count() as i64)
            .collect();
        BiliaisonType(ks)
    }

    /// Rebuilds the h-vector: row `s + 1 - i` holds a run of `k_i` dots
    /// starting at column `s - i`.
    pub fn to_hvector(&self) -> HVector {
        let s = self.len() as i64;
        let width = self
            .0
            .iter()
            .enumerate()
            .map(|(idx, &k)| s - (idx as i64 + 1) + k)
            .max()
            .unwrap_or(0);
        let mut h = vec![0i64; width as usize];
        for (idx, &k) in self.0.iter().enumerate() {
            let start = s - (idx as i64 + 1);
            for n in start..start + k {
                h[n as usize] += 1;
            }
        }
        HVector::new(h).expect("a biliaison type always yields an admissible h-vector")
    }

    pub fn invariants(&self) -> Result<CurveInvariants> {
        if self.is_empty() {
            return Err(Error::EmptyLambda);
        }
        let s = self.len() as i64;
        let ks = &self.0;
        let g = 1
            + ks.iter().map(|k| k * (k - 3) / 2).sum::<i64>()
            + ks.iter()
                .enumerate()
                .map(|(idx, k)| (s - idx as i64 - 1) * k)
                .sum::<i64>();
        Ok(CurveInvariants {
            d: self.degree(),
            g,
            s,
            t: Some(ks[0] + s - 1),
            e: Speciality::Finite(ks[ks.len() - 1] - 3),
        })
    }

    /// Splits at every `i` with `k_{i+1} - k_i >= 3`.
    pub fn gap_decomposition(&self) -> Result<GapDecomposition> {
        if self.is_empty() {
            return Err(Error::EmptyLambda);
        }
        let mut pieces = vec![vec![self.0[0]]];
        for w in self.0.windows(2) {
            if w[1] - w[0] >= 3 {
                pieces.push(Vec::new());
            }
            pieces.last_mut().unwrap().push(w[1]);
        }
        Ok(GapDecomposition {
            pieces: pieces.into_iter().map(BiliaisonType).collect(),
        })
    }

    pub fn is_s_minimal(&self, s: i64) -> bool {
        self.max().is_none_or(|k| k < s)
    }

    pub(crate) fn require_s_minimal(&self, s: i64) -> Result<()> {
        if self.is_s_minimal(s) {
            Ok(())
        } else {
            Err(Error::NotSMinimal {
                lambda: self.to_string(),
                s,
            })
        }
    }

    /// The `s`-dual `(s - k_u, ..., s - k_1)`.
    pub fn dual(&self, s: i64) -> Result<BiliaisonType> {
        self.require_s_minimal(s)?;
        Ok(BiliaisonType(self.0.iter().rev().map(|k| s - k).collect()))
    }
}

pub(crate) fn not_ordered(left: &BiliaisonType, right: &BiliaisonType) -> Error {
    Error::NotOrdered {
        left: left.to_string(),
        right: right.to_string(),
    }
}

impl TryFrom<Vec<i64>> for BiliaisonType {
    type Error = Error;

    fn try_from(ks: Vec<i64>) -> Result<Self> {
        BiliaisonType::new(ks)
    }
}

impl From<BiliaisonType> for Vec<i64> {
    fn from(lambda: BiliaisonType) -> Self {
        lambda.0
    }
}

impl FromStr for BiliaisonType {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        BiliaisonType::new(parse_int_list(text, &[('(', ')')])?)
    }
}

impl fmt::Display for BiliaisonType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_list(f, &self.0)?;
        f.write_str(")")
    }
}

/// Canonical order: degree first, then lexicographic.
impl Ord for BiliaisonType {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), &self.0).cmp(&(other.degree(), &other.0))
    }
}

impl PartialOrd for BiliaisonType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapDecomposition {
    pub pieces: Vec<BiliaisonType>,
}

impl GapDecomposition {
    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn piece_invariants(&self) -> Vec<CurveInvariants> {
        self.pieces
            .iter()
            .map(|p| p.invariants().expect("pieces are non-empty"))
            .collect()
    }
}

/// All subsets of `{1, ..., s-1}`, in canonical order. There are `2^(s-1)`.
pub fn enumerate_s_minimal(s: i64) -> Vec<BiliaisonType> {
    assert!(s >= 1, "s must be positive");
    let top = (s - 1) as u32;
    let mut all: Vec<BiliaisonType> = (0u64..1 << top)
        .map(|mask| BiliaisonType((1..s).filter(|k| mask >> (k - 1) & 1 == 1).collect()))
        .collect();
    all.sort();
    all
}

/// Inserts `s` after the ramp `1, ..., s-1`.
fn type_a(h: &HVector, s: i64) -> HVector {
    let mut v = h.values().to_vec();
    v.insert((s - 1) as usize, s);
    HVector::new(v).expect("type A insertion keeps admissibility")
}

/// Inserts `s, s-1` after the ramp `1, ..., s-1`.
fn type_b(h: &HVector, s: i64) -> HVector {
    let mut v = h.values().to_vec();
    let at = (s - 1) as usize;
    v.splice(at..at, [s, s - 1]);
    HVector::new(v).expect("type B insertion keeps admissibility")
}

/// The `2^(s-1)` h-vectors of integral curves with `s = t`, grown from
/// `{1}` by type A / type B insertions; sorted by degree then
/// lexicographically.
pub fn enumerate_s_basic(s: i64) -> Vec<HVector> {
    assert!(s >= 1, "s must be positive");
    let mut level = vec![HVector::new(vec![1]).unwrap()];
    for step in 2..=s {
        level = level
            .iter()
            .flat_map(|h| [type_a(h, step), type_b(h, step)])
            .collect();
    }
    level.sort_by(|a, b| (a.degree(), a.values()).cmp(&(b.degree(), b.values())));
    level
}

/// Hilbert function h-vector of a complete intersection of type `(a, b)`.
pub fn ci_hvector(a: i64, b: i64) -> Result<HVector> {
    if a < 1 || b < 1 {
        return Err(Error::OutOfRange(format!(
            "complete intersection type ({a}, {b})"
        )));
    }
    let h = (0..=a + b - 2)
        .map(|n| (0..a).filter(|i| (0..b).contains(&(n - i))).count() as i64)
        .collect();
    Ok(HVector::new(h).expect("complete intersection h-vectors are admissible"))
}

/// h-vector of the curve linked to `h` by a complete intersection of type
/// `(a, b)`: `h'(n) = h_Y(n) - h(a + b - 2 - n)`. The result is validated
/// as an h-vector; containment itself is not checked.
pub fn link_hvector(h: &HVector, a: i64, b: i64) -> Result<HVector> {
    let ci = ci_hvector(a, b)?;
    let top = a + b - 2;
    if h.top().is_some_and(|n| n > top) {
        return Err(Error::NotLinkable(format!(
            "h = {{{h}}} is supported beyond a + b - 2 = {top}"
        )));
    }
    let linked: Vec<i64> = (0..=top).map(|n| ci.at(n) - h.at(top - n)).collect();
    if let Some(n) = linked.iter().position(|&v| v < 0) {
        return Err(Error::NotLinkable(format!(
            "h = {{{h}}} does not fit in ({a}, {b}): entry {n} of the link is negative"
        )));
    }
    HVector::new(linked).map_err(|e| {
        Error::NotLinkable(format!(
            "link of {{{h}}} by ({a}, {b}) is not an h-vector: {e}"
        ))
    })
}
