//! h-vectors of ACM curves: validation, the basic numerical invariants and
//! the multisecant-line classification that only depends on `h`.
//!
//! An h-vector is stored densely as `h(0), ..., h(N)` with `h(N) > 0`; the
//! empty sequence is the h-vector of the empty curve. Outside the stored
//! range `h` is zero, and [`HVector::at`] honours that for any integer index.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct HVector(Vec<i64>);

impl HVector {
    /// Validates an arbitrary integer list. Trailing zeros are stripped
    /// before checking.
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| **v < 0) {
            return Err(Error::RejectNegative { index, value });
        }
        let mut values = values;
        while values.last() == Some(&0) {
            values.pop();
        }
        let s = first_deficit(&values);
        for (n, &v) in values.iter().enumerate().take(s) {
            let expected = n as i64 + 1;
            if v != expected {
                return Err(Error::RejectInitialRamp {
                    index: n,
                    value: v,
                    expected,
                });
            }
        }
        // h(n) >= h(n+1) for n >= s-1; the trailing zero is implicit.
        for n in s.max(1)..values.len() {
            if values[n] > values[n - 1] {
                return Err(Error::RejectNotMonotone {
                    index: n,
                    value: values[n],
                    prev_value: values[n - 1],
                });
            }
        }
        Ok(HVector(values))
    }

    pub fn empty() -> Self {
        HVector(Vec::new())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    /// `h(n)`, zero outside the support (negative `n` included).
    pub fn at(&self, n: i64) -> i64 {
        if n < 0 {
            return 0;
        }
        self.0.get(n as usize).copied().unwrap_or(0)
    }

    /// Index of the last positive entry, `None` for the empty curve.
    pub fn top(&self) -> Option<i64> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() as i64 - 1)
        }
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn genus(&self) -> i64 {
        1 + self
            .0
            .iter()
            .enumerate()
            .map(|(n, &h)| (n as i64 - 1) * h)
            .sum::<i64>()
    }

    /// Least degree of a surface containing the curve.
    pub fn s(&self) -> i64 {
        first_deficit(&self.0) as i64
    }

    /// `min{n : h(n-1) > h(n)}`; undefined for the empty curve.
    pub fn t(&self) -> Option<i64> {
        if self.is_empty() {
            return None;
        }
        (0..=self.0.len() as i64).find(|&n| self.at(n - 1) > self.at(n))
    }

    /// Index of speciality `e`, with `h(e+2)` the last positive entry.
    pub fn e(&self) -> Speciality {
        match self.top() {
            None => Speciality::NegInfinity,
            Some(top) => Speciality::Finite(top - 2),
        }
    }

    pub fn invariants(&self) -> CurveInvariants {
        CurveInvariants {
            d: self.degree(),
            g: self.genus(),
            s: self.s(),
            t: self.t(),
            e: self.e(),
        }
    }

    /// After any strict drop the sequence keeps dropping strictly until it
    /// reaches zero.
    pub fn is_decreasing_type(&self) -> bool {
        let len = self.0.len() as i64;
        match (0..len).find(|&a| self.at(a) > self.at(a + 1)) {
            None => true,
            Some(a) => (a..len).all(|n| self.at(n) > self.at(n + 1)),
        }
    }

    /// Predicted order of the maximal multisecant line of a general curve
    /// with this h-vector.
    pub fn multisecant_case(&self) -> SecantCase {
        let s = self.s();
        let (e, t) = match (self.e(), self.t()) {
            (Speciality::Finite(e), Some(t)) if s > 3 => (e, t),
            _ => {
                return SecantCase {
                    tag: SecantTag::OutOfScope,
                    l: None,
                    unique_pencil: false,
                };
            }
        };
        if self.at(e + 1) == 3 && self.at(e + 2) == 2 {
            SecantCase {
                tag: SecantTag::CaseA,
                l: Some(e + 3),
                unique_pencil: true,
            }
        } else if t > s + 3 && self.at(t) == s - 2 && self.at(t + 1) == s - 3 {
            SecantCase {
                tag: SecantTag::CaseB,
                l: Some(t - s + 1),
                unique_pencil: true,
            }
        } else {
            SecantCase {
                tag: SecantTag::Generic,
                l: Some(4),
                unique_pencil: false,
            }
        }
    }

    /// Largest `n` with `h(n-1) - h(n) > 1`, reading `h` as zero past its
    /// support. `None` when every drop is at most one, which is the case for
    /// complete intersections and the empty curve.
    pub fn nollet_bound(&self) -> Option<i64> {
        let len = self.0.len() as i64;
        (1..=len).rev().find(|&n| self.at(n - 1) - self.at(n) > 1)
    }
}

fn first_deficit(values: &[i64]) -> usize {
    (0..=values.len())
        .find(|&n| values.get(n).copied().unwrap_or(0) < n as i64 + 1)
        .unwrap_or(values.len())
}

impl TryFrom<Vec<i64>> for HVector {
    type Error = Error;

    fn try_from(values: Vec<i64>) -> Result<Self> {
        HVector::new(values)
    }
}

impl From<HVector> for Vec<i64> {
    fn from(h: HVector) -> Self {
        h.0
    }
}

/// Comma-separated integers; braces or brackets around the list are
/// tolerated, and the empty string is the empty curve.
impl FromStr for HVector {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        HVector::new(parse_int_list(text, &[('{', '}'), ('[', ']')])?)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

pub(crate) fn parse_int_list(text: &str, brackets: &[(char, char)]) -> Result<Vec<i64>> {
    let mut body = text.trim();
    for &(open, close) in brackets {
        if let Some(inner) = body.strip_prefix(open).and_then(|b| b.strip_suffix(close)) {
            body = inner.trim();
            break;
        }
    }
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|tok| {
            tok.trim().parse::<i64>().map_err(|e| Error::Parse {
                input: text.to_string(),
                reason: format!("{tok:?}: {e}"),
            })
        })
        .collect()
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, values: &[i64]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Index of speciality; the empty curve has `e = -inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Speciality {
    NegInfinity,
    Finite(i64),
}

impl Speciality {
    pub fn finite(self) -> Option<i64> {
        match self {
            Speciality::NegInfinity => None,
            Speciality::Finite(e) => Some(e),
        }
    }
}

impl fmt::Display for Speciality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Speciality::NegInfinity => f.write_str("-inf"),
            Speciality::Finite(e) => write!(f, "{e}"),
        }
    }
}

impl Serialize for Speciality {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Speciality::NegInfinity => serializer.serialize_str("-inf"),
            Speciality::Finite(e) => serializer.serialize_i64(*e),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurveInvariants {
    pub d: i64,
    pub g: i64,
    pub s: i64,
    /// `None` for the empty curve.
    pub t: Option<i64>,
    pub e: Speciality,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SecantTag {
    CaseA,
    CaseB,
    Generic,
    OutOfScope,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SecantCase {
    pub tag: SecantTag,
    pub l: Option<i64>,
    pub unique_pencil: bool,
}
