//! Destabilizer search on the Picard model, the gonality prediction and the
//! finite exception lists that bound where the prediction is proven.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hvector::{HVector, SecantTag, Speciality};
use crate::picard::{DivisorClass, PicardModel};
use crate::quadform::delta_e;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PencilClass {
    /// `A = -H`, the pencil cut by planes through a line in the surface's
    /// ruling direction.
    MinusH,
    /// `A = L - H` with `L` a line component (type `(1)`); 1-based index.
    LineMinusH(usize),
    /// `A = -P` with `P` a component of type `(s-1)`, residual to a line.
    ResidualLineMinusH(usize),
    /// `A = D - 2H` on the quartic scroll with `D` of type `(1, 3)`.
    EllipticQuarticPencil,
    Other,
}

impl fmt::Display for PencilClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PencilClass::MinusH => f.write_str("MinusH"),
            PencilClass::LineMinusH(j) => write!(f, "LineMinusH({j})"),
            PencilClass::ResidualLineMinusH(j) => write!(f, "ResidualLineMinusH({j})"),
            PencilClass::EllipticQuarticPencil => f.write_str("EllipticQuarticPencil"),
            PencilClass::Other => f.write_str("Other"),
        }
    }
}

impl Serialize for PencilClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DestabilizerCandidate {
    pub c: i64,
    pub a: Vec<i64>,
    pub x: i64,
    #[serde(rename = "phiAA")]
    pub phi_aa: i64,
    #[serde(rename = "phiAC")]
    pub phi_ac: i64,
    #[serde(rename = "phiAAC")]
    pub phi_aac: i64,
    #[serde(rename = "class")]
    pub classification: PencilClass,
}

fn classify(model: &PicardModel, cls: &DivisorClass) -> PencilClass {
    let s = model.s;
    let nonzero: Vec<usize> = (0..cls.a.len()).filter(|&i| cls.a[i] != 0).collect();
    let ks = |j: usize| model.components[j].lambda.ks().to_vec();
    match (cls.c, nonzero.as_slice()) {
        (-1, []) => PencilClass::MinusH,
        (-1, &[j]) if cls.a[j] == 1 && ks(j) == [1] => PencilClass::LineMinusH(j + 1),
        (0, &[j]) if cls.a[j] == -1 && ks(j) == [s - 1] => PencilClass::ResidualLineMinusH(j + 1),
        (-2, &[0]) if s == 4 && model.rank() == 1 && cls.a[0] == 1 && ks(0) == [1, 3] => {
            PencilClass::EllipticQuarticPencil
        }
        _ => PencilClass::Other,
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Every class `A = cH + Σ a_i D_i` with `-d/2 < x < 0`, `x² ≥ φ(A, A)` and
/// `x² + dx + ks ≥ φ(A, A + C)`, i.e. every candidate for the divisor
/// destabilizing the rank-two bundle attached to a degree-`k` pencil.
///
/// Since `φ(A, A) ≥ Σ a_i²(q_i - b_i)` and every `q_i - b_i > 0`, the
/// `a`-vectors live in a bounded ellipsoid; `c` is then pinned by `x`.
/// Sorted by `x`, then `(c, a)`.
pub fn destabilizer_search(model: &PicardModel, k: i64) -> Result<Vec<DestabilizerCandidate>> {
    if k < 1 {
        return Err(Error::OutOfRange(format!(
            "pencil degree must be positive, got {k}"
        )));
    }
    let delta = delta_e(model.d, model.g, model.s, k);
    if delta <= 0 {
        return Err(Error::DeltaNotPositive { delta, k });
    }
    let (d, s) = (model.d, model.s);
    let x_max = d / 2;
    let budget = x_max * x_max;
    let weights: Vec<i64> = model
        .components
        .iter()
        .map(|comp| comp.q - comp.b)
        .collect();
    debug_assert!(weights.iter().all(|&w| w > 0));

    let mut vectors = Vec::new();
    let mut current = vec![0i64; weights.len()];
    ellipsoid(&weights, budget, 0, 0, &mut current, &mut vectors);

    let mut found = Vec::new();
    for a in vectors {
        let y = model.degree_of(0, &a);
        // -d < 2(cs + y)  and  cs + y < 0
        let c_lo = ceil_div(-d - 2 * y + 1, 2 * s);
        let c_hi = (-y - 1).div_euclid(s);
        if c_lo > c_hi {
            continue;
        }
        let phi_aa = model.phi_aa(&a);
        let phi_ac = model.phi_ac(&a);
        let phi_aac = phi_aa + phi_ac;
        for c in c_lo..=c_hi {
            let x = c * s + y;
            if x * x >= phi_aa && x * x + d * x + k * s >= phi_aac {
                let cls = DivisorClass { c, a: a.clone(), x };
                let classification = classify(model, &cls);
                found.push(DestabilizerCandidate {
                    c,
                    a: cls.a,
                    x,
                    phi_aa,
                    phi_ac,
                    phi_aac,
                    classification,
                });
            }
        }
    }
    found.sort_by(|l, r| (l.x, l.c, &l.a).cmp(&(r.x, r.c, &r.a)));
    Ok(found)
}

fn ellipsoid(
    weights: &[i64],
    budget: i64,
    i: usize,
    used: i64,
    current: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if i == weights.len() {
        out.push(current.clone());
        return;
    }
    let w = weights[i];
    let mut bound = 0;
    while used + (bound + 1) * (bound + 1) * w <= budget {
        bound += 1;
    }
    for a in -bound..=bound {
        current[i] = a;
        ellipsoid(weights, budget, i + 1, used + a * a * w, current, out);
    }
    current[i] = 0;
}

/// Intersection number `C.L` with the maximal multisecant line, read off the
/// lattice. In case A the line is the `(1)` component of `Γ`; in case B it is
/// residual to the `(s-1)` component `P` in a plane section, so `C.L = d - C.P`.
pub fn secant_degree(model: &PicardModel, case: SecantTag) -> Result<i64> {
    let find = |target: &[i64]| {
        model
            .components
            .iter()
            .position(|comp| comp.lambda.ks() == target)
            .ok_or_else(|| {
                Error::CaseMismatch(format!(
                    "{case:?} needs a component of type ({}), linked type is {}",
                    target
                        .iter()
                        .map(|k| k.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    model.linked_lambda
                ))
            })
    };
    match case {
        SecantTag::CaseA => Ok(model.c_dot_component(find(&[1])?)),
        SecantTag::CaseB => Ok(model.d - model.c_dot_component(find(&[model.s - 1])?)),
        other => Err(Error::CaseMismatch(format!(
            "{other:?} has no distinguished secant line"
        ))),
    }
}

/// `(s, d, g)` triples with `s ≥ 4` where `Δ` at `k = d - 5` can fail to be
/// positive; the gonality statement excludes them.
pub const DELTA_POS_A: [(i64, i64, i64); 9] = [
    (4, 10, 11),
    (5, 15, 26),
    (5, 16, 30),
    (6, 21, 50),
    (6, 22, 55),
    (6, 23, 60),
    (7, 28, 85),
    (7, 29, 91),
    (8, 36, 133),
];

/// Same with `k = d - 4`; the Clifford index stays undecided here.
pub const DELTA_POS_B: [(i64, i64, i64); 16] = [
    (4, 10, 11),
    (4, 11, 14),
    (4, 12, 17),
    (5, 15, 26),
    (5, 16, 30),
    (5, 17, 34),
    (5, 18, 38),
    (6, 21, 50),
    (6, 22, 55),
    (6, 23, 60),
    (6, 24, 65),
    (7, 28, 85),
    (7, 29, 91),
    (7, 30, 97),
    (8, 36, 133),
    (8, 37, 140),
];

/// Cases excluded from the maximal-secant-line statement: the first list
/// without `(4, 10, 11)`.
pub fn gonality_exclusions() -> Vec<(i64, i64, i64)> {
    DELTA_POS_A
        .iter()
        .copied()
        .filter(|&t| t != (4, 10, 11))
        .collect()
}

/// All h-vectors of decreasing type with the given `s` and degree at most
/// `d_max`: the ramp `1..=s`, any number of extra `s`, then a strictly
/// decreasing run of values below `s`.
pub fn decreasing_type_hvectors(s: i64, d_max: i64) -> Vec<HVector> {
    let base: Vec<i64> = (1..=s).collect();
    let base_deg = s * (s + 1) / 2;
    let mut out = Vec::new();
    if s < 1 || base_deg > d_max {
        return out;
    }
    let tails = 1u64 << (s - 1);
    let mut plateau = 0;
    while base_deg + plateau * s <= d_max {
        for mask in 0..tails {
            let tail: Vec<i64> = (1..s).rev().filter(|v| mask >> (v - 1) & 1 == 1).collect();
            let deg = base_deg + plateau * s + tail.iter().sum::<i64>();
            if deg > d_max {
                continue;
            }
            let mut values = base.clone();
            values.extend(std::iter::repeat_n(s, plateau as usize));
            values.extend(tail);
            out.push(HVector::new(values).expect("decreasing-type h-vector is admissible"));
        }
        plateau += 1;
    }
    out.sort_by(|l, r| (l.degree(), l.values()).cmp(&(r.degree(), r.values())));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ScanHit {
    pub s: i64,
    pub d: i64,
    pub g: i64,
}

/// Distinct `(s, d, g)` of decreasing-type curves with `s_min ≤ s ≤ s_max`,
/// `d ≤ d_max` and `Δ ≤ 0` at `k = d - k_offset`.
pub fn scan_exceptions(s_min: i64, s_max: i64, d_max: i64, k_offset: i64) -> Result<Vec<ScanHit>> {
    if s_min < 4 || s_min > s_max {
        return Err(Error::OutOfRange(format!(
            "need 4 <= s_min <= s_max, got {s_min}..{s_max}"
        )));
    }
    if d_max < s_max * (s_max + 1) / 2 {
        return Err(Error::OutOfRange(format!(
            "d_max = {d_max} is below the minimal degree {} for s = {s_max}",
            s_max * (s_max + 1) / 2
        )));
    }
    if !(4..=5).contains(&k_offset) {
        return Err(Error::OutOfRange(format!(
            "k_offset must be 4 or 5, got {k_offset}"
        )));
    }
    let hits: BTreeSet<ScanHit> = (s_min..=s_max)
        .into_par_iter()
        .flat_map_iter(|s| {
            decreasing_type_hvectors(s, d_max)
                .into_iter()
                .filter_map(move |h| {
                    let (d, g) = (h.degree(), h.genus());
                    (delta_e(d, g, s, d - k_offset) <= 0).then_some(ScanHit { s, d, g })
                })
        })
        .collect();
    Ok(hits.into_iter().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Flags {
    /// `(s, d, g)` is excluded from the maximal-secant-line statement.
    pub thm1_undecided: bool,
    /// `Δ ≤ 0` at `k = d - 4` is possible, so the Clifford index is open.
    pub thm3_undecided: bool,
    /// The linked curve is an elliptic quartic on the quartic scroll, which
    /// carries one more pencil of the predicted degree.
    pub elliptic_quartic_extra_pencil: bool,
    pub not_decreasing_type: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GonalityReport {
    pub hvector: HVector,
    pub d: i64,
    pub g: i64,
    pub s: i64,
    pub t: Option<i64>,
    pub e: Speciality,
    pub case: SecantTag,
    pub l: Option<i64>,
    pub gonality: Option<i64>,
    pub clifford: Option<i64>,
    pub unique_pencil: bool,
    pub flags: Flags,
    /// `C.L` recomputed on the lattice, when a distinguished line exists.
    pub lattice_secant_order: Option<i64>,
    /// Destabilizer candidates at `k = gonality`; `None` when `Δ ≤ 0`.
    pub candidates: Option<Vec<DestabilizerCandidate>>,
    /// Same at `k = gonality - 1`.
    pub candidates_below: Option<Vec<DestabilizerCandidate>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model: Option<PicardModel>,
}

fn search_or_none(model: &PicardModel, k: i64) -> Result<Option<Vec<DestabilizerCandidate>>> {
    match destabilizer_search(model, k) {
        Ok(found) => Ok(Some(found)),
        Err(Error::DeltaNotPositive { .. }) | Err(Error::OutOfRange(_)) => Ok(None),
        Err(other) => Err(other),
    }
}

/// Predicted gonality `d - l` of a general ACM curve with this h-vector,
/// with the lattice evidence behind it. Curves with `s ≤ 3` or of
/// non-decreasing type come back as `OutOfScope` with no prediction.
pub fn predict_gonality(h: &HVector) -> Result<GonalityReport> {
    let inv = h.invariants();
    let case = h.multisecant_case();
    let mut report = GonalityReport {
        hvector: h.clone(),
        d: inv.d,
        g: inv.g,
        s: inv.s,
        t: inv.t,
        e: inv.e,
        case: case.tag,
        l: None,
        gonality: None,
        clifford: None,
        unique_pencil: false,
        flags: Flags::default(),
        lattice_secant_order: None,
        candidates: None,
        candidates_below: None,
        model: None,
    };
    if case.tag == SecantTag::OutOfScope {
        return Ok(report);
    }
    if !h.is_decreasing_type() {
        report.case = SecantTag::OutOfScope;
        report.flags.not_decreasing_type = true;
        return Ok(report);
    }
    let model = PicardModel::new(h)?;
    let l = case.l.expect("in-scope case carries l");
    let gon = inv.d - l;
    let key = (inv.s, inv.d, inv.g);
    report.flags.thm1_undecided = gonality_exclusions().contains(&key);
    report.flags.thm3_undecided = DELTA_POS_B.contains(&key);
    report.flags.elliptic_quartic_extra_pencil =
        inv.s == 4 && model.rank() == 1 && model.components[0].lambda.ks() == [1, 3];
    report.l = Some(l);
    report.gonality = Some(gon);
    report.clifford = (!report.flags.thm3_undecided).then_some(gon - 2);
    report.unique_pencil = case.unique_pencil;
    if matches!(case.tag, SecantTag::CaseA | SecantTag::CaseB) {
        report.lattice_secant_order = Some(secant_degree(&model, case.tag)?);
    }
    report.candidates = search_or_none(&model, gon)?;
    report.candidates_below = search_or_none(&model, gon - 1)?;
    report.model = Some(model);
    Ok(report)
}
