//! Exhaustive verification of the identities and lower bounds satisfied by
//! `q` over all `2^(s-1)` `s`-minimal biliaison types.

use serde::Serialize;

use crate::biliaison::{enumerate_s_basic, enumerate_s_minimal, link_hvector, BiliaisonType};
use crate::error::{Error, Result};
use crate::quadform::{
    cbound, m_f_s, m_f_s_brute, phi_cross, phi_from_dg, q_lambda, q_pair_closed_form, q_recursion,
    small_q_classification, small_q_reference, Threshold,
};

const MAX_WITNESSES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: u64,
    pub passed: bool,
    /// First few counterexamples, empty when the check passed.
    pub witnesses: Vec<String>,
}

/// One row of the residue-class lower bound check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub lambda: BiliaisonType,
    pub s: i64,
    pub q: i64,
    pub bound: i64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub s: i64,
    pub checks: Vec<CheckResult>,
    pub bounds: Vec<BoundReport>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.bounds.iter().all(|b| b.pass)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Check {
    name: &'static str,
    cases: u64,
    witnesses: Vec<String>,
    failed: bool,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            cases: 0,
            witnesses: Vec::new(),
            failed: false,
        }
    }

    fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed = true;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            cases: self.cases,
            passed: !self.failed,
            witnesses: self.witnesses,
        }
    }
}

/// All increasing sequences drawn from `lo..=hi`.
fn subsets(lo: i64, hi: i64) -> Vec<BiliaisonType> {
    if lo > hi {
        return vec![BiliaisonType::empty()];
    }
    let width = (hi - lo + 1) as u32;
    (0u64..1 << width)
        .map(|mask| {
            let ks = (lo..=hi).filter(|k| mask >> (k - lo) & 1 == 1).collect();
            BiliaisonType::new(ks).unwrap()
        })
        .collect()
}

fn join(parts: &[&BiliaisonType]) -> BiliaisonType {
    let ks = parts.iter().flat_map(|p| p.ks().iter().copied()).collect();
    BiliaisonType::new(ks).expect("parts are ordered")
}

fn single(k: i64) -> BiliaisonType {
    BiliaisonType::new(vec![k]).unwrap()
}

/// Runs every check for a single `s`.
pub fn verify_quadform_bounds(s: i64) -> Result<VerificationReport> {
    if !(4..=12).contains(&s) {
        return Err(Error::OutOfRange(format!(
            "verification runs for 4 <= s <= 12, got {s}"
        )));
    }
    let all = enumerate_s_minimal(s);
    let q = |l: &BiliaisonType| q_lambda(l, s).expect("enumerated types are s-minimal");
    let mut checks = Vec::new();

    let mut c = Check::new("closed_form_matches_genus_formula");
    for l in &all {
        let inv = l.to_hvector().invariants();
        let via_dg = phi_from_dg(inv.d, inv.g, s);
        c.expect(q(l) == via_dg, || {
            format!("{l}: q = {} but phi(d, g) = {via_dg}", q(l))
        });
        if let Ok(li) = l.invariants() {
            c.expect(li == inv, || {
                format!("{l}: invariants {li:?} vs h-vector {inv:?}")
            });
        }
        c.expect(BiliaisonType::from_hvector(&l.to_hvector()) == *l, || {
            format!("{l}: round trip")
        });
    }
    checks.push(c.finish());

    let mut c = Check::new("nonnegative");
    for l in &all {
        c.expect(q(l) >= 0 && (q(l) == 0) == l.is_empty(), || {
            format!("{l}: q = {}", q(l))
        });
    }
    checks.push(c.finish());

    let mut c = Check::new("duality");
    for l in &all {
        let dual = l.dual(s)?;
        c.expect(q(&dual) == q(l), || {
            format!("{l}' = {dual}: {} vs {}", q(&dual), q(l))
        });
        c.expect(dual.len() == l.len(), || format!("{l}: length changed"));
        c.expect(dual.degree() == l.len() as i64 * s - l.degree(), || {
            format!("{l}: degree law")
        });
        c.expect(dual.dual(s)? == *l, || {
            format!("{l}: dual is not an involution")
        });
    }
    checks.push(c.finish());

    let mut c = Check::new("linkage_involution");
    let ci_top = 2 * s - 2;
    for l in &all {
        let h = l.to_hvector();
        let linked = link_hvector(&h, s, s)?;
        let back = link_hvector(&linked, s, s)?;
        c.expect(back == h, || format!("{l}: link twice gives {{{back}}}"));
        c.expect(linked.top().is_none_or(|n| n <= ci_top), || {
            format!("{l}: support")
        });
    }
    let mut minimal_images: Vec<BiliaisonType> = enumerate_s_basic(s)
        .iter()
        .map(|h| link_hvector(h, s, s).map(|g| BiliaisonType::from_hvector(&g)))
        .collect::<Result<_>>()?;
    minimal_images.sort();
    c.expect(minimal_images == all, || {
        format!("(s, s)-links of the {s}-basic h-vectors are not the {s}-minimal types")
    });
    checks.push(c.finish());

    let mut c = Check::new("recursion_a");
    for nu in &all {
        for split in 0..=nu.len() {
            let lambda = BiliaisonType::new(nu.ks()[..split].to_vec()).unwrap();
            let mu = BiliaisonType::new(nu.ks()[split..].to_vec()).unwrap();
            let rec = q_recursion(&lambda, &mu, s)?;
            c.expect(rec == q(nu), || {
                format!("{lambda} ∪ {mu}: recursion {rec} vs {}", q(nu))
            });
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("recursion_b");
    for k in 1..s - 1 {
        for lambda in subsets(1, k - 1) {
            for mu in subsets(k + 2, s - 1) {
                let with_next = q(&join(&[&lambda, &single(k + 1), &mu]));
                let with_k = q(&join(&[&lambda, &single(k), &mu]));
                let expected =
                    (s - 1) * (s - 1 - 2 * k) - 2 * (mu.dual(s)?.degree() - lambda.degree());
                c.expect(with_next - with_k == expected, || {
                    format!(
                        "λ = {lambda}, k = {k}, μ = {mu}: difference {} vs {expected}",
                        with_next - with_k
                    )
                });
            }
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("recursion_c");
    for h in 2..s {
        for k in h + 1..s - 1 {
            for lambda in subsets(1, h - 2) {
                for beta in subsets(h + 1, k - 1) {
                    for mu in subsets(k + 2, s - 1) {
                        let delta = q(&join(&[&lambda, &single(h), &beta, &single(k), &mu]));
                        let eps = q(&join(&[
                            &lambda,
                            &single(h - 1),
                            &beta,
                            &single(k + 1),
                            &mu,
                        ]));
                        let expected = 2 * s * (k - h - beta.len() as i64);
                        c.expect(delta - eps == expected && expected >= 2 * s, || {
                            format!("λ = {lambda}, h = {h}, β = {beta}, k = {k}, μ = {mu}: {} vs {expected}", delta - eps)
                        });
                    }
                }
            }
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("insertion_growth");
    for l in &all {
        let top = l.max().unwrap_or(0);
        for k in 1..s {
            if l.ks().contains(&k) {
                continue;
            }
            let mut ks = l.ks().to_vec();
            let pos = ks.partition_point(|&x| x < k);
            ks.insert(pos, k);
            let grown = q(&BiliaisonType::new(ks).unwrap());
            if k > top {
                let bound = q(l) + k * (s - k) * (s - k);
                c.expect(grown >= bound, || {
                    format!("{l} + ({k}) at the end: {grown} < {bound}")
                });
            } else if pos > 0 {
                let bound = q(l) + k * (s - k);
                c.expect(grown >= bound, || {
                    format!("{l} + ({k}) inside: {grown} < {bound}")
                });
            }
        }
        if !l.is_empty() {
            c.expect(q(l) >= (s - 1) * (s - 1), || format!("{l}: q below (s-1)²"));
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("two_element_formula");
    for l in all.iter().filter(|l| l.len() == 2) {
        let (h, k) = (l.ks()[0], l.ks()[1]);
        let closed = q_pair_closed_form(h, k, s);
        c.expect(closed == q(l), || {
            format!("{l}: closed form {closed} vs {}", q(l))
        });
    }
    // both branches agree on the boundary h + k = s
    for h in 1..s {
        let k = s - h;
        if h < k {
            let f = 0;
            let low = f * (s - 1) * (s - f) + 2 * h * (k - 1) * s;
            let high = f * (s - 1) * (s - f) + 2 * (s - k) * (s - h - 1) * s;
            c.expect(low == high, || {
                format!("({h}, {k}): branches {low} vs {high}")
            });
        }
    }
    checks.push(c.finish());

    if s >= 5 {
        let mut c = Check::new("pair_minimum");
        for f in 0..s {
            let (closed, attaining) = m_f_s(f, s)?;
            let (brute, brute_attaining) = m_f_s_brute(f, s)?;
            c.expect(closed == brute, || {
                format!("m({f}, {s}): closed {closed} vs exhaustive {brute}")
            });
            c.expect(
                attaining.iter().all(|l| brute_attaining.contains(l)),
                || format!("m({f}, {s}): attaining {attaining:?} not among {brute_attaining:?}"),
            );
        }
        checks.push(c.finish());

        let mut c = Check::new("three_or_more_bound");
        for l in all.iter().filter(|l| l.len() >= 3) {
            let f = l.degree().rem_euclid(s);
            let bound = 2 * s + m_f_s(f, s)?.0;
            c.expect(q(l) >= bound, || {
                format!("{l}: q = {} < 2s + m({f}, {s}) = {bound}", q(l))
            });
        }
        checks.push(c.finish());
    }

    let mut bounds = Vec::new();
    let mut c = Check::new("residue_class_bound");
    for l in all.iter().filter(|l| l.len() >= 2) {
        let bound = cbound(l.degree().rem_euclid(s), s)?;
        let pass = q(l) >= bound;
        c.expect(pass, || format!("{l}: q = {} < {bound}", q(l)));
        bounds.push(BoundReport {
            lambda: l.clone(),
            s,
            q: q(l),
            bound,
            pass,
        });
    }
    checks.push(c.finish());

    let mut c = Check::new("small_q_classification");
    let small = small_q_classification(s)?;
    if s >= 5 {
        let got: Vec<BiliaisonType> = small.iter().map(|r| r.lambda.clone()).collect();
        let expected = small_q_reference(s);
        c.expect(got == expected, || {
            format!("scan {got:?} vs list {expected:?}")
        });
    }
    let lowest = [BiliaisonType::empty(), single(1), single(s - 1)];
    let middle: Vec<BiliaisonType> = match s {
        4 => vec![single(2), BiliaisonType::new(vec![1, 3]).unwrap()],
        5 => vec![single(2), single(3)],
        _ => vec![],
    };
    for r in &small {
        match r.threshold {
            Threshold::AtMostSMinusOneSquared => c.expect(lowest.contains(&r.lambda), || {
                format!("{} in the lowest band", r.lambda)
            }),
            Threshold::AtMostSSquared => c.expect(middle.contains(&r.lambda), || {
                format!("{} in the middle band", r.lambda)
            }),
            Threshold::AtMostSPlusOneSquared => c.expect(true, String::new),
        }
    }
    for l in &middle {
        c.expect(
            small
                .iter()
                .any(|r| &r.lambda == l && r.threshold == Threshold::AtMostSSquared),
            || format!("{l} missing from the middle band"),
        );
    }
    checks.push(c.finish());

    let mut c = Check::new("component_dominance");
    for l in all.iter().filter(|l| !l.is_empty()) {
        let pieces = l.gap_decomposition()?.pieces;
        for (i, piece) in pieces.iter().enumerate() {
            let mut b = 0;
            for (j, other) in pieces.iter().enumerate() {
                if i < j {
                    b -= phi_cross(piece, other, s)?;
                } else if j < i {
                    b -= phi_cross(other, piece, s)?;
                }
            }
            let qi = q(piece);
            c.expect(qi > 2 * b, || {
                format!("{l}, piece {piece}: q_i = {qi}, b_i = {b}")
            });
        }
    }
    checks.push(c.finish());

    Ok(VerificationReport { s, checks, bounds })
}

/// Runs [`verify_quadform_bounds`] for each `s` in `s_min..=s_max`, in
/// parallel on the current rayon pool; output is ordered by `s`.
pub fn verify_range(s_min: i64, s_max: i64) -> Result<Vec<VerificationReport>> {
    use rayon::prelude::*;
    (s_min..=s_max)
        .into_par_iter()
        .map(verify_quadform_bounds)
        .collect()
}
