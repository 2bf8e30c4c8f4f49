//! The liaison-invariant form `φ(D, E) = (D.H)(E.H) - s (D.E)` on the
//! Picard group of a smooth degree-`s` surface, evaluated on ACM curves
//! through their numerical invariants, plus the auxiliary Chern-class
//! quantities used by the instability argument.
//!
//! All values are exact integers except the Cayley number, which is kept as
//! a rational with denominator dividing 12.

use num_rational::Ratio;
use serde::Serialize;

use crate::biliaison::{enumerate_s_minimal, not_ordered, BiliaisonType};
use crate::error::{Error, Result};

/// `φ(D, D) = d² + s(s - 4)d - 2s(g - 1)` for a curve of degree `d` and
/// arithmetic genus `g` on a degree-`s` surface.
pub fn phi_from_dg(d: i64, g: i64, s: i64) -> i64 {
    d * d + s * (s - 4) * d - 2 * s * (g - 1)
}

/// `q(λ)` in closed form:
/// `Σ k_i (s-1)(s-k_i) - 2 Σ_{i<j} k_i (s-k_j)`.
pub fn q_lambda(lambda: &BiliaisonType, s: i64) -> Result<i64> {
    lambda.require_s_minimal(s)?;
    let ks = lambda.ks();
    let diagonal: i64 = ks.iter().map(|k| k * (s - 1) * (s - k)).sum();
    // Σ_{i<j} k_i (s - k_j) = Σ_j (s - k_j) · (k_1 + ... + k_{j-1})
    let mut prefix = 0;
    let mut cross = 0;
    for &k in ks {
        cross += prefix * (s - k);
        prefix += k;
    }
    Ok(diagonal - 2 * cross)
}

/// `q(λ ∪ μ) = q(λ) + q(μ) - 2 d_λ d_{μ'}` for `λ < μ`.
pub fn q_recursion(lambda: &BiliaisonType, mu: &BiliaisonType, s: i64) -> Result<i64> {
    if !lambda.precedes(mu) {
        return Err(not_ordered(lambda, mu));
    }
    let mu_dual = mu.dual(s)?;
    Ok(q_lambda(lambda, s)? + q_lambda(mu, s)? - 2 * lambda.degree() * mu_dual.degree())
}

/// `φ(D_i, D_j) = -d_{λ_i} d_{λ_j'}`; only valid when `λ_i < λ_j`.
pub fn phi_cross(lambda_i: &BiliaisonType, lambda_j: &BiliaisonType, s: i64) -> Result<i64> {
    if !lambda_i.precedes(lambda_j) {
        return Err(not_ordered(lambda_i, lambda_j));
    }
    lambda_i.require_s_minimal(s)?;
    Ok(-lambda_i.degree() * lambda_j.dual(s)?.degree())
}

/// Self-intersection `C² = (d² - φ(C, C)) / s`.
pub fn c_squared(d: i64, g: i64, s: i64) -> Result<i64> {
    if s < 1 {
        return Err(Error::OutOfRange(format!("surface degree s = {s}")));
    }
    let num = d * d - phi_from_dg(d, g, s);
    if num % s != 0 {
        return Err(Error::NotIntegral { d, g, s });
    }
    Ok(num / s)
}

/// `δ_s(d, g) = 2g - 2 - ds`.
pub fn delta_s(d: i64, g: i64, s: i64) -> i64 {
    2 * g - 2 - d * s
}

/// Discriminant `Δ(E) = c_1² - 4c_2 = C² - 4k` of the bundle attached to a
/// degree-`k` pencil.
pub fn delta_e(d: i64, g: i64, s: i64, k: i64) -> i64 {
    delta_s(d, g, s) + 4 * (d - k)
}

/// Virtual number of 4-secant lines,
/// `(d-2)(d-3)²(d-4)/12 - g(d² - 7d + 13 - g)/2`.
pub fn cayley_number(d: i64, g: i64) -> Ratio<i64> {
    Ratio::new((d - 2) * (d - 3) * (d - 3) * (d - 4), 12)
        - Ratio::new(g * (d * d - 7 * d + 13 - g), 2)
}

pub fn cayley_positive(d: i64, g: i64) -> bool {
    cayley_number(d, g) > Ratio::from_integer(0)
}

/// Closed form of `m(f, s)`, the minimum of `q` over two-element `s`-minimal
/// types of degree `≡ ±f (mod s)`, together with the types attaining it.
pub fn m_f_s(f: i64, s: i64) -> Result<(i64, Vec<BiliaisonType>)> {
    if s < 5 || !(0..s).contains(&f) {
        return Err(Error::OutOfRange(format!(
            "m(f, s) needs s >= 5 and 0 <= f < s, got ({f}, {s})"
        )));
    }
    let base = f * (s - 1) * (s - f);
    let first_branch = (3 <= f && f <= s - f) || f == s - 2 || f == s - 1;
    let (value, pair) = if first_branch {
        (
            base + 2 * s * (f - 2),
            [vec![1, f - 1], vec![s - f + 1, s - 1]],
        )
    } else {
        (
            base + 2 * s * (s - f - 2),
            [vec![1, s - f - 1], vec![f + 1, s - 1]],
        )
    };
    let mut attaining: Vec<BiliaisonType> = pair
        .into_iter()
        .map(|ks| BiliaisonType::new(ks).expect("attaining types are valid"))
        .collect();
    attaining.sort();
    attaining.dedup();
    Ok((value, attaining))
}

/// Exhaustive counterpart of [`m_f_s`]: scans every `(h, k)` with
/// `1 <= h < k < s`.
pub fn m_f_s_brute(f: i64, s: i64) -> Result<(i64, Vec<BiliaisonType>)> {
    if s < 2 || !(0..s).contains(&f) {
        return Err(Error::OutOfRange(format!(
            "m(f, s) needs 0 <= f < s, got ({f}, {s})"
        )));
    }
    let mut best: Option<i64> = None;
    let mut attaining = Vec::new();
    for h in 1..s {
        for k in h + 1..s {
            let r = (h + k) % s;
            if r != f && r != (s - f) % s {
                continue;
            }
            let lambda = BiliaisonType::new(vec![h, k]).unwrap();
            let q = q_lambda(&lambda, s)?;
            match best {
                Some(b) if q > b => {}
                Some(b) if q == b => attaining.push(lambda),
                _ => {
                    best = Some(q);
                    attaining = vec![lambda];
                }
            }
        }
    }
    attaining.sort();
    best.map(|b| (b, attaining)).ok_or_else(|| {
        Error::OutOfRange(format!(
            "no two-element {s}-minimal type of degree ±{f} mod {s}"
        ))
    })
}

/// Two-element formula: `q((h, k))` by residue class of `h + k`.
pub fn q_pair_closed_form(h: i64, k: i64, s: i64) -> i64 {
    let f = (h + k).rem_euclid(s);
    let base = f * (s - 1) * (s - f);
    if h + k < s {
        base + 2 * h * (k - 1) * s
    } else {
        base + 2 * (s - k) * (s - h - 1) * s
    }
}

/// Lower bound for `q(λ)` over `s`-minimal `λ` with at least two entries
/// and degree `≡ f (mod s)`.
pub fn cbound(f: i64, s: i64) -> Result<i64> {
    if s < 3 || !(0..s).contains(&f) {
        return Err(Error::OutOfRange(format!(
            "cbound needs s >= 3 and 0 <= f < s, got ({f}, {s})"
        )));
    }
    Ok(if f == 0 {
        2 * s * (s - 2)
    } else if f == 1 || f == s - 1 {
        3 * s * s - 8 * s + 1
    } else {
        2 * s * s - 4 * s + 4
    })
}

/// Which of the nested closed bands `q ≤ (s-1)²`, `q ≤ s²`, `q ≤ (s+1)²`
/// a small value of `q` first falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Threshold {
    AtMostSMinusOneSquared,
    AtMostSSquared,
    AtMostSPlusOneSquared,
}

impl Threshold {
    pub fn classify(q: i64, s: i64) -> Option<Threshold> {
        if q <= (s - 1) * (s - 1) {
            Some(Threshold::AtMostSMinusOneSquared)
        } else if q <= s * s {
            Some(Threshold::AtMostSSquared)
        } else if q <= (s + 1) * (s + 1) {
            Some(Threshold::AtMostSPlusOneSquared)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmallQ {
    pub lambda: BiliaisonType,
    pub q: i64,
    pub threshold: Threshold,
}

/// Every `s`-minimal type with `q(λ) ≤ (s+1)²`, in canonical order.
pub fn small_q_classification(s: i64) -> Result<Vec<SmallQ>> {
    if s < 4 {
        return Err(Error::OutOfRange(format!(
            "small-q classification needs s >= 4, got {s}"
        )));
    }
    let mut out = Vec::new();
    for lambda in enumerate_s_minimal(s) {
        let q = q_lambda(&lambda, s)?;
        if let Some(threshold) = Threshold::classify(q, s) {
            out.push(SmallQ {
                lambda,
                q,
                threshold,
            });
        }
    }
    Ok(out)
}

/// The seven-item list of types with `q ≤ (s+1)²` for `s ≥ 5`, written out
/// case by case.
pub fn small_q_reference(s: i64) -> Vec<BiliaisonType> {
    assert!(s >= 5);
    let mut ks: Vec<Vec<i64>> = vec![vec![], vec![1], vec![s - 1]];
    if (5..=7).contains(&s) {
        ks.push(vec![2]);
        ks.push(vec![s - 2]);
    }
    if s == 6 {
        ks.push(vec![3]);
    }
    if s == 5 || s == 6 {
        ks.push(vec![1, s - 1]);
    }
    if s == 5 {
        ks.extend([vec![1, 3], vec![2, 4], vec![1, 2], vec![3, 4]]);
    }
    let mut out: Vec<BiliaisonType> = ks
        .into_iter()
        .map(|k| BiliaisonType::new(k).unwrap())
        .collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(ks: &[i64]) -> BiliaisonType {
        BiliaisonType::new(ks.to_vec()).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_from_dg(3, 0, 7), 86);
        assert_eq!(phi_from_dg(35, 130, 7), 154);
        assert_eq!(phi_from_dg(20, 48, 5), 30);
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_lambda(&lam(&[1, 4]), 5).unwrap(), 30);
        assert_eq!(q_lambda(&lam(&[1, 2]), 5).unwrap(), 34);
        assert_eq!(q_lambda(&BiliaisonType::empty(), 5).unwrap(), 0);
        for s in 2..12 {
            for k in 1..s {
                assert_eq!(q_lambda(&lam(&[k]), s).unwrap(), k * (s - 1) * (s - k));
            }
            // staircase (1, ..., k): 3q = d(3s² - 2s(2k+1) + 3d)
            for k in 1..s {
                let stair: Vec<i64> = (1..=k).collect();
                let d = k * (k + 1) / 2;
                assert_eq!(
                    3 * q_lambda(&lam(&stair), s).unwrap(),
                    d * (3 * s * s - 2 * s * (2 * k + 1) + 3 * d)
                );
            }
        }
        assert_eq!(
            q_lambda(&lam(&[1, 5]), 5).unwrap_err().code(),
            "NOT_S_MINIMAL"
        );
    }

    #[test]
    fn complete_intersection_types() {
        // An s-minimal (a, b) complete intersection has q = ab(s-a)(s-b).
        for s in 3..10 {
            for a in 1..s {
                for b in a..=s - a {
                    let ci = crate::biliaison::ci_hvector(a, b).unwrap();
                    let lambda = BiliaisonType::from_hvector(&ci);
                    assert_eq!(q_lambda(&lambda, s).unwrap(), a * b * (s - a) * (s - b));
                }
            }
        }
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(q_recursion(&lam(&[1, 2]), &lam(&[5, 6]), 7).unwrap(), 154);
        assert_eq!(q_recursion(&lam(&[1]), &lam(&[4]), 5).unwrap(), 30);
        assert_eq!(
            q_recursion(&BiliaisonType::empty(), &lam(&[2, 3]), 5).unwrap(),
            q_lambda(&lam(&[2, 3]), 5).unwrap()
        );
        assert_eq!(
            q_recursion(&lam(&[3]), &lam(&[2]), 5).unwrap_err().code(),
            "NOT_ORDERED"
        );
    }

    #[test]
    fn cross_examples() {
        assert_eq!(phi_cross(&lam(&[1, 2]), &lam(&[5, 6]), 7).unwrap(), -9);
        assert_eq!(phi_cross(&lam(&[1]), &lam(&[4]), 5).unwrap(), -1);
        for s in 3..12 {
            assert_eq!(phi_cross(&lam(&[1]), &lam(&[s - 1]), s).unwrap(), -1);
        }
        assert_eq!(
            phi_cross(&lam(&[4]), &lam(&[1]), 5).unwrap_err().code(),
            "NOT_ORDERED"
        );
    }

    #[test]
    fn self_intersections() {
        assert_eq!(c_squared(20, 48, 5).unwrap(), 74);
        assert_eq!(c_squared(35, 130, 7).unwrap(), 153);
        assert_eq!(c_squared(4, 1, 4).unwrap(), 0);
        // d² - φ = s(2g - 2 - (s-4)d) is always a multiple of s
        assert_eq!(c_squared(20, 48, 0).unwrap_err().code(), "OUT_OF_RANGE");
    }

    #[test]
    fn discriminants() {
        assert_eq!(delta_e(10, 11, 4, 6), -4);
        assert_eq!(delta_e(35, 130, 7, 31), 29);
        assert_eq!(
            delta_e(35, 130, 7, 31),
            c_squared(35, 130, 7).unwrap() - 4 * 31
        );
        assert_eq!(delta_e(12, 17, 4, 8), 0);
        assert_eq!(delta_e(20, 48, 5, 13), 22);
    }

    #[test]
    fn cayley() {
        assert_eq!(cayley_number(9, 10), Ratio::from_integer(0));
        assert!(!cayley_positive(9, 10));
        assert_eq!(cayley_number(12, 19), Ratio::from_integer(27));
        assert_eq!(cayley_number(4, 0), Ratio::from_integer(0));
        assert_eq!(cayley_number(6, 0), Ratio::from_integer(6));
    }

    #[test]
    fn m_f_s_examples() {
        let (v, at) = m_f_s(2, 5).unwrap();
        assert_eq!((v, at), (34, vec![lam(&[1, 2]), lam(&[3, 4])]));
        let (v, at) = m_f_s(1, 5).unwrap();
        assert_eq!(v, 36);
        assert_eq!(v, q_lambda(&lam(&[1, 3]), 5).unwrap());
        assert_eq!(at, vec![lam(&[1, 3]), lam(&[2, 4])]);
        let (v, at) = m_f_s(0, 6).unwrap();
        assert_eq!((v, at), (48, vec![lam(&[1, 5])]));
        assert_eq!(m_f_s_brute(0, 6).unwrap().0, 48);
        assert_eq!(m_f_s(5, 5).unwrap_err().code(), "OUT_OF_RANGE");
        assert_eq!(m_f_s(1, 4).unwrap_err().code(), "OUT_OF_RANGE");
    }

    #[test]
    fn cbound_examples() {
        assert_eq!(cbound(0, 7).unwrap(), 70);
        assert_eq!(cbound(1, 5).unwrap(), 36);
        assert_eq!(cbound(4, 5).unwrap(), 36);
        assert_eq!(cbound(2, 5).unwrap(), 34);
        assert_eq!(cbound(2, 2).unwrap_err().code(), "OUT_OF_RANGE");
    }

    #[test]
    fn small_q_examples() {
        let seven = small_q_classification(7).unwrap();
        let got: Vec<(BiliaisonType, i64)> =
            seven.iter().map(|r| (r.lambda.clone(), r.q)).collect();
        assert_eq!(
            got,
            vec![
                (BiliaisonType::empty(), 0),
                (lam(&[1]), 36),
                (lam(&[2]), 60),
                (lam(&[5]), 60),
                (lam(&[6]), 36),
            ]
        );
        let six = small_q_classification(6).unwrap();
        assert!(six.iter().any(|r| r.lambda == lam(&[3]) && r.q == 45));
        let nine: Vec<BiliaisonType> = small_q_classification(9)
            .unwrap()
            .into_iter()
            .map(|r| r.lambda)
            .collect();
        assert_eq!(nine, vec![BiliaisonType::empty(), lam(&[1]), lam(&[8])]);
        let four = small_q_classification(4).unwrap();
        let band: Vec<&BiliaisonType> = four
            .iter()
            .filter(|r| r.threshold == Threshold::AtMostSSquared)
            .map(|r| &r.lambda)
            .collect();
        assert_eq!(band, vec![&lam(&[2]), &lam(&[1, 3])]);
        assert_eq!(
            small_q_classification(3).unwrap_err().code(),
            "OUT_OF_RANGE"
        );
    }
}
