//! Numerical model of `Pic(X) = Z[H] ⊕ Z[D_1] ⊕ ... ⊕ Z[D_r]` for a smooth
//! surface `X` of minimal degree `s` through a curve `C`, where the `D_i`
//! are the components of the curve `Γ` linked to `C` by `(s, t)`.
//!
//! Only `φ` is modelled. It vanishes on `H`, so a class `cH + Σ a_i D_i`
//! enters `φ` through its `a` coefficients alone.

use serde::Serialize;

use crate::biliaison::{link_hvector, BiliaisonType};
use crate::error::{Error, Result};
use crate::hvector::HVector;
use crate::quadform::{phi_cross, phi_from_dg, q_lambda};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub lambda: BiliaisonType,
    pub degree: i64,
    /// `q_i = φ(D_i, D_i)`
    pub q: i64,
    /// `b_i = -Σ_{j≠i} φ(D_i, D_j)`
    pub b: i64,
}

/// `A = cH + Σ a_i D_i` with its degree `x = A.H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DivisorClass {
    pub c: i64,
    pub a: Vec<i64>,
    pub x: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PicardModel {
    pub s: i64,
    pub t: i64,
    pub d: i64,
    pub g: i64,
    pub linked: HVector,
    pub linked_lambda: BiliaisonType,
    pub components: Vec<Component>,
    /// Symmetric `r × r` matrix of `φ(D_i, D_j)`, with `q_i` on the diagonal.
    pub phi: Vec<Vec<i64>>,
    /// `C = tH - Σ D_i`.
    pub c_class: DivisorClass,
}

impl PicardModel {
    pub fn new(h: &HVector) -> Result<PicardModel> {
        let s = h.s();
        if s <= 3 {
            return Err(Error::STooSmall(s));
        }
        let t = h.t().expect("non-empty h-vector");
        let inv = h.invariants();
        let linked = link_hvector(h, s, t)?;
        let linked_lambda = BiliaisonType::from_hvector(&linked);
        let pieces = if linked_lambda.is_empty() {
            Vec::new()
        } else {
            linked_lambda.gap_decomposition()?.pieces
        };
        let r = pieces.len();
        let mut phi = vec![vec![0i64; r]; r];
        for i in 0..r {
            phi[i][i] = q_lambda(&pieces[i], s)?;
            for j in i + 1..r {
                let v = phi_cross(&pieces[i], &pieces[j], s)?;
                phi[i][j] = v;
                phi[j][i] = v;
            }
        }
        let components = pieces
            .into_iter()
            .enumerate()
            .map(|(i, lambda)| Component {
                degree: lambda.degree(),
                q: phi[i][i],
                b: -(0..r).filter(|&j| j != i).map(|j| phi[i][j]).sum::<i64>(),
                lambda,
            })
            .collect::<Vec<_>>();
        let mut model = PicardModel {
            s,
            t,
            d: inv.d,
            g: inv.g,
            linked,
            linked_lambda,
            components,
            phi,
            c_class: DivisorClass {
                c: t,
                a: vec![-1; r],
                x: 0,
            },
        };
        model.c_class = model.class(t, vec![-1; r]);
        Ok(model)
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn degree_of(&self, c: i64, a: &[i64]) -> i64 {
        c * self.s
            + a.iter()
                .zip(&self.components)
                .map(|(ai, comp)| ai * comp.degree)
                .sum::<i64>()
    }

    pub fn class(&self, c: i64, a: Vec<i64>) -> DivisorClass {
        assert_eq!(
            a.len(),
            self.rank(),
            "coefficient vector has the wrong length"
        );
        let x = self.degree_of(c, &a);
        DivisorClass { c, a, x }
    }

    /// `φ(A, B)` straight from the matrix.
    pub fn phi(&self, lhs: &DivisorClass, rhs: &DivisorClass) -> i64 {
        let mut total = 0;
        for (i, ai) in lhs.a.iter().enumerate() {
            for (j, bj) in rhs.a.iter().enumerate() {
                total += ai * bj * self.phi[i][j];
            }
        }
        total
    }

    /// `φ(A, A) = Σ a_i²(q_i - b_i) - Σ_{i<j} (a_i - a_j)² φ_ij`.
    pub fn phi_aa(&self, a: &[i64]) -> i64 {
        let diagonal: i64 = a
            .iter()
            .zip(&self.components)
            .map(|(ai, comp)| ai * ai * (comp.q - comp.b))
            .sum();
        diagonal - self.spread(a)
    }

    /// `φ(A, C) = -Σ a_i (q_i - b_i)`.
    pub fn phi_ac(&self, a: &[i64]) -> i64 {
        -a.iter()
            .zip(&self.components)
            .map(|(ai, comp)| ai * (comp.q - comp.b))
            .sum::<i64>()
    }

    /// `φ(A, A + C) = Σ (a_i² - a_i)(q_i - b_i) - Σ_{i<j} (a_i - a_j)² φ_ij`.
    pub fn phi_aac(&self, a: &[i64]) -> i64 {
        let diagonal: i64 = a
            .iter()
            .zip(&self.components)
            .map(|(ai, comp)| (ai * ai - ai) * (comp.q - comp.b))
            .sum();
        diagonal - self.spread(a)
    }

    fn spread(&self, a: &[i64]) -> i64 {
        let mut total = 0;
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                total += (a[i] - a[j]) * (a[i] - a[j]) * self.phi[i][j];
            }
        }
        total
    }

    /// `φ(C, C)` from degree and genus.
    pub fn phi_cc(&self) -> i64 {
        phi_from_dg(self.d, self.g, self.s)
    }

    /// `C.D_i = (d d_i - φ(C, D_i)) / s`.
    pub fn c_dot_component(&self, i: usize) -> i64 {
        let unit = self.unit(i);
        let num = self.d * self.components[i].degree - self.phi(&self.c_class, &unit);
        debug_assert_eq!(num % self.s, 0);
        num / self.s
    }

    pub fn unit(&self, i: usize) -> DivisorClass {
        let mut a = vec![0; self.rank()];
        a[i] = 1;
        self.class(0, a)
    }
}
