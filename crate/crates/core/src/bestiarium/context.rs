//! Everything an identity may refer to, precomputed once per triangle.

#![allow(non_snake_case)]

use crate::error::Result;
use crate::labeled::{cos_k, sin_k, tan_k_tol, versin_k};
use crate::triangle::Triangle;

/// Cosine threshold below which a tangent-based identity is skipped.
pub const POLE_SKIP: f64 = 1e-8;

/// Signed sides and angles, excesses, area and coarea of one triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ctx {
    pub k1: f64,
    pub k2: f64,
    pub x: [f64; 3],
    pub X: [f64; 3],
    pub e: f64,
    pub E: f64,
    pub ei: [f64; 3],
    pub EI: [f64; 3],
    pub area: f64,
    pub coarea: f64,
}

impl Ctx {
    pub fn new(t: &Triangle) -> Self {
        let s = t.signed();
        let ex = t.excesses();
        Ctx {
            k1: t.geom.k1,
            k2: t.geom.k2,
            x: s.x,
            X: s.X,
            e: ex.e,
            E: ex.E,
            ei: ex.e_i,
            EI: ex.E_I,
            area: t.area(),
            coarea: t.coarea(),
        }
    }

    /// The same data read in the dual geometry.
    pub fn dual(&self) -> Ctx {
        Ctx {
            k1: self.k2,
            k2: self.k1,
            x: self.X,
            X: self.x,
            e: self.E,
            E: self.e,
            ei: self.EI,
            EI: self.ei,
            area: self.coarea,
            coarea: self.area,
        }
    }

    pub fn c1(&self, v: f64) -> f64 {
        cos_k(self.k1, v)
    }
    pub fn s1(&self, v: f64) -> f64 {
        sin_k(self.k1, v)
    }
    pub fn v1(&self, v: f64) -> f64 {
        versin_k(self.k1, v)
    }
    pub fn t1(&self, v: f64) -> Result<f64> {
        tan_k_tol(self.k1, v, POLE_SKIP)
    }
    pub fn c2(&self, v: f64) -> f64 {
        cos_k(self.k2, v)
    }
    pub fn s2(&self, v: f64) -> f64 {
        sin_k(self.k2, v)
    }
    pub fn v2(&self, v: f64) -> f64 {
        versin_k(self.k2, v)
    }
    pub fn t2(&self, v: f64) -> Result<f64> {
        tan_k_tol(self.k2, v, POLE_SKIP)
    }

    /// Label of the area, κ₁²κ₂.
    pub fn la(&self) -> f64 {
        self.k1 * self.k1 * self.k2
    }
    /// Label of the coarea, κ₁κ₂².
    pub fn lc(&self) -> f64 {
        self.k1 * self.k2 * self.k2
    }

    /// C and S of a fraction of the area, with the area label.
    pub fn ca(&self, frac: f64) -> f64 {
        cos_k(self.la(), self.area * frac)
    }
    pub fn sa(&self, frac: f64) -> f64 {
        sin_k(self.la(), self.area * frac)
    }
    pub fn ta(&self, frac: f64) -> Result<f64> {
        tan_k_tol(self.la(), self.area * frac, POLE_SKIP)
    }
    /// C and S of a fraction of the coarea, with the coarea label.
    pub fn cc(&self, frac: f64) -> f64 {
        cos_k(self.lc(), self.coarea * frac)
    }
    pub fn sc(&self, frac: f64) -> f64 {
        sin_k(self.lc(), self.coarea * frac)
    }
    pub fn tc(&self, frac: f64) -> Result<f64> {
        tan_k_tol(self.lc(), self.coarea * frac, POLE_SKIP)
    }

    /// 1 + C₁(x₁) + C₁(x₂) + C₁(x₃).
    pub fn cos_sum(&self) -> f64 {
        1.0 + self.x.iter().map(|&v| self.c1(v)).sum::<f64>()
    }
    /// C₁(x₁/2)C₁(x₂/2)C₁(x₃/2).
    pub fn half_cos_prod(&self) -> f64 {
        self.x.iter().map(|&v| self.c1(0.5 * v)).product()
    }
    /// −S₁(e)/κ₂ · S₁(e₁)S₁(e₂)S₁(e₃), written with the coarea so that it
    /// survives κ₂ = 0.  Non-negative for every valid triangle.
    pub fn side_radicand(&self) -> f64 {
        -self.sc(0.5) * self.ei.iter().map(|&v| self.s1(v)).product::<f64>()
    }
    /// Dual of [`Ctx::side_radicand`].
    pub fn angle_radicand(&self) -> f64 {
        self.dual().side_radicand()
    }
}

/// Square root of a radicand that is non-negative up to rounding.
pub fn radical(v: f64) -> f64 {
    v.max(0.0).sqrt()
}
