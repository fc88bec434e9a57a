//! Triangle loops: the six measured quantities, the signed compact notation,
//! excesses, area and coarea, duality and the existence conditions.

#![allow(non_snake_case)]

use serde::{Deserialize, Serialize};

use crate::error::{CkError, Result};
use crate::group::Geometry;
use crate::labeled::{arc_pair, cos_k, half_period, sin_k};

/// Below this |κ₁| the area is taken from its half-angle (cos, sin) pair
/// instead of Δ/κ₁, whose rounding error grows like 1/|κ₁|.
pub const AREA_DIRECT_MIN: f64 = 1e-3;

/// A first-kind triangle loop: sides a = CB, b = CA, c = AB, the external
/// angle A and the inner angles B, C.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    pub geom: Geometry,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub A: f64,
    pub B: f64,
    pub C: f64,
}

/// Signed sides x = (−a, b, c) and angles X = (−A, B, C).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SignedView {
    pub x: [f64; 3],
    pub X: [f64; 3],
}

/// Lateral and angular excesses together with the half sums.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Excesses {
    pub delta: f64,
    pub Delta: f64,
    pub e: f64,
    pub E: f64,
    pub e_i: [f64; 3],
    pub E_I: [f64; 3],
    pub p: f64,
    pub P: f64,
}

/// Flat serialisation record `{k1, k2, a, b, c, A, B, C}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TriangleRecord {
    pub k1: f64,
    pub k2: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub A: f64,
    pub B: f64,
    pub C: f64,
}

impl Triangle {
    /// Validated constructor: ranges and the sign rules on the excesses.
    pub fn new(geom: Geometry, a: f64, b: f64, c: f64, A: f64, B: f64, C: f64) -> Result<Self> {
        if !check_existence(geom, a, b, c, A, B, C)? {
            return Err(CkError::Existence(format!(
                "excess signs violate the rules for (κ₁, κ₂) = ({}, {})",
                geom.k1, geom.k2
            )));
        }
        Ok(Self { geom, a, b, c, A, B, C })
    }

    pub fn sides(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn angles(&self) -> [f64; 3] {
        [self.A, self.B, self.C]
    }

    pub fn signed(&self) -> SignedView {
        SignedView {
            x: [-self.a, self.b, self.c],
            X: [-self.A, self.B, self.C],
        }
    }

    pub fn excesses(&self) -> Excesses {
        let delta = -self.a + self.b + self.c;
        let Delta = -self.A + self.B + self.C;
        let (e, E) = (0.5 * delta, 0.5 * Delta);
        let s = self.signed();
        Excesses {
            delta,
            Delta,
            e,
            E,
            e_i: s.x.map(|x| x - e),
            E_I: s.X.map(|x| x - E),
            p: 0.5 * (self.a + self.b + self.c),
            P: 0.5 * (self.A + self.B + self.C),
        }
    }

    /// Area 𝒮 = Δ/κ₁, continued to κ₁ = 0.
    ///
    /// For small |κ₁| the half area is recovered from
    /// C(𝒮/2) = (1 + ΣC₁(x))/(4ΠC₁(x/2)) and
    /// S(𝒮/2) = S₂(A)S₁(b)S₁(c)/(4ΠC₁(x/2)), both with label κ₁²κ₂; at
    /// κ₁ = 0 this is exactly 𝒮 = S₂(A)·b·c/2.
    pub fn area(&self) -> f64 {
        let g = self.geom;
        if g.k1.abs() >= AREA_DIRECT_MIN {
            return self.excesses().Delta / g.k1;
        }
        let k1 = g.k1;
        let den = 4.0 * cos_k(k1, 0.5 * self.a) * cos_k(k1, 0.5 * self.b) * cos_k(k1, 0.5 * self.c);
        let cos_half = (1.0 + cos_k(k1, self.a) + cos_k(k1, self.b) + cos_k(k1, self.c)) / den;
        let sin_half = sin_k(g.k2, self.A) * sin_k(k1, self.b) * sin_k(k1, self.c) / den;
        2.0 * arc_pair(g.area_label(), cos_half, sin_half).unwrap_or(f64::NAN)
    }

    /// Coarea 𝒮̃ = δ/κ₂: the area of the dual triangle.
    pub fn coarea(&self) -> f64 {
        self.dualize().area()
    }

    /// Ordinary duality: labels swapped, sides and angles exchanged.
    pub fn dualize(&self) -> Triangle {
        Triangle {
            geom: self.geom.dual(),
            a: self.A,
            b: self.B,
            c: self.C,
            A: self.a,
            B: self.b,
            C: self.c,
        }
    }

    /// Inner angle at A, π/√κ₂ − A; only meaningful for κ₂ > 0.
    pub fn inner_angle_a(&self) -> Option<f64> {
        (self.geom.k2 > 0.0).then(|| half_period(self.geom.k2) - self.A)
    }

    pub fn existence_holds(&self) -> bool {
        check_existence(self.geom, self.a, self.b, self.c, self.A, self.B, self.C).unwrap_or(false)
    }

    pub fn to_record(&self) -> TriangleRecord {
        TriangleRecord {
            k1: self.geom.k1,
            k2: self.geom.k2,
            a: self.a,
            b: self.b,
            c: self.c,
            A: self.A,
            B: self.B,
            C: self.C,
        }
    }

    /// Rebuild from a record, re-checking existence.
    pub fn from_record(r: &TriangleRecord) -> Result<Self> {
        Triangle::new(Geometry::new(r.k1, r.k2), r.a, r.b, r.c, r.A, r.B, r.C)
    }
}

/// Tolerance for an excess that has to vanish under a zero label.
pub fn zero_excess_tol(half_sum: f64) -> f64 {
    1e-10 * half_sum.max(1.0)
}

/// Sign rules on the excesses: e > 0 iff κ₂ > 0, e < 0 iff κ₂ < 0, and the
/// same for E with κ₁; a zero label forces its excess to vanish.
///
/// Sides must stay below the half period π/√κ₁ when κ₁ > 0, and angles below
/// π/√κ₂ when κ₂ > 0; otherwise `RangeError`.
pub fn check_existence(g: Geometry, a: f64, b: f64, c: f64, A: f64, B: f64, C: f64) -> Result<bool> {
    let sides = [a, b, c];
    let angles = [A, B, C];
    if sides.iter().chain(&angles).any(|v| !(v.is_finite() && *v > 0.0)) {
        return Err(CkError::Range("sides and angles must be positive and finite".into()));
    }
    let (ls, la) = (half_period(g.k1), half_period(g.k2));
    if sides.iter().any(|&s| s >= ls) {
        return Err(CkError::Range(format!("side beyond the half period {ls}")));
    }
    if angles.iter().any(|&s| s >= la) {
        return Err(CkError::Range(format!("angle beyond the half period {la}")));
    }
    let e = 0.5 * (-a + b + c);
    let big_e = 0.5 * (-A + B + C);
    let ok = |label: f64, excess: f64, half_sum: f64| {
        if label > 0.0 {
            excess > 0.0
        } else if label < 0.0 {
            excess < 0.0
        } else {
            excess.abs() <= zero_excess_tol(half_sum)
        }
    };
    Ok(ok(g.k2, e, 0.5 * (a + b + c)) && ok(g.k1, big_e, 0.5 * (A + B + C)))
}
