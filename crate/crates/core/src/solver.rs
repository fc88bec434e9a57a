//! Solving triangles from three independent data.
//!
//! Sides come from versed-sine forms of the cosine theorem, which stay exact
//! at κ₁ = 0 and free of cancellation for thin triangles.  Every angle is
//! recovered from a matched (cosine-like, sine-like) pair, never from a sine
//! alone.

#![allow(non_snake_case)]

use crate::error::{CkError, Result};
use crate::group::Geometry;
use crate::labeled::{arc_pair, asin_k, cos_k, half_period, sin_k, versin_k};
use crate::triangle::Triangle;

fn positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(CkError::Range(format!("{name} must be positive and finite, got {v}")))
    }
}

fn below(name: &str, v: f64, limit: f64) -> Result<()> {
    if v < limit {
        Ok(())
    } else {
        Err(CkError::Range(format!("{name} = {v} is not below the half period {limit}")))
    }
}

fn existence(e: CkError) -> CkError {
    match e {
        CkError::Constraint { .. } => CkError::Existence("no real solution for the requested data".into()),
        other => other,
    }
}

/// Length x ≥ 0 with V_κ(x) = v, from S_κ(x/2) = √(v/2).
fn side_from_versine(k: f64, v: f64) -> Result<f64> {
    if !(v > 0.0) || !v.is_finite() {
        return Err(CkError::Existence("closing side is not first-kind".into()));
    }
    asin_k(k, (0.5 * v).sqrt()).map(|h| 2.0 * h).map_err(existence)
}

/// Two sides and the included angle C.
pub fn solve_sas(g: Geometry, a: f64, b: f64, C: f64) -> Result<Triangle> {
    positive("a", a)?;
    positive("b", b)?;
    positive("C", C)?;
    below("a", a, half_period(g.k1))?;
    below("b", b, half_period(g.k1))?;
    below("C", C, half_period(g.k2))?;
    let (k1, k2) = (g.k1, g.k2);
    let (ca, sa, cb, sb) = (cos_k(k1, a), sin_k(k1, a), cos_k(k1, b), sin_k(k1, b));
    let (cc2, sc2) = (cos_k(k2, C), sin_k(k2, C));

    // V₁(c) − V₁(a − b) = κ₂ S₁(a)S₁(b)V₂(C)
    let vc = versin_k(k1, a - b) + k2 * sa * sb * versin_k(k2, C);
    let c = side_from_versine(k1, vc)?;
    below("c", c, half_period(k1))?;

    // projections give the cosine-like parts, the sine theorem the sine-like ones
    let A = arc_pair(k2, -ca * sb + sa * cb * cc2, sa * sc2).map_err(existence)?;
    let B = arc_pair(k2, cb * sa - sb * ca * cc2, sb * sc2).map_err(existence)?;
    Triangle::new(g, a, b, c, A, B, C)
}

/// Three sides.  Angles from the half-angle (Euler) pairs
/// C₂²(X_I/2) = S₁(e_j)S₁(e_k)/(S₁(x_j)S₁(x_k)) and
/// S₂²(X_I/2) = −(S₁(e)/κ₂)S₁(e_i)/(S₁(x_j)S₁(x_k)).
pub fn solve_sss(g: Geometry, a: f64, b: f64, c: f64) -> Result<Triangle> {
    for (n, v) in [("a", a), ("b", b), ("c", c)] {
        positive(n, v)?;
        below(n, v, half_period(g.k1))?;
    }
    let (k1, k2) = (g.k1, g.k2);
    let p = 0.5 * (a + b + c);
    let e = p - a;
    if k2 == 0.0 {
        if e.abs() > crate::triangle::zero_excess_tol(p) {
            return Err(CkError::Existence("sides must satisfy a = b + c".into()));
        }
        return Err(CkError::Underdetermined {
            constraint: "A = B + C; the angles are fixed only up to a common factor \
                         through S(a)/A = S(b)/B = S(c)/C"
                .into(),
        });
    }
    if !(e * k2 > 0.0) {
        return Err(CkError::Existence("lateral excess has the wrong sign for κ₂".into()));
    }
    let x = [-a, b, c];
    let ei = [-p, p - c, p - b];
    let se_over_k2 = sin_k(k1, e) / k2;
    let mut angles = [0.0; 3];
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let den = sin_k(k1, x[j]) * sin_k(k1, x[k]);
        let sq = -se_over_k2 * sin_k(k1, ei[i]) / den;
        let cq = sin_k(k1, ei[j]) * sin_k(k1, ei[k]) / den;
        if !(sq > 0.0 && cq > 0.0) {
            return Err(CkError::Existence("half-angle radicands are not positive".into()));
        }
        angles[i] = 2.0 * arc_pair(k2, cq.sqrt(), sq.sqrt()).map_err(existence)?;
    }
    Triangle::new(g, a, b, c, angles[0], angles[1], angles[2])
}

/// Three angles: the dual of [`solve_sss`].
pub fn solve_aaa(g: Geometry, A: f64, B: f64, C: f64) -> Result<Triangle> {
    if g.k1 == 0.0 {
        for (n, v) in [("A", A), ("B", B), ("C", C)] {
            positive(n, v)?;
        }
        let P = 0.5 * (A + B + C);
        if (-A + B + C).abs() > 2.0 * crate::triangle::zero_excess_tol(P) {
            return Err(CkError::Existence("angles must satisfy A = B + C".into()));
        }
        return Err(CkError::Underdetermined {
            constraint: "A = B + C; the sides are fixed only up to a common factor \
                         through S(A)/a = S(B)/b = S(C)/c"
                .into(),
        });
    }
    solve_sss(g.dual(), A, B, C).map(|t| t.dualize())
}

/// Data for a second-kind triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SecondKindData {
    Sas { a: f64, b: f64, C: f64 },
    Sss { a: f64, b: f64, c: f64 },
    Aaa { A: f64, B: f64, C: f64 },
}

/// Pure second-kind triangle: the first-kind solver with κ₁ replaced by κ₁κ₂.
/// The returned triangle carries the effective geometry (κ₁κ₂, κ₂).
pub fn solve_second_kind(g: Geometry, data: SecondKindData) -> Result<Triangle> {
    let eff = Geometry::new(g.k1 * g.k2, g.k2);
    match data {
        SecondKindData::Sas { a, b, C } => solve_sas(eff, a, b, C),
        SecondKindData::Sss { a, b, c } => solve_sss(eff, a, b, c),
        SecondKindData::Aaa { A, B, C } => solve_aaa(eff, A, B, C),
    }
}
