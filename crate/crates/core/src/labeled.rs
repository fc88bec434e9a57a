//! κ-labelled trigonometric functions.
//!
//! One family covers the circular (κ > 0), parabolic (κ = 0) and hyperbolic
//! (κ < 0) cases.  Branches are chosen on the exact sign of the label; the
//! zero label is a code path of its own and never a limit of a division.

use std::f64::consts::PI;

use crate::error::{CkError, Result};

/// Default absolute threshold on the cosine below which `tan_k` reports a pole.
pub const POLE_TOL: f64 = 1e-12;

/// Relative tolerance used by [`arc_k`] when checking C² + κS² = 1.
pub const ARC_TOL: f64 = 1e-9;

/// Generalised cosine C_κ(x).
#[inline]
pub fn cos_k(k: f64, x: f64) -> f64 {
    if k > 0.0 {
        (k.sqrt() * x).cos()
    } else if k < 0.0 {
        ((-k).sqrt() * x).cosh()
    } else {
        1.0
    }
}

/// Generalised sine S_κ(x).
#[inline]
pub fn sin_k(k: f64, x: f64) -> f64 {
    if k > 0.0 {
        let r = k.sqrt();
        (r * x).sin() / r
    } else if k < 0.0 {
        let r = (-k).sqrt();
        (r * x).sinh() / r
    } else {
        x
    }
}

/// Versed sine V_κ(x) = (1 − C_κ(x))/κ, with V₀(x) = x²/2.
///
/// Evaluated as 2·S_κ(x/2)², which is the same function without the
/// cancellation in 1 − C for small √|κ|·x.
#[inline]
pub fn versin_k(k: f64, x: f64) -> f64 {
    if k == 0.0 {
        0.5 * x * x
    } else {
        let s = sin_k(k, 0.5 * x);
        2.0 * s * s
    }
}

/// Generalised tangent with the default pole tolerance.
pub fn tan_k(k: f64, x: f64) -> Result<f64> {
    tan_k_tol(k, x, POLE_TOL)
}

/// Generalised tangent T_κ = S_κ/C_κ; `PoleError` when |C_κ(x)| < `tol`.
pub fn tan_k_tol(k: f64, x: f64, tol: f64) -> Result<f64> {
    let c = cos_k(k, x);
    if c.abs() < tol {
        return Err(CkError::Pole { cos: c });
    }
    Ok(sin_k(k, x) / c)
}

/// Inverse of the pair (C_κ, S_κ).
///
/// Returns the x with C_κ(x) = c and S_κ(x) = s, taken in (−π/√κ, π/√κ] for
/// κ > 0 and on the whole line otherwise.
pub fn arc_k(k: f64, c: f64, s: f64) -> Result<f64> {
    let scale = 1f64.max(c * c).max((k * s * s).abs());
    let defect = c * c + k * s * s - 1.0;
    if !(defect.abs() <= ARC_TOL * scale) {
        return Err(CkError::Constraint { defect });
    }
    if k < 0.0 && c <= 0.0 {
        // cosh is positive; the pair sits on the other branch of the conic
        return Err(CkError::Constraint { defect: c - 1.0 });
    }
    arc_pair(k, c, s)
}

/// Parameter of the ray through (c, s) on the conic C² + κS² = 1.
///
/// The pair only needs to be known up to a positive factor.  For κ < 0 the
/// ray must lie inside the branch, `c > √−κ·|s|`.
pub fn arc_pair(k: f64, c: f64, s: f64) -> Result<f64> {
    if k > 0.0 {
        let r = k.sqrt();
        Ok((r * s).atan2(c) / r)
    } else if k < 0.0 {
        let r = (-k).sqrt();
        let t = r * s / c;
        if !(c > 0.0 && t.abs() < 1.0) {
            return Err(CkError::Constraint { defect: t });
        }
        Ok(t.atanh() / r)
    } else {
        if !(c > 0.0) {
            return Err(CkError::Constraint { defect: c - 1.0 });
        }
        Ok(s / c)
    }
}

/// Principal inverse of S_κ: the x with S_κ(x) = s and C_κ(x) ≥ 0.
pub fn asin_k(k: f64, s: f64) -> Result<f64> {
    if k > 0.0 {
        let r = k.sqrt();
        let t = r * s;
        if t.abs() > 1.0 {
            return Err(CkError::Constraint { defect: t.abs() - 1.0 });
        }
        Ok(t.asin() / r)
    } else if k < 0.0 {
        let r = (-k).sqrt();
        Ok((r * s).asinh() / r)
    } else {
        Ok(s)
    }
}

/// Quarter period π/(2√κ); infinite for κ = 0.
pub fn quadrant(k: f64) -> Result<f64> {
    if k > 0.0 {
        Ok(PI / (2.0 * k.sqrt()))
    } else if k == 0.0 {
        Ok(f64::INFINITY)
    } else {
        Err(CkError::FormalOnly)
    }
}

/// Half period π/√κ for κ > 0, infinite otherwise.
pub fn half_period(k: f64) -> f64 {
    if k > 0.0 {
        PI / k.sqrt()
    } else {
        f64::INFINITY
    }
}
