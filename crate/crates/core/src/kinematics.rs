//! Physical units for the six kinematical geometries (κ₂ ≤ 0).
//!
//! A universe time radius τ and a relativistic constant c fix the labels
//! κ₁ = ±1/τ² and κ₂ = −1/c²; either may be infinite, which contracts the
//! corresponding label to exactly zero.  Sides are proper times, angles are
//! relative rapidities measured in velocity units.

#![allow(non_snake_case)]

use serde::Serialize;

use crate::error::{CkError, Result};
use crate::group::Geometry;
use crate::triangle::Triangle;

/// A finite positive scale or its contraction to infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scale {
    Finite(f64),
    Infinite,
}

impl Scale {
    /// 1/s², or 0 for an infinite scale.
    fn inverse_square(self) -> f64 {
        match self {
            Scale::Finite(s) => 1.0 / (s * s),
            Scale::Infinite => 0.0,
        }
    }

    pub fn value(self) -> Option<f64> {
        match self {
            Scale::Finite(s) => Some(s),
            Scale::Infinite => None,
        }
    }
}

/// Time radius τ, relativistic constant c and the sign of the time curvature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacetimeUnits {
    pub tau: Scale,
    pub c: Scale,
    pub curvature_sign: i8,
}

impl SpacetimeUnits {
    /// Validated constructor: finite scales must be positive, the sign one of
    /// −1, 0, +1.
    pub fn new(tau: Scale, c: Scale, curvature_sign: i8) -> Result<Self> {
        for (name, s) in [("tau", tau), ("c", c)] {
            if let Scale::Finite(v) = s {
                if !(v.is_finite() && v > 0.0) {
                    return Err(CkError::Range(format!("{name} must be positive, got {v}")));
                }
            }
        }
        if !(-1..=1).contains(&curvature_sign) {
            return Err(CkError::Range(format!("curvature sign must be −1, 0 or +1, got {curvature_sign}")));
        }
        Ok(SpacetimeUnits { tau, c, curvature_sign })
    }

    /// Units in which the labels of `g` have unit magnitude or vanish.
    pub fn natural(g: Geometry) -> Result<Self> {
        if g.k2 > 0.0 {
            return Err(CkError::Kind("no spacetime units for a positive second label".into()));
        }
        let tau = if g.k1 == 0.0 { Scale::Infinite } else { Scale::Finite(1.0 / g.k1.abs().sqrt()) };
        let c = if g.k2 == 0.0 { Scale::Infinite } else { Scale::Finite(1.0 / (-g.k2).sqrt()) };
        SpacetimeUnits::new(tau, c, g.k1.signum() as i8)
    }
}

/// κ₁ = sign/τ², κ₂ = −1/c² (an exact +0 for an infinite c).
pub fn geometry_from_units(u: &SpacetimeUnits) -> Geometry {
    Geometry::new(f64::from(u.curvature_sign) * u.tau.inverse_square(), 0.0 - u.c.inverse_square())
}

/// Name of the spacetime with these labels; `None` when κ₂ > 0.
pub fn spacetime_name(g: Geometry) -> Option<&'static str> {
    use std::cmp::Ordering::*;
    let s1 = g.k1.partial_cmp(&0.0)?;
    let s2 = g.k2.partial_cmp(&0.0)?;
    Some(match (s1, s2) {
        (Greater, Less) => "anti-de-sitter",
        (Equal, Less) => "minkowskian",
        (Less, Less) => "de-sitter",
        (Greater, Equal) => "oscillating-nh",
        (Equal, Equal) => "galilean",
        (Less, Equal) => "expanding-nh",
        (_, Greater) => return None,
    })
}

/// Proper time of the direct worldline minus that of the travelling one,
/// a − b − c; equals −κ₂ times the coarea.
pub fn twin_defect(t: &Triangle) -> Result<f64> {
    if t.geom.k2 > 0.0 {
        return Err(CkError::Kind("twin defect needs a kinematical geometry (κ₂ ≤ 0)".into()));
    }
    Ok(t.a - t.b - t.c)
}

/// The same triangle measured in natural units: sides divided by τ and
/// angles by c (an infinite scale leaves the quantity unchanged).
pub fn to_natural(u: &SpacetimeUnits, t: &Triangle) -> Triangle {
    let (ts, cs) = (u.tau.value().unwrap_or(1.0), u.c.value().unwrap_or(1.0));
    let g = geometry_from_units(u);
    let n = Geometry::new(g.k1 * ts * ts, g.k2 * cs * cs);
    Triangle { geom: n, a: t.a / ts, b: t.b / ts, c: t.c / ts, A: t.A / cs, B: t.B / cs, C: t.C / cs }
}

/// Inverse of [`to_natural`].
pub fn from_natural(u: &SpacetimeUnits, t: &Triangle) -> Triangle {
    let (ts, cs) = (u.tau.value().unwrap_or(1.0), u.c.value().unwrap_or(1.0));
    Triangle { geom: geometry_from_units(u), a: t.a * ts, b: t.b * ts, c: t.c * ts, A: t.A * cs, B: t.B * cs, C: t.C * cs }
}

/// One equality of a Table 4 row.
#[derive(Debug, Clone, Serialize)]
pub struct Cell {
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
}

/// One row: the formula as text and its equalities.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub name: &'static str,
    pub formula: String,
    pub cells: Vec<Cell>,
    pub max_residual: f64,
}

/// All three area rows for one triangle.
#[derive(Debug, Clone, Serialize)]
pub struct Table4 {
    pub spacetime: &'static str,
    pub rows: Vec<Row>,
    pub max_residual: f64,
}

fn cell(lhs: f64, rhs: f64) -> Cell {
    let d = (lhs - rhs).abs();
    let residual = if d == 0.0 { 0.0 } else { d / 1f64.max(lhs.abs()).max(rhs.abs()) };
    Cell { lhs, rhs, residual }
}

fn row(name: &'static str, formula: String, cells: Vec<Cell>) -> Row {
    let max_residual = cells.iter().map(|c| c.residual).fold(0.0, f64::max);
    Row { name, formula, cells, max_residual }
}

/// Circular or hyperbolic functions of the time variable.
struct TimeTrig {
    circular: bool,
}

impl TimeTrig {
    fn s(&self, x: f64) -> f64 {
        if self.circular {
            x.sin()
        } else {
            x.sinh()
        }
    }
    fn c(&self, x: f64) -> f64 {
        if self.circular {
            x.cos()
        } else {
            x.cosh()
        }
    }
    fn t(&self, x: f64) -> f64 {
        if self.circular {
            x.tan()
        } else {
            x.tanh()
        }
    }
    fn names(&self) -> (&'static str, &'static str, &'static str) {
        if self.circular {
            ("sin", "cos", "tan")
        } else {
            ("sinh", "cosh", "tanh")
        }
    }
}

/// Evaluate the generalised Cagnoli, Heron–L'Huillier and area/coarea ratio
/// rows in explicit (τ, c) form for a triangle measured in the units `u`.
pub fn eval_table4(u: &SpacetimeUnits, t: &Triangle) -> Result<Table4> {
    let g = geometry_from_units(u);
    if t.geom != g {
        return Err(CkError::Kind(format!(
            "triangle labels ({}, {}) do not match the units ({}, {})",
            t.geom.k1, t.geom.k2, g.k1, g.k2
        )));
    }
    let name = spacetime_name(g).ok_or_else(|| CkError::Kind("not a spacetime".into()))?;
    let (a, b, c, xa, xb, xc) = (t.a, t.b, t.c, t.A, t.B, t.C);
    let (p, xp) = (0.5 * (a + b + c), 0.5 * (xa + xb + xc));
    let (area, coarea) = (t.area(), t.coarea());
    let tt = TimeTrig { circular: g.k1 > 0.0 };
    let (sn, cn, tn) = tt.names();

    let rows = match (u.tau, u.c) {
        (Scale::Finite(tau), Scale::Finite(cc)) => {
            let den = 4.0 * tt.c(a / (2.0 * tau)) * tt.c(b / (2.0 * tau)) * tt.c(c / (2.0 * tau));
            let cag = row(
                "cagnoli",
                format!("sinh(S/2τ²c) = {sn}(τa/τ){sn}(τb/τ)sinh(χC/c) / 4Π{cn}(τ/2τ)"),
                vec![cell(
                    (area / (2.0 * tau * tau * cc)).sinh(),
                    tt.s(a / tau) * tt.s(b / tau) * (xc / cc).sinh() / den,
                )],
            );
            let q = |x: f64| tt.t(x / (2.0 * tau));
            let heron = row(
                "heron_lhuillier",
                format!("tanh²(S/4τ²c) = −{tn}(τp/2τ){tn}((τp−τa)/2τ){tn}((τp−τb)/2τ){tn}((τp−τc)/2τ)"),
                vec![cell((area / (4.0 * tau * tau * cc)).tanh().powi(2), -q(p) * q(p - a) * q(p - b) * q(p - c))],
            );
            let lhs = (area / (4.0 * tau * tau * cc)).tanh() / tt.t(coarea / (4.0 * tau * cc * cc));
            let r = |x: f64, y: f64| q(x) / (y / (2.0 * cc)).tanh();
            let ratio = row(
                "area_coarea_ratio",
                format!("tanh(S/4τ²c)/{tn}(S̃/4τc²) = {tn}(τp/2τ)/tanh(χP/2c) = …"),
                vec![cell(lhs, r(p, xp)), cell(lhs, r(p - b, xp - xb)), cell(lhs, r(p - c, xp - xc))],
            );
            vec![cag, heron, ratio]
        }
        (Scale::Finite(tau), Scale::Infinite) => {
            let den = 2.0 * tt.c(a / (2.0 * tau)) * tt.c(b / (2.0 * tau)) * tt.c(c / (2.0 * tau));
            let cag = row(
                "cagnoli",
                format!("S = τ²{sn}(τa/τ){sn}(τb/τ)χC / 2Π{cn}(τ/2τ)"),
                vec![cell(area, tau * tau * tt.s(a / tau) * tt.s(b / tau) * xc / den)],
            );
            let q = |x: f64| tt.t(x / (2.0 * tau));
            let heron = row(
                "heron_lhuillier",
                format!("S² = 4S̃τ³{tn}(τp/2τ){tn}((τp−τb)/2τ){tn}((τp−τc)/2τ)"),
                vec![cell(area * area, 4.0 * coarea * tau.powi(3) * q(p) * q(p - b) * q(p - c))],
            );
            let lhs = area / coarea;
            let r = |x: f64, y: f64| tau * q(x) / (0.5 * y);
            let ratio = row(
                "area_coarea_ratio",
                format!("S/S̃ = τ{tn}(τp/2τ)/(χP/2) = …"),
                vec![cell(lhs, r(p, xp)), cell(lhs, r(p - b, xp - xb)), cell(lhs, r(p - c, xp - xc))],
            );
            vec![cag, heron, ratio]
        }
        (Scale::Infinite, Scale::Finite(cc)) => {
            let cag = row(
                "cagnoli",
                "S = ½τaτb c sinh(χC/c)".to_string(),
                vec![cell(area, 0.5 * a * b * cc * (xc / cc).sinh())],
            );
            let heron = row(
                "heron_lhuillier",
                "S² = −c²τp(τp−τa)(τp−τb)(τp−τc)".to_string(),
                vec![cell(area * area, -cc * cc * p * (p - a) * (p - b) * (p - c))],
            );
            let lhs = area / coarea;
            let r = |x: f64, y: f64| 0.5 * x / (cc * (y / (2.0 * cc)).tanh());
            let ratio = row(
                "area_coarea_ratio",
                "S/S̃ = (τp/2)/(c tanh(χP/2c)) = …".to_string(),
                vec![cell(lhs, r(p, xp)), cell(lhs, r(p - b, xp - xb)), cell(lhs, r(p - c, xp - xc))],
            );
            vec![cag, heron, ratio]
        }
        (Scale::Infinite, Scale::Infinite) => {
            let cag = row("cagnoli", "S = ½τaτbχC".to_string(), vec![cell(area, 0.5 * a * b * xc)]);
            let heron = row(
                "heron_lhuillier",
                "S² = ½S̃τp(τp−τb)(τp−τc)".to_string(),
                vec![cell(area * area, 0.5 * coarea * p * (p - b) * (p - c))],
            );
            let lhs = area / coarea;
            let ratio = row(
                "area_coarea_ratio",
                "S/S̃ = τp/χP = (τp−τb)/(χP−χB) = (τp−τc)/(χP−χC)".to_string(),
                vec![cell(lhs, p / xp), cell(lhs, (p - b) / (xp - xb)), cell(lhs, (p - c) / (xp - xc))],
            );
            vec![cag, heron, ratio]
        }
    };
    let max_residual = rows.iter().map(|r| r.max_residual).fold(0.0, f64::max);
    Ok(Table4 { spacetime: name, rows, max_residual })
}
