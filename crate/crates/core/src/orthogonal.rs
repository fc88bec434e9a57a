//! Orthogonal triangles: two first-kind sides a, b, a second-kind side h
//! orthogonal to a, the inner angle C between a and b and the external angle
//! A between b and h.
//!
//! Any two of the five quantities fix the rest.  Every case is first reduced
//! to the legs (a, h); from there
//!
//! * V₁(b) = V₁(a) + κ₂V₁₂(h) − κ₁κ₂V₁(a)V₁₂(h)
//! * C from the pair (S₁(a)C₁₂(h), S₁₂(h))
//! * A from the pair (S₁(a), S₁₂(h)C₁(a))
//!
//! where the index 12 marks the label κ₁κ₂.  All quantities are taken on the
//! principal branch: below their quadrant whenever their label is positive.

#![allow(non_snake_case)]

use serde::Serialize;

use crate::error::{CkError, Result};
use crate::group::{apply, exp_p1, exp_p2, polar, Geometry, Point};
use crate::labeled::{arc_pair, asin_k, cos_k, half_period, sin_k, tan_k, versin_k};
use crate::sampling::{upper, Sampler, MAX_ATTEMPTS};
use crate::triangle::AREA_DIRECT_MIN;

/// A solved orthogonal triangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrthoTriangle {
    #[serde(skip)]
    pub geom: Geometry,
    pub a: f64,
    pub b: f64,
    pub h: f64,
    pub C: f64,
    pub A: f64,
}

/// One known quantity of an orthogonal triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrthoKnown {
    SideA(f64),
    SideB(f64),
    SideH(f64),
    AngleA(f64),
    AngleC(f64),
}

impl OrthoKnown {
    /// Parse `name=value` with name one of a, b, h, A, C.
    pub fn parse(name: &str, value: f64) -> Option<OrthoKnown> {
        Some(match name {
            "a" => OrthoKnown::SideA(value),
            "b" => OrthoKnown::SideB(value),
            "h" => OrthoKnown::SideH(value),
            "A" => OrthoKnown::AngleA(value),
            "C" => OrthoKnown::AngleC(value),
            _ => return None,
        })
    }

    fn rank(&self) -> u8 {
        match self {
            OrthoKnown::SideA(_) => 0,
            OrthoKnown::SideB(_) => 1,
            OrthoKnown::SideH(_) => 2,
            OrthoKnown::AngleA(_) => 3,
            OrthoKnown::AngleC(_) => 4,
        }
    }

    fn value(&self) -> f64 {
        match *self {
            OrthoKnown::SideA(v)
            | OrthoKnown::SideB(v)
            | OrthoKnown::SideH(v)
            | OrthoKnown::AngleA(v)
            | OrthoKnown::AngleC(v) => v,
        }
    }

    fn name(&self) -> &'static str {
        ["a", "b", "h", "A", "C"][self.rank() as usize]
    }

    fn read(&self, t: &OrthoTriangle) -> f64 {
        [t.a, t.b, t.h, t.A, t.C][self.rank() as usize]
    }
}

/// Quarter period for a positive label, infinite otherwise.
fn branch_limit(k: f64) -> f64 {
    0.5 * half_period(k)
}

fn existence(e: CkError) -> CkError {
    match e {
        CkError::Constraint { .. } => CkError::Existence("no real orthogonal triangle for these data".into()),
        other => other,
    }
}

/// x ≥ 0 with V_κ(x) = v.
fn from_versine(k: f64, v: f64) -> Result<f64> {
    if !(v > 0.0) || !v.is_finite() {
        return Err(CkError::Existence("derived quantity is not positive".into()));
    }
    asin_k(k, (0.5 * v).sqrt()).map(|x| 2.0 * x).map_err(existence)
}

fn check_known(g: Geometry, k: &OrthoKnown) -> Result<()> {
    let v = k.value();
    if !(v.is_finite() && v > 0.0) {
        return Err(CkError::Range(format!("{} must be positive and finite, got {v}", k.name())));
    }
    let label = label_of(g, k.rank());
    if v >= branch_limit(label) {
        return Err(CkError::Range(format!("{} = {v} is beyond its quadrant", k.name())));
    }
    Ok(())
}

fn label_of(g: Geometry, rank: u8) -> f64 {
    match rank {
        0 | 1 => g.k1,
        2 => g.k1 * g.k2,
        _ => g.k2,
    }
}

fn same(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-12 * x.abs().max(y.abs()).max(1.0)
}

/// The full triangle from its legs.
fn from_legs(g: Geometry, a: f64, h: f64) -> Result<OrthoTriangle> {
    let (k1, k2) = (g.k1, g.k2);
    let k12 = k1 * k2;
    let (va, vh) = (versin_k(k1, a), versin_k(k12, h));
    let vb = va + k2 * vh - k12 * va * vh;
    let b = from_versine(k1, vb)?;
    let (sa, ca, sh, ch) = (sin_k(k1, a), cos_k(k1, a), sin_k(k12, h), cos_k(k12, h));
    let C = arc_pair(k2, sa * ch, sh).map_err(existence)?;
    let A = arc_pair(k2, sa, sh * ca).map_err(existence)?;
    Ok(OrthoTriangle { geom: g, a, b, h, C, A })
}

/// Solve an orthogonal triangle from two of a, b, h, A, C.
pub fn solve_ortho(g: Geometry, first: OrthoKnown, second: OrthoKnown) -> Result<OrthoTriangle> {
    use OrthoKnown::*;
    if first.rank() == second.rank() {
        return Err(CkError::Underdetermined { constraint: format!("{} given twice", first.name()) });
    }
    check_known(g, &first)?;
    check_known(g, &second)?;
    let (p, q) = if first.rank() < second.rank() { (first, second) } else { (second, first) };
    let (k1, k2) = (g.k1, g.k2);
    let k12 = k1 * k2;
    let t = match (p, q) {
        (SideA(a), SideH(h)) => from_legs(g, a, h)?,
        (SideA(a), SideB(b)) => {
            if k2 == 0.0 {
                return Err(if same(a, b) {
                    CkError::Underdetermined { constraint: "b = a; h and the angles are free up to h = b·C".into() }
                } else {
                    CkError::Inconsistent("a zero second label forces b = a".into())
                });
            }
            let vh = (versin_k(k1, b) - versin_k(k1, a)) / (k2 * cos_k(k1, a));
            from_legs(g, a, from_versine(k12, vh)?)?
        }
        (SideA(a), AngleC(C)) => {
            let h = arc_pair(k12, cos_k(k2, C), sin_k(k1, a) * sin_k(k2, C)).map_err(existence)?;
            from_legs(g, a, h)?
        }
        (SideA(a), AngleA(A)) => {
            let s = sin_k(k1, a) * sin_k(k2, A) / (cos_k(k1, a) * cos_k(k2, A));
            from_legs(g, a, asin_k(k12, s).map_err(existence)?)?
        }
        (SideB(b), SideH(h)) => legs_from_b_h(g, b, h)?,
        (SideB(b), AngleC(C)) => {
            let h = asin_k(k12, sin_k(k1, b) * sin_k(k2, C)).map_err(existence)?;
            legs_from_b_h(g, b, h)?
        }
        (SideB(b), AngleA(A)) => {
            let h = arc_pair(k12, cos_k(k1, b), sin_k(k1, b) * sin_k(k2, A)).map_err(existence)?;
            legs_from_b_h(g, b, h)?
        }
        (SideH(h), AngleC(C)) => {
            let s = tan_k(k12, h).map_err(existence)? * cos_k(k2, C) / sin_k(k2, C);
            from_legs(g, asin_k(k1, s).map_err(existence)?, h)?
        }
        (SideH(h), AngleA(A)) => {
            let a = arc_pair(k1, sin_k(k2, A), sin_k(k12, h) * cos_k(k2, A)).map_err(existence)?;
            from_legs(g, a, h)?
        }
        (AngleA(A), AngleC(C)) => {
            if k1 == 0.0 {
                return Err(if same(A, C) {
                    CkError::Underdetermined { constraint: "A = C; the sides are free up to a common factor".into() }
                } else {
                    CkError::Inconsistent("a zero first label forces A = C".into())
                });
            }
            let vh = (versin_k(k2, C) - versin_k(k2, A)) / (k1 * cos_k(k2, A));
            let (sc, sa) = (sin_k(k2, C), sin_k(k2, A));
            let va = (sc - sa) / (k1 * sc);
            from_legs(g, from_versine(k1, va)?, from_versine(k12, vh)?)?
        }
        _ => unreachable!("pairs are ordered by rank"),
    };
    validate(&t)?;
    for k in [p, q] {
        if !approx(k.read(&t), k.value()) {
            return Err(CkError::Existence(format!(
                "{} = {} cannot be realised on the principal branch",
                k.name(),
                k.value()
            )));
        }
    }
    Ok(t)
}

fn approx(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-9 * x.abs().max(y.abs()).max(1.0)
}

fn legs_from_b_h(g: Geometry, b: f64, h: f64) -> Result<OrthoTriangle> {
    let k12 = g.k1 * g.k2;
    let va = (versin_k(g.k1, b) - g.k2 * versin_k(k12, h)) / cos_k(k12, h);
    from_legs(g, from_versine(g.k1, va)?, h)
}

/// Positivity and the principal branch for all five quantities.
pub fn validate(t: &OrthoTriangle) -> Result<()> {
    let vals = [t.a, t.b, t.h, t.A, t.C];
    for (rank, v) in vals.iter().enumerate() {
        let name = ["a", "b", "h", "A", "C"][rank];
        if !(v.is_finite() && *v > 0.0) {
            return Err(CkError::Existence(format!("{name} = {v} is not positive")));
        }
        if *v >= branch_limit(label_of(t.geom, rank as u8)) {
            return Err(CkError::Existence(format!("{name} = {v} is beyond its quadrant")));
        }
    }
    Ok(())
}

/// Area of the orthogonal triangle: (C − A)/κ₁, and for small |κ₁| the
/// (cos, sin) pair with label κ₁²κ₂, which is a·h/2 at κ₁ = 0.
pub fn ortho_area(t: &OrthoTriangle) -> f64 {
    let g = t.geom;
    if g.k1.abs() >= AREA_DIRECT_MIN {
        return (t.C - t.A) / g.k1;
    }
    let (c, s) = area_pair(t);
    arc_pair(g.area_label(), c, s).unwrap_or(f64::NAN)
}

/// (C(𝒮), S(𝒮)) with the area label, from the sides.
pub fn area_pair(t: &OrthoTriangle) -> (f64, f64) {
    let g = t.geom;
    let k12 = g.k1 * g.k2;
    let den = 1.0 + cos_k(g.k1, t.b);
    (
        (cos_k(g.k1, t.a) + cos_k(k12, t.h)) / den,
        sin_k(g.k1, t.a) * sin_k(k12, t.h) / den,
    )
}

fn rel(l: f64, r: f64) -> f64 {
    (l - r).abs() / 1f64.max(l.abs()).max(r.abs())
}

/// Residuals of the twelve relations between the five quantities: three
/// cosine relations for sides, three for angles, the two equalities of the
/// sine theorem and four tangent relations.
pub fn relations(t: &OrthoTriangle) -> [f64; 12] {
    let g = t.geom;
    let (k1, k2) = (g.k1, g.k2);
    let k12 = k1 * k2;
    let (c1a, s1a) = (cos_k(k1, t.a), sin_k(k1, t.a));
    let (c1b, s1b) = (cos_k(k1, t.b), sin_k(k1, t.b));
    let (ch, sh) = (cos_k(k12, t.h), sin_k(k12, t.h));
    let (c2a, s2a) = (cos_k(k2, t.A), sin_k(k2, t.A));
    let (c2c, s2c) = (cos_k(k2, t.C), sin_k(k2, t.C));
    // tangent relations cross-multiplied so that no quotient can blow up
    [
        rel(c1a, c1b * ch + k12 * s1b * sh * s2a),
        rel(c1b, c1a * ch),
        rel(ch, c1a * c1b + k1 * s1a * s1b * c2c),
        rel(s2a, s2c * c1a),
        rel(s2a * c2c, c2a * s2c * c1b),
        rel(c2c, c2a * ch),
        rel(s1a, s1b * c2a),
        rel(s1b * s2c, sh),
        rel(c2c * s1b * c1a, s1a * c1b),
        rel(s2c * ch * s1a, sh * c2c),
        rel(s2a * ch * s1b, sh * c1b),
        rel(s2a * s1a, sh * c2a * c1a),
    ]
}

/// The five quantities measured in the matrix group for legs (a, h): the
/// vertex D = exp(aP₁)exp(hP₂)O is read in polar coordinates from O and the
/// origin is read back from D.
pub fn oracle(g: Geometry, a: f64, h: f64) -> Result<OrthoTriangle> {
    let frame = exp_p1(g, a) * exp_p2(g, h);
    let d = apply(&frame, &Point::ORIGIN);
    let pd = polar(g, &d)?;
    let back = exp_p2(g, -h) * exp_p1(g, -a);
    let o = apply(&back, &Point::ORIGIN);
    // a half turn about D points the returning side forwards again
    let pa = polar(g, &Point::new(o.x0, -o.x1, -o.x2))?;
    Ok(OrthoTriangle { geom: g, a, b: pd.r, h, C: pd.chi, A: pa.chi })
}

impl Sampler {
    /// Random orthogonal triangle on the principal branch, from its legs.
    pub fn ortho(&mut self, g: Geometry) -> Result<OrthoTriangle> {
        let k12 = g.k1 * g.k2;
        for _ in 0..MAX_ATTEMPTS {
            let a = self.leg(g.k1);
            let h = self.leg(k12);
            if let Ok(t) = from_legs(g, a, h) {
                if validate(&t).is_ok() {
                    return Ok(t);
                }
            }
        }
        Err(CkError::Existence(format!("no orthogonal triangle found for ({}, {})", g.k1, g.k2)))
    }

    fn leg(&mut self, k: f64) -> f64 {
        let hi = upper(k).min(0.9 * branch_limit(k));
        self.uniform(0.05 * hi, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use OrthoKnown::*;

    #[test]
    fn euclidean_legs() {
        let t = solve_ortho(Geometry::EUCLIDEAN, SideA(3.0), SideH(4.0)).unwrap();
        assert!((t.b - 5.0).abs() < 1e-14);
        assert!((t.C - t.A).abs() < 1e-15);
        assert!((ortho_area(&t) - 6.0).abs() < 1e-14);
    }

    #[test]
    fn zero_label_pairs() {
        assert!(matches!(
            solve_ortho(Geometry::GALILEAN, SideA(2.0), SideB(2.0)),
            Err(CkError::Underdetermined { .. })
        ));
        assert!(matches!(
            solve_ortho(Geometry::CO_EUCLIDEAN, SideA(1.0), SideB(1.2)),
            Err(CkError::Inconsistent(_))
        ));
        assert!(matches!(
            solve_ortho(Geometry::EUCLIDEAN, AngleA(0.4), AngleC(0.5)),
            Err(CkError::Inconsistent(_))
        ));
    }

    #[test]
    fn beyond_quadrant() {
        assert!(matches!(solve_ortho(Geometry::SPHERE, SideA(1.7), SideH(0.3)), Err(CkError::Range(_))));
    }
}
