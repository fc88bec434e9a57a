//! Matrix realisation of the motion groups SO_{κ₁,κ₂}(3).
//!
//! Points live on the quadric Σ: (x⁰)² + κ₁(x¹)² + κ₁κ₂(x²)² = 1 with origin
//! O = (1, 0, 0).  The one-parameter subgroups are written down in closed form,
//! and lengths and angles are read back by moving configurations to a
//! canonical position.  This is the oracle the trigonometry is checked against.

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

use crate::error::{CkError, Result};
use crate::labeled::{cos_k, half_period, sin_k};
use crate::triangle::Triangle;

/// The pair of labels (κ₁, κ₂).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Geometry {
    pub k1: f64,
    pub k2: f64,
}

/// Canonical names, with their aliases, for the nine (κ₁, κ₂) ∈ {−1, 0, 1}².
pub const PRESETS: [(&str, &[&str], f64, f64); 9] = [
    ("elliptic", &["sphere", "spherical"], 1.0, 1.0),
    ("euclidean", &["plane"], 0.0, 1.0),
    ("hyperbolic", &["lobachevsky"], -1.0, 1.0),
    ("co-euclidean", &["oscillating-nh", "oscillating-newton-hooke"], 1.0, 0.0),
    ("galilean", &[], 0.0, 0.0),
    ("co-minkowskian", &["expanding-nh", "expanding-newton-hooke"], -1.0, 0.0),
    ("co-hyperbolic", &["anti-de-sitter", "ads"], 1.0, -1.0),
    ("minkowskian", &["minkowski"], 0.0, -1.0),
    ("doubly-hyperbolic", &["de-sitter", "ds"], -1.0, -1.0),
];

impl Geometry {
    pub const fn new(k1: f64, k2: f64) -> Self {
        Self { k1, k2 }
    }

    pub const SPHERE: Geometry = Geometry::new(1.0, 1.0);
    pub const EUCLIDEAN: Geometry = Geometry::new(0.0, 1.0);
    pub const HYPERBOLIC: Geometry = Geometry::new(-1.0, 1.0);
    pub const CO_EUCLIDEAN: Geometry = Geometry::new(1.0, 0.0);
    pub const GALILEAN: Geometry = Geometry::new(0.0, 0.0);
    pub const CO_MINKOWSKIAN: Geometry = Geometry::new(-1.0, 0.0);
    pub const ANTI_DE_SITTER: Geometry = Geometry::new(1.0, -1.0);
    pub const MINKOWSKIAN: Geometry = Geometry::new(0.0, -1.0);
    pub const DE_SITTER: Geometry = Geometry::new(-1.0, -1.0);

    /// The nine canonical geometries in table order.
    pub fn canonical() -> [Geometry; 9] {
        PRESETS.map(|(_, _, k1, k2)| Geometry::new(k1, k2))
    }

    /// Look up a preset by its name or an alias (case-insensitive, `_` ≡ `-`).
    pub fn from_name(name: &str) -> Option<Geometry> {
        let key = name.trim().to_ascii_lowercase().replace(['_', ' '], "-");
        PRESETS
            .iter()
            .find(|(n, aliases, _, _)| *n == key || aliases.contains(&key.as_str()))
            .map(|&(_, _, k1, k2)| Geometry::new(k1, k2))
    }

    /// Canonical name when both labels are in {−1, 0, 1}.
    pub fn name(&self) -> Option<&'static str> {
        PRESETS
            .iter()
            .find(|(_, _, k1, k2)| *k1 == self.k1 && *k2 == self.k2)
            .map(|(n, _, _, _)| *n)
    }

    /// Ordinary duality: swap the labels.
    pub fn dual(&self) -> Geometry {
        Geometry::new(self.k2, self.k1)
    }

    /// Label of trigonometric functions of the area, κ₁²κ₂.
    pub fn area_label(&self) -> f64 {
        self.k1 * self.k1 * self.k2
    }

    /// Label of trigonometric functions of the coarea, κ₁κ₂².
    pub fn coarea_label(&self) -> f64 {
        self.k1 * self.k2 * self.k2
    }

    /// The bilinear form Λ = diag(1, κ₁, κ₁κ₂).
    pub fn lambda(&self) -> Matrix3<f64> {
        Matrix3::from_diagonal(&Vector3::new(1.0, self.k1, self.k1 * self.k2))
    }
}

/// Weierstrass coordinates of a point of Σ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
}

impl Point {
    pub const ORIGIN: Point = Point::new(1.0, 0.0, 0.0);

    pub const fn new(x0: f64, x1: f64, x2: f64) -> Self {
        Self { x0, x1, x2 }
    }

    fn vec(&self) -> Vector3<f64> {
        Vector3::new(self.x0, self.x1, self.x2)
    }

    fn from_vec(v: Vector3<f64>) -> Self {
        Self::new(v[0], v[1], v[2])
    }

    /// Defect of the quadric equation of Σ.
    pub fn sphere_defect(&self, g: Geometry) -> f64 {
        self.x0 * self.x0 + g.k1 * self.x1 * self.x1 + g.k1 * g.k2 * self.x2 * self.x2 - 1.0
    }
}

/// A 3×3 matrix of the motion group.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    pub m: Matrix3<f64>,
}

impl GroupElement {
    pub fn identity() -> Self {
        Self { m: Matrix3::identity() }
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        GroupElement { m: self.m * other.m }
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.m.amax()
    }
}

impl std::ops::Mul for GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: GroupElement) -> GroupElement {
        GroupElement { m: self.m * rhs.m }
    }
}

/// exp(α P₁): translation along the fiducial line through O.
pub fn exp_p1(g: Geometry, alpha: f64) -> GroupElement {
    let (c, s) = (cos_k(g.k1, alpha), sin_k(g.k1, alpha));
    GroupElement {
        m: Matrix3::new(c, -g.k1 * s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0),
    }
}

/// exp(β P₂): translation along the line orthogonal to the fiducial one.
pub fn exp_p2(g: Geometry, beta: f64) -> GroupElement {
    let k = g.k1 * g.k2;
    let (c, s) = (cos_k(k, beta), sin_k(k, beta));
    GroupElement {
        m: Matrix3::new(c, 0.0, -k * s, 0.0, 1.0, 0.0, s, 0.0, c),
    }
}

/// exp(γ J₁₂): rotation about O.
pub fn exp_j12(g: Geometry, gamma: f64) -> GroupElement {
    let (c, s) = (cos_k(g.k2, gamma), sin_k(g.k2, gamma));
    GroupElement {
        m: Matrix3::new(1.0, 0.0, 0.0, 0.0, c, -g.k2 * s, 0.0, s, c),
    }
}

/// Generator matrices (P₁, P₂, J₁₂) of the Lie algebra.
pub fn generators(g: Geometry) -> (Matrix3<f64>, Matrix3<f64>, Matrix3<f64>) {
    let p1 = Matrix3::new(0.0, -g.k1, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    let p2 = Matrix3::new(0.0, 0.0, -g.k1 * g.k2, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0);
    let j12 = Matrix3::new(0.0, 0.0, 0.0, 0.0, 0.0, -g.k2, 0.0, 1.0, 0.0);
    (p1, p2, j12)
}

/// One factor of a product of one-parameter subgroups.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Factor {
    P1(f64),
    P2(f64),
    J12(f64),
}

impl Factor {
    pub fn element(&self, g: Geometry) -> GroupElement {
        match *self {
            Factor::P1(t) => exp_p1(g, t),
            Factor::P2(t) => exp_p2(g, t),
            Factor::J12(t) => exp_j12(g, t),
        }
    }

    pub fn inverse(&self) -> Factor {
        match *self {
            Factor::P1(t) => Factor::P1(-t),
            Factor::P2(t) => Factor::P2(-t),
            Factor::J12(t) => Factor::J12(-t),
        }
    }
}

/// Ordered product of factors, left to right.
pub fn word(g: Geometry, factors: &[Factor]) -> GroupElement {
    factors
        .iter()
        .fold(GroupElement::identity(), |acc, f| acc * f.element(g))
}

/// Exact inverse of a word: reversed order, negated parameters.
pub fn inverse_word(factors: &[Factor]) -> Vec<Factor> {
    factors.iter().rev().map(Factor::inverse).collect()
}

/// True iff max |MᵀΛM − Λ| ≤ tol.
pub fn is_isometry(g: Geometry, m: &GroupElement, tol: f64) -> bool {
    let l = g.lambda();
    (m.m.transpose() * l * m.m - l).amax() <= tol
}

pub fn apply(m: &GroupElement, p: &Point) -> Point {
    Point::from_vec(m.m * p.vec())
}

/// A word W with W·O = p.
///
/// Uses parallel coordinates p = exp(αP₁)exp(βP₂)O; for κ₁ < 0, κ₂ < 0 the
/// order is swapped, since there the first ordering misses part of Σ.
pub fn canonical_word(g: Geometry, p: &Point) -> Result<Vec<Factor>> {
    let bad = |what: &str| CkError::Degenerate(format!("point not on the orbit of O ({what})"));
    let kh = g.k1 * g.k2;
    if g.k1 < 0.0 && g.k2 < 0.0 {
        // p = exp(βP₂)exp(αP₁)O = (C₁₂(β)C₁(α), S₁(α), S₁₂(β)C₁(α))
        let alpha = crate::labeled::asin_k(g.k1, p.x1).map_err(|_| bad("x1"))?;
        let c1 = cos_k(g.k1, alpha);
        let beta = crate::labeled::arc_pair(kh, p.x0 / c1, p.x2 / c1).map_err(|_| bad("x0"))?;
        Ok(vec![Factor::P2(beta), Factor::P1(alpha)])
    } else {
        // p = exp(αP₁)exp(βP₂)O = (C₁(α)C₁₂(β), S₁(α)C₁₂(β), S₁₂(β))
        let beta = crate::labeled::asin_k(kh, p.x2).map_err(|_| bad("x2"))?;
        let c12 = cos_k(kh, beta);
        let alpha = if c12 > 0.0 {
            crate::labeled::arc_pair(g.k1, p.x0 / c12, p.x1 / c12).map_err(|_| bad("x0"))?
        } else {
            0.0 // pole of the P₂ line: any α works
        };
        Ok(vec![Factor::P1(alpha), Factor::P2(beta)])
    }
}

/// Polar coordinates of p about O: p = exp(χJ₁₂)exp(rP₁)O.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Polar {
    pub r: f64,
    pub chi: f64,
}

/// Radius of the polar reading; needs only a first-kind separation.
fn polar_radius(g: Geometry, p: &Point) -> Result<(f64, f64)> {
    let s2 = p.x1 * p.x1 + g.k2 * p.x2 * p.x2;
    let scale = p.x1 * p.x1 + g.k2.abs() * p.x2 * p.x2;
    if scale == 0.0 {
        return Ok((0.0, 0.0));
    }
    if s2 < -1e-14 * scale {
        return Err(CkError::Kind("second-kind separation".into()));
    }
    if s2 <= 1e-14 * scale {
        return Err(CkError::Kind("isotropic separation".into()));
    }
    let s1 = s2.sqrt();
    let r = if g.k1 > 0.0 {
        let q = g.k1.sqrt();
        (q * s1).atan2(p.x0) / q
    } else if g.k1 < 0.0 {
        if p.x0 <= 0.0 {
            return Err(CkError::Kind("point on the far sheet".into()));
        }
        let q = (-g.k1).sqrt();
        (q * s1).asinh() / q
    } else {
        s1
    };
    Ok((r, s1))
}

/// Polar reading of p relative to O, with the fiducial line as zero direction.
pub fn polar(g: Geometry, p: &Point) -> Result<Polar> {
    let (r, s1) = polar_radius(g, p)?;
    if s1 == 0.0 {
        return Ok(Polar { r, chi: 0.0 });
    }
    let chi = if g.k2 > 0.0 {
        let q = g.k2.sqrt();
        (q * p.x2).atan2(p.x1) / q
    } else {
        if p.x1 <= 0.0 {
            return Err(CkError::Kind("reversed (past-directed) separation".into()));
        }
        if g.k2 == 0.0 {
            p.x2 / p.x1
        } else {
            let q = (-g.k2).sqrt();
            let t = q * p.x2 / p.x1;
            if t.abs() >= 1.0 {
                return Err(CkError::Kind("isotropic separation".into()));
            }
            t.atanh() / q
        }
    };
    Ok(Polar { r, chi })
}

/// Length of the first-kind segment from u to v.
pub fn distance(g: Geometry, u: &Point, v: &Point) -> Result<f64> {
    let w = inverse_word(&canonical_word(g, u)?);
    let v0 = apply(&word(g, &w), v);
    polar_radius(g, &v0)
        .map(|(r, _)| r)
        .map_err(|e| CkError::Degenerate(e.to_string()))
}

fn reflect_x1(p: &Point) -> Point {
    Point::new(p.x0, -p.x1, p.x2)
}

fn reflect_x2(p: &Point) -> Point {
    Point::new(p.x0, p.x1, -p.x2)
}

/// Measure the triangle loop with vertices C, A, B (a = CB, b = CA, c = AB).
///
/// Each vertex in turn is moved to O with its incoming side along the fiducial
/// line, and the other vertex is read in polar coordinates; the angle at A
/// comes out as the external one.
pub fn measure_triangle(g: Geometry, cv: &Point, av: &Point, bv: &Point) -> Result<Triangle> {
    // C at the origin
    let to_o = word(g, &inverse_word(&canonical_word(g, cv)?));
    let (a1, b1) = (apply(&to_o, av), apply(&to_o, bv));
    let pb = polar(g, &b1)?;
    // side a along the fiducial line
    let rot = exp_j12(g, -pb.chi);
    let (mut a2, b2) = (apply(&rot, &a1), apply(&rot, &b1));
    let mut pa = polar(g, &a2)?;
    if pa.chi < 0.0 {
        a2 = reflect_x2(&a2);
        pa.chi = -pa.chi;
    }
    let (a, b, cc) = (pb.r, pa.r, pa.chi);
    let collinear = cc <= 1e-12
        || (g.k2 > 0.0 && cc >= half_period(g.k2) * (1.0 - 1e-12));
    if a <= 0.0 || b <= 0.0 || collinear {
        return Err(CkError::Degenerate("collinear or coincident vertices".into()));
    }
    // vertex B: its incoming side points back along the fiducial line
    let at_b = reflect_x1(&apply(&exp_p1(g, -a), &a2));
    let pbb = polar(g, &at_b)?;
    // vertex A, reached from C by a rotation C and a translation b
    let f = exp_p1(g, -b) * exp_j12(g, -cc);
    let at_a = reflect_x2(&apply(&f, &b2));
    let paa = polar(g, &at_a)?;
    if pbb.chi <= 0.0 || paa.chi <= 0.0 {
        return Err(CkError::Degenerate("loop orientation is inconsistent".into()));
    }
    Ok(Triangle {
        geom: g,
        a,
        b,
        c: 0.5 * (pbb.r + paa.r),
        A: paa.chi,
        B: pbb.chi,
        C: cc,
    })
}

/// Build the loop with C at O, B = exp(aP₁)O and A = exp(CJ₁₂)exp(bP₁)O,
/// then measure it.  Returns the triangle and the vertices (C, A, B).
pub fn make_triangle_sas(g: Geometry, a: f64, c_angle: f64, b: f64) -> Result<(Triangle, [Point; 3])> {
    if !(a > 0.0 && b > 0.0 && c_angle > 0.0) {
        return Err(CkError::Range("sides and angle must be positive".into()));
    }
    let cv = Point::ORIGIN;
    let bv = apply(&exp_p1(g, a), &cv);
    let av = apply(&(exp_j12(g, c_angle) * exp_p1(g, b)), &cv);
    let t = measure_triangle(g, &cv, &av, &bv).map_err(|e| match e {
        CkError::Kind(m) => CkError::Existence(format!("closing side is not first-kind: {m}")),
        other => other,
    })?;
    Ok((t, [cv, av, bv]))
}
