//! The basic group identity of a triangle loop, the point and line loop
//! equations, and the per-side / per-vertex generators obtained by
//! conjugating the fiducial ones.

#![allow(non_snake_case)]

use nalgebra::Matrix3;

use crate::error::{CkError, Result};
use crate::group::{exp_j12, exp_p1, generators, inverse_word, is_isometry, word, Factor, Geometry, GroupElement};
use crate::labeled::{arc_pair, half_period};
use crate::triangle::Triangle;

/// Vertex of the loop, base of a point loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vertex {
    A,
    B,
    C,
}

/// Side of the loop, base of a line loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
    C,
}

/// Translations along the three sides and rotations about the three vertices,
/// each stored as the frame conjugating the fiducial subgroup into place.
#[derive(Debug, Clone)]
pub struct ConjugatedGenerators {
    geom: Geometry,
    frames_p: [Vec<Factor>; 3],
    frames_j: [Vec<Factor>; 3],
}

impl ConjugatedGenerators {
    /// Triangle in canonical position: C at O, side a on the fiducial line.
    pub fn new(t: &Triangle) -> Self {
        use Factor::{J12, P1};
        let (a, b, c, A, C) = (t.a, t.b, t.c, t.A, t.C);
        let _ = a;
        ConjugatedGenerators {
            geom: t.geom,
            frames_p: [
                vec![],
                vec![J12(C)],
                vec![J12(C), P1(b), J12(-A)],
            ],
            frames_j: [
                vec![J12(C), P1(b)],
                vec![J12(C), P1(b), J12(-A), P1(c)],
                vec![],
            ],
        }
    }

    fn conj(&self, frame: &[Factor], inner: GroupElement) -> GroupElement {
        word(self.geom, frame) * inner * word(self.geom, &inverse_word(frame))
    }

    fn conj_alg(&self, frame: &[Factor], inner: Matrix3<f64>) -> Matrix3<f64> {
        word(self.geom, frame).m * inner * word(self.geom, &inverse_word(frame)).m
    }

    /// exp(x P_side)
    pub fn translation(&self, side: Side, x: f64) -> GroupElement {
        self.conj(&self.frames_p[side as usize], exp_p1(self.geom, x))
    }

    /// exp(θ J_vertex)
    pub fn rotation(&self, v: Vertex, theta: f64) -> GroupElement {
        self.conj(&self.frames_j[v as usize], exp_j12(self.geom, theta))
    }

    /// Lie-algebra matrix P_side.
    pub fn p(&self, side: Side) -> Matrix3<f64> {
        self.conj_alg(&self.frames_p[side as usize], generators(self.geom).0)
    }

    /// Lie-algebra matrix J_vertex.
    pub fn j(&self, v: Vertex) -> Matrix3<f64> {
        self.conj_alg(&self.frames_j[v as usize], generators(self.geom).2)
    }
}

fn residual(lhs: &GroupElement, rhs: &GroupElement, factors: &[GroupElement]) -> f64 {
    let scale = factors.iter().map(GroupElement::max_abs).fold(1.0, f64::max);
    (lhs.m - rhs.m).amax() / scale
}

fn residual_m(lhs: &Matrix3<f64>, rhs: &Matrix3<f64>) -> f64 {
    (lhs - rhs).amax() / lhs.amax().max(rhs.amax()).max(1.0)
}

/// max |exp(−aP₁)exp(CJ₁₂)exp(bP₁)exp(−AJ₁₂)exp(cP₁)exp(BJ₁₂) − I|,
/// normalised by the largest factor entry.
pub fn basic_identity_residual(t: &Triangle) -> f64 {
    let g = t.geom;
    let fs = [
        exp_p1(g, -t.a),
        exp_j12(g, t.C),
        exp_p1(g, t.b),
        exp_j12(g, -t.A),
        exp_p1(g, t.c),
        exp_j12(g, t.B),
    ];
    let prod = fs.iter().fold(GroupElement::identity(), |acc, f| acc * *f);
    residual(&prod, &GroupElement::identity(), &fs)
}

fn point_loop(t: &Triangle, base: Vertex) -> (GroupElement, GroupElement, Vec<GroupElement>) {
    let gens = ConjugatedGenerators::new(t);
    let ta = gens.translation(Side::A, -t.a);
    let tb = gens.translation(Side::B, t.b);
    let tc = gens.translation(Side::C, t.c);
    let fs = match base {
        Vertex::C => vec![ta, tc, tb],
        Vertex::A => vec![tb, ta, tc],
        Vertex::B => vec![tc, tb, ta],
    };
    let prod = fs.iter().fold(GroupElement::identity(), |acc, f| acc * *f);
    let rhs = gens.rotation(base, -t.excesses().Delta);
    (prod, rhs, fs)
}

/// Point loop based at a vertex: the three side translations compose to the
/// rotation by −Δ about that vertex.
pub fn point_loop_residual(t: &Triangle, base: Vertex) -> f64 {
    let (lhs, rhs, mut fs) = point_loop(t, base);
    fs.push(rhs);
    residual(&lhs, &rhs, &fs)
}

/// Line loop based on a side: the three vertex rotations compose to the
/// translation by −δ along that side.
pub fn line_loop_residual(t: &Triangle, base: Side) -> f64 {
    let gens = ConjugatedGenerators::new(t);
    let ra = gens.rotation(Vertex::A, -t.A);
    let rb = gens.rotation(Vertex::B, t.B);
    let rc = gens.rotation(Vertex::C, t.C);
    let mut fs = match base {
        Side::A => vec![rb, ra, rc],
        Side::B => vec![rc, rb, ra],
        Side::C => vec![ra, rc, rb],
    };
    let prod = fs.iter().fold(GroupElement::identity(), |acc, f| acc * *f);
    let rhs = gens.translation(base, -t.excesses().delta);
    fs.push(rhs);
    residual(&prod, &rhs, &fs)
}

/// Residuals of the six compatibility conditions between conjugated generators.
pub fn compatibility_residuals(t: &Triangle) -> [f64; 6] {
    let gn = ConjugatedGenerators::new(t);
    let (pa, pb, pc) = (gn.p(Side::A), gn.p(Side::B), gn.p(Side::C));
    let (ja, jb, jc) = (gn.j(Vertex::A), gn.j(Vertex::B), gn.j(Vertex::C));
    let sandwich = |g: GroupElement, gi: GroupElement, x: &Matrix3<f64>| g.m * x * gi.m;
    [
        residual_m(&pb, &sandwich(gn.rotation(Vertex::C, t.C), gn.rotation(Vertex::C, -t.C), &pa)),
        residual_m(&pc, &sandwich(gn.rotation(Vertex::A, -t.A), gn.rotation(Vertex::A, t.A), &pb)),
        residual_m(&pa, &sandwich(gn.rotation(Vertex::B, t.B), gn.rotation(Vertex::B, -t.B), &pc)),
        residual_m(&jb, &sandwich(gn.translation(Side::C, t.c), gn.translation(Side::C, -t.c), &ja)),
        residual_m(&jc, &sandwich(gn.translation(Side::A, -t.a), gn.translation(Side::A, t.a), &jb)),
        residual_m(&ja, &sandwich(gn.translation(Side::B, t.b), gn.translation(Side::B, -t.b), &jc)),
    ]
}

/// Rotation angle of the point loop based at C, read off the matrix.
/// Equals −Δ.
///
/// The matrix fixes the angle only modulo the full period 2π/√κ₂ when
/// κ₂ > 0.  Since Δ has the sign of κ₁ and stays below that period, the
/// reading is taken in (−2π/√κ₂, 0] when κ₁ > 0.
pub fn holonomy_angle(t: &Triangle) -> Result<f64> {
    let g = t.geom;
    let (h, _, fs) = point_loop(t, Vertex::C);
    let scale = fs.iter().map(GroupElement::max_abs).fold(1.0, f64::max);
    let tol = 1e-9 * scale * scale;
    if !is_isometry(g, &h, tol) {
        return Err(CkError::Extraction("loop product is not an isometry".into()));
    }
    let m = &h.m;
    let fixes_origin = (m[(0, 0)] - 1.0).abs().max(m[(1, 0)].abs()).max(m[(2, 0)].abs()) <= 1e-9 * scale;
    if !fixes_origin {
        return Err(CkError::Extraction("loop product does not fix the base vertex".into()));
    }
    let raw = arc_pair(g.k2, m[(1, 1)], m[(2, 1)]).map_err(|e| CkError::Extraction(e.to_string()))?;
    if g.k1 > 0.0 && g.k2 > 0.0 && raw > 1e-9 * half_period(g.k2) {
        Ok(raw - 2.0 * half_period(g.k2))
    } else {
        Ok(raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::solve_sas;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn zero_triangle_is_identity() {
        let t = Triangle { geom: Geometry::SPHERE, a: 0.0, b: 0.0, c: 0.0, A: 0.0, B: 0.0, C: 0.0 };
        assert_eq!(basic_identity_residual(&t), 0.0);
    }

    #[test]
    fn octant_loops() {
        let q = FRAC_PI_2;
        let t = solve_sas(Geometry::SPHERE, q, q, q).unwrap();
        assert!(basic_identity_residual(&t) <= 1e-12);
        for v in [Vertex::A, Vertex::B, Vertex::C] {
            assert!(point_loop_residual(&t, v) <= 1e-12);
        }
        for s in [Side::A, Side::B, Side::C] {
            assert!(line_loop_residual(&t, s) <= 1e-12);
        }
        assert!((holonomy_angle(&t).unwrap() + q).abs() <= 1e-12);
    }

    #[test]
    fn flat_holonomy_vanishes() {
        let t = solve_sas(Geometry::EUCLIDEAN, 3.0, 4.0, 1.1).unwrap();
        assert!(holonomy_angle(&t).unwrap().abs() < 1e-12);
        assert!(compatibility_residuals(&t).iter().all(|r| *r < 1e-12));
    }
}
