//! Orthogonal triangles: worked examples, the twelve relations, the two area
//! routes and agreement with the matrix-group measurement.

#![allow(non_snake_case)]

use cktrig::labeled::{arc_pair, cos_k, sin_k};
use cktrig::orthogonal::{area_pair, oracle, ortho_area, relations, solve_ortho, OrthoKnown, OrthoTriangle};
use cktrig::sampling::Sampler;
use cktrig::{CkError, Geometry};
use proptest::prelude::*;

use OrthoKnown::*;

// asinh(sinh 1 · sin 0.6), evaluated once with std functions and frozen.
const HYPERBOLIC_LEG: f64 = 0.6225654512003399;

fn max_relation(t: &OrthoTriangle) -> f64 {
    relations(t).into_iter().fold(0.0, f64::max)
}

#[test]
fn euclidean_right_triangle() {
    let t = solve_ortho(Geometry::EUCLIDEAN, SideA(3.0), SideH(4.0)).unwrap();
    assert!((t.b - 5.0).abs() < 1e-14);
    assert!((ortho_area(&t) - 6.0).abs() < 1e-13);
    assert!((t.C - t.A).abs() < 1e-15);
    assert!((t.C - (4f64 / 3.0).atan()).abs() < 1e-15);
}

#[test]
fn galilean_right_triangle() {
    let t = solve_ortho(Geometry::GALILEAN, SideA(2.0), SideH(1.0)).unwrap();
    assert_eq!(t.b, 2.0);
    assert!((t.C - 0.5).abs() < 1e-15);
    assert_eq!(t.A, t.C);
    assert!((ortho_area(&t) - 1.0).abs() < 1e-15);
    assert!(matches!(solve_ortho(Geometry::GALILEAN, SideA(2.0), SideB(2.0)), Err(CkError::Underdetermined { .. })));
    assert!(matches!(solve_ortho(Geometry::GALILEAN, SideA(2.0), SideB(3.0)), Err(CkError::Inconsistent(_))));
}

#[test]
fn hyperbolic_from_hypotenuse_and_angle() {
    let t = solve_ortho(Geometry::HYPERBOLIC, SideB(1.0), AngleC(0.6)).unwrap();
    assert!((t.h.sinh() - 1f64.sinh() * 0.6f64.sin()).abs() < 1e-14);
    assert!(((1f64.sinh() * 0.6f64.sin()).asinh() - HYPERBOLIC_LEG).abs() < 1e-15);
    assert!((t.h - HYPERBOLIC_LEG).abs() < 1e-14);
    assert!((t.a.tanh() - 1f64.tanh() * 0.6f64.cos()).abs() < 1e-14);
    assert!(max_relation(&t) <= 1e-14);
}

#[test]
fn anti_de_sitter_area() {
    let t = solve_ortho(Geometry::ANTI_DE_SITTER, SideA(0.8), SideH(0.3)).unwrap();
    let s = t.a.sin() * t.h.sinh() / (1.0 + t.b.cos());
    assert!((ortho_area(&t).sinh() - s).abs() < 1e-13);
}

#[test]
fn de_sitter_area_routes_agree() {
    let mut s = Sampler::new(11);
    for _ in 0..200 {
        let t = s.ortho(Geometry::DE_SITTER).unwrap();
        let (c, sn) = area_pair(&t);
        let direct = ortho_area(&t);
        let from_sides = arc_pair(Geometry::DE_SITTER.area_label(), c, sn).unwrap();
        assert!((direct - from_sides).abs() <= 1e-10 * direct.abs().max(1.0), "{direct} {from_sides}");
    }
}

#[test]
fn domain_errors() {
    assert!(matches!(solve_ortho(Geometry::EUCLIDEAN, SideA(-1.0), SideH(1.0)), Err(CkError::Range(_))));
    assert!(matches!(solve_ortho(Geometry::SPHERE, SideA(2.0), SideH(0.5)), Err(CkError::Range(_))));
    assert!(matches!(solve_ortho(Geometry::EUCLIDEAN, SideA(3.0), SideB(2.0)), Err(CkError::Existence(_))));
    assert!(matches!(solve_ortho(Geometry::EUCLIDEAN, SideA(3.0), SideA(2.0)), Err(CkError::Underdetermined { .. })));
}

fn geometry() -> impl Strategy<Value = Geometry> {
    prop_oneof![
        (0..9usize).prop_map(|i| Geometry::canonical()[i]),
        (-4.0..4.0f64, -4.0..4.0f64).prop_map(|(k1, k2)| Geometry::new(k1, k2)),
    ]
}

fn read(t: &OrthoTriangle, i: usize) -> OrthoKnown {
    [SideA(t.a), SideB(t.b), SideH(t.h), AngleA(t.A), AngleC(t.C)][i]
}

proptest! {
    #[test]
    fn relations_hold(g in geometry(), seed in any::<u64>()) {
        let t = Sampler::new(seed).ortho(g).unwrap();
        prop_assert!(max_relation(&t) <= 1e-10, "{:?} {:?}", t, relations(&t));
    }

    #[test]
    fn matches_the_group_oracle(g in geometry(), seed in any::<u64>()) {
        let t = Sampler::new(seed).ortho(g).unwrap();
        let m = oracle(g, t.a, t.h).unwrap();
        for (x, y) in [(t.b, m.b), (t.C, m.C), (t.A, m.A)] {
            prop_assert!((x - y).abs() <= 1e-10 * x.abs().max(1.0), "{:?} {:?}", t, m);
        }
    }

    #[test]
    fn cosine_of_area_from_sides(g in geometry(), seed in any::<u64>()) {
        let t = Sampler::new(seed).ortho(g).unwrap();
        let k12 = g.k1 * g.k2;
        let lhs = cos_k(g.area_label(), ortho_area(&t));
        let rhs = (cos_k(g.k1, t.a) + cos_k(k12, t.h)) / (1.0 + cos_k(g.k1, t.b));
        prop_assert!((lhs - rhs).abs() <= 1e-10 * lhs.abs().max(1.0));
        let sn = sin_k(g.area_label(), ortho_area(&t));
        prop_assert!((sn - area_pair(&t).1).abs() <= 1e-10 * sn.abs().max(1.0));
    }

    #[test]
    fn any_two_quantities_recover_the_rest(g in geometry(), seed in any::<u64>(), i in 0..5usize, j in 0..5usize) {
        prop_assume!(i != j);
        let t = Sampler::new(seed).ortho(g).unwrap();
        match solve_ortho(g, read(&t, i), read(&t, j)) {
            Ok(u) => {
                for (x, y) in [(t.a, u.a), (t.b, u.b), (t.h, u.h), (t.A, u.A), (t.C, u.C)] {
                    prop_assert!((x - y).abs() <= 1e-8 * x.abs().max(1.0), "{:?} {:?}", t, u);
                }
            }
            // pairs that carry no information about the remaining scale
            Err(CkError::Underdetermined { .. }) => prop_assert!((g.k2 == 0.0 && i + j == 1) || (g.k1 == 0.0 && i + j == 7)),
            Err(e) => prop_assert!(false, "{:?}: {}", t, e),
        }
    }
}
