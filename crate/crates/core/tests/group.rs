//! The matrix realisation of the motion groups: isometries, the action on Σ,
//! invariance of distances and the triangle construction.

use cktrig::group::{apply, distance, exp_j12, exp_p1, exp_p2, is_isometry, make_triangle_sas, Geometry, GroupElement, Point};
use cktrig::labeled::{cos_k, sin_k};
use cktrig::sampling::{upper, Sampler};
use proptest::prelude::*;

fn geometry() -> impl Strategy<Value = Geometry> {
    let label = || prop_oneof![1 => Just(-1.0), 1 => Just(0.0), 1 => Just(1.0), 4 => -4.0..4.0f64];
    (label(), label()).prop_map(|(k1, k2)| Geometry::new(k1, k2))
}

/// Parameters up to 5, scaled down where a label would make cosh explode.
fn word(g: Geometry, p: [f64; 4]) -> GroupElement {
    let s1 = upper(g.k1) / 2.5;
    let s2 = upper(g.k2) / 2.5;
    let s12 = upper(g.k1 * g.k2) / 2.5;
    exp_p1(g, p[0] * s1) * exp_j12(g, p[1] * s2) * exp_p2(g, p[2] * s12) * exp_p1(g, p[3] * s1)
}

fn params() -> impl Strategy<Value = [f64; 4]> {
    [-5.0..5.0f64, -5.0..5.0f64, -5.0..5.0f64, -5.0..5.0f64]
}

#[test]
fn polar_action_on_origin() {
    for g in Geometry::canonical() {
        for (r, chi) in [(0.3, 0.2), (1.1, 0.9), (0.05, 1.4)] {
            let p = apply(&(exp_j12(g, chi) * exp_p1(g, r)), &Point::ORIGIN);
            let (c1, s1) = (cos_k(g.k1, r), sin_k(g.k1, r));
            assert!((p.x0 - c1).abs() < 1e-15);
            assert!((p.x1 - s1 * cos_k(g.k2, chi)).abs() < 1e-15);
            assert!((p.x2 - s1 * sin_k(g.k2, chi)).abs() < 1e-15);
        }
    }
}

#[test]
fn sphere_group_is_rotations() {
    let g = Geometry::SPHERE;
    let mut s = Sampler::new(3);
    for _ in 0..200 {
        let p = [s.uniform(-5.0, 5.0), s.uniform(-5.0, 5.0), s.uniform(-5.0, 5.0), s.uniform(-5.0, 5.0)];
        let m = (exp_p1(g, p[0]) * exp_j12(g, p[1]) * exp_p2(g, p[2]) * exp_p1(g, p[3])).m;
        assert!((m.transpose() * m - nalgebra::Matrix3::identity()).amax() < 1e-14);
        assert!((m.determinant() - 1.0).abs() < 1e-14);
    }
}

proptest! {
    #[test]
    fn products_are_isometries(g in geometry(), p in params()) {
        let m = word(g, p);
        // entries of the form grow like the square of the matrix entries
        let scale = m.max_abs().powi(2);
        prop_assert!(is_isometry(g, &m, 1e-12 * scale));
    }

    #[test]
    fn action_stays_on_sigma(g in geometry(), p in params(), q in params()) {
        let x = apply(&word(g, q), &Point::ORIGIN);
        let y = apply(&word(g, p), &x);
        let scale = 1f64.max(y.x0 * y.x0).max((g.k1 * y.x1 * y.x1).abs()).max((g.k1 * g.k2 * y.x2 * y.x2).abs());
        prop_assert!(y.sphere_defect(g).abs() <= 1e-12 * scale);
    }

    #[test]
    fn distance_is_invariant(g in geometry(), p in params(), q in params(), t in 0.05..1.0f64) {
        let d = t * upper(g.k1);
        let place = word(g, q);
        let u = apply(&place, &Point::ORIGIN);
        let v = apply(&(place * exp_p1(g, d)), &Point::ORIGIN);
        let m = word(g, p);
        let d0 = distance(g, &u, &v).unwrap();
        let d1 = distance(g, &apply(&m, &u), &apply(&m, &v)).unwrap();
        let scale = (place.max_abs() * m.max_abs()).powi(2);
        prop_assert!((d0 - d).abs() <= 1e-10 * scale, "{d0} vs {d}");
        prop_assert!((d1 - d0).abs() <= 1e-10 * scale, "{d1} vs {d0}");
    }

    #[test]
    fn measurement_reproduces_construction(g in geometry(), seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (a, c_angle, b) = s.sas(g).unwrap();
        let (t, _) = make_triangle_sas(g, a, c_angle, b).unwrap();
        prop_assert!((t.a - a).abs() <= 1e-10 * a.max(1.0));
        prop_assert!((t.b - b).abs() <= 1e-10 * b.max(1.0));
        prop_assert!((t.C - c_angle).abs() <= 1e-10 * c_angle.max(1.0));
    }
}
