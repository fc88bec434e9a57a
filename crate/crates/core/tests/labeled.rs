//! Labelled trigonometric functions against a truncated power-series oracle,
//! and their algebraic properties over random labels and arguments.

use cktrig::labeled::{arc_k, cos_k, half_period, sin_k, tan_k, versin_k};
use proptest::prelude::*;

/// Σ (−κ)ⁿ x²ⁿ/(2n)!, thirty terms.
fn series_cos(k: f64, x: f64) -> f64 {
    let (mut term, mut sum) = (1.0, 1.0);
    for n in 1..30 {
        let m = 2.0 * n as f64;
        term *= -k * x * x / ((m - 1.0) * m);
        sum += term;
    }
    sum
}

/// Σ (−κ)ⁿ x²ⁿ⁺¹/(2n+1)!, thirty terms.
fn series_sin(k: f64, x: f64) -> f64 {
    let (mut term, mut sum) = (x, x);
    for n in 1..30 {
        let m = 2.0 * n as f64;
        term *= -k * x * x / (m * (m + 1.0));
        sum += term;
    }
    sum
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}

// Values computed once from the series oracle above and frozen.
const COS_HYPERBOLIC_1: f64 = 1.5430806348152437;
const SIN_LABEL_MINUS4_HALF: f64 = 0.5876005968219007;
const VERSIN_HYPERBOLIC_1: f64 = 0.5430806348152437;

#[test]
fn oracle_reproduces_frozen_values() {
    assert!((series_cos(-1.0, 1.0) - COS_HYPERBOLIC_1).abs() < 1e-15);
    assert!((series_sin(-4.0, 0.5) - SIN_LABEL_MINUS4_HALF).abs() < 1e-15);
    assert!(((1.0 - series_cos(-1.0, 1.0)) / -1.0 - VERSIN_HYPERBOLIC_1).abs() < 1e-15);
}

#[test]
fn frozen_values() {
    assert!((cos_k(-1.0, 1.0) - COS_HYPERBOLIC_1).abs() < 1e-15);
    assert!((sin_k(-4.0, 0.5) - SIN_LABEL_MINUS4_HALF).abs() < 1e-15);
    assert!((sin_k(-4.0, 0.5) - 1f64.sinh() / 2.0).abs() < 1e-15);
    // (1 − cosh 1)/(−1) is positive
    assert!((versin_k(-1.0, 1.0) - VERSIN_HYPERBOLIC_1).abs() < 1e-15);
}

#[test]
fn series_agreement_on_a_grid() {
    for i in -8..=8 {
        let k = 0.5 * i as f64;
        for j in -6..=6 {
            let x = 0.5 * j as f64;
            assert!(close(cos_k(k, x), series_cos(k, x), 1e-13), "cos {k} {x}");
            assert!(close(sin_k(k, x), series_sin(k, x), 1e-13), "sin {k} {x}");
        }
    }
}

fn label() -> impl Strategy<Value = f64> {
    prop_oneof![1 => Just(0.0), 9 => -4.0..4.0f64]
}

fn arg() -> impl Strategy<Value = f64> {
    -3.0..3.0f64
}

proptest! {
    #[test]
    fn pythagorean(k in label(), x in arg()) {
        let (c, s) = (cos_k(k, x), sin_k(k, x));
        prop_assert!(close(c * c + k * s * s, 1.0, 1e-14 * 1f64.max(c * c)));
    }

    #[test]
    fn cosine_from_versine(k in label(), x in arg()) {
        let (c, v) = (cos_k(k, x), versin_k(k, x));
        prop_assert!((c - (1.0 - k * v)).abs() <= 1e-14 * 1f64.max(c.abs()));
    }

    #[test]
    fn addition(k in label(), x in arg(), y in arg()) {
        let (cx, sx, cy, sy) = (cos_k(k, x), sin_k(k, x), cos_k(k, y), sin_k(k, y));
        let scale = 1f64.max((cx * cy).abs()).max((k * sx * sy).abs()).max((sx * cy).abs()).max((cx * sy).abs());
        prop_assert!((cos_k(k, x + y) - (cx * cy - k * sx * sy)).abs() <= 1e-13 * scale);
        prop_assert!((cos_k(k, x - y) - (cx * cy + k * sx * sy)).abs() <= 1e-13 * scale);
        prop_assert!((sin_k(k, x + y) - (sx * cy + cx * sy)).abs() <= 1e-13 * scale);
        prop_assert!((sin_k(k, x - y) - (sx * cy - cx * sy)).abs() <= 1e-13 * scale);
        if let (Ok(tx), Ok(ty), Ok(txy)) = (tan_k(k, x), tan_k(k, y), tan_k(k, x + y)) {
            let den = 1.0 - k * tx * ty;
            if den.abs() > 1e-3 && txy.abs() < 1e6 {
                let sc = 1f64.max(txy.abs()).max(((tx + ty) / den).abs()) / den.abs().min(1.0);
                prop_assert!((txy - (tx + ty) / den).abs() <= 1e-11 * sc);
            }
        }
    }

    #[test]
    fn label_scaling(k in label(), x in arg(), lam in 0.1..3.0f64) {
        prop_assert!(close(cos_k(lam * lam * k, x), cos_k(k, lam * x), 1e-13));
        prop_assert!(close(lam * sin_k(lam * lam * k, x), sin_k(k, lam * x), 1e-13));
    }

    #[test]
    fn continuity_at_zero_label(x in arg(), sign in prop_oneof![Just(1.0), Just(-1.0)]) {
        let k = sign * 1e-6;
        prop_assert!((cos_k(k, x) - 1.0).abs() <= 1e-5);
        prop_assert!((sin_k(k, x) - x).abs() <= 1e-5);
    }

    #[test]
    fn arc_inverts_the_pair(k in label(), u in -0.999..0.999f64) {
        let x = if k > 0.0 { u * half_period(k) } else { 3.0 * u };
        let back = arc_k(k, cos_k(k, x), sin_k(k, x)).unwrap();
        prop_assert!((back - x).abs() <= 1e-9 * 1f64.max(x.abs()));
    }

    #[test]
    fn versine_derivative_is_sine(k in label(), x in arg()) {
        let h = 1e-4;
        let fd = (versin_k(k, x + h) - versin_k(k, x - h)) / (2.0 * h);
        let s = sin_k(k, x);
        prop_assert!((fd - s).abs() <= 1e-6 * 1f64.max(s.abs()).max(cos_k(k, x).abs()));
    }
}
