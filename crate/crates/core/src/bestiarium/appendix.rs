//! Identities of the labelled functions themselves, checked on raw arguments.
//!
//! Each evaluator returns (lhs, rhs, scale) triples.  The scale is the sum of
//! the magnitudes of the terms that are added or cancelled on either side, so
//! that the residual measures rounding relative to the numbers actually
//! combined rather than to a result that may have cancelled to nearly zero.

use super::{Degeneracy, Family, IdentityRecord};
use crate::error::Result;
use crate::labeled::{cos_k, sin_k, tan_k_tol, versin_k};

/// Cosine threshold for skipping tangent identities on raw arguments.
pub const APPENDIX_POLE: f64 = 1e-3;

pub type Triple = (f64, f64, f64);
pub(super) type RawFn = fn(f64, [f64; 3]) -> Result<Vec<Triple>>;

struct F {
    k: f64,
}

impl F {
    fn c(&self, x: f64) -> f64 {
        cos_k(self.k, x)
    }
    fn s(&self, x: f64) -> f64 {
        sin_k(self.k, x)
    }
    fn v(&self, x: f64) -> f64 {
        versin_k(self.k, x)
    }
    fn t(&self, x: f64) -> Result<f64> {
        tan_k_tol(self.k, x, APPENDIX_POLE)
    }
}

fn abs_sum(v: &[f64]) -> f64 {
    v.iter().map(|x| x.abs()).sum()
}

/// Three-argument identities of the form f(x ± y) ± g(z) = rhs(p).
fn three(id: &str, description: &str, f: RawFn) -> IdentityRecord {
    IdentityRecord::raw(id, description, Degeneracy::Never, f)
}

pub(super) fn appendix_records() -> Vec<IdentityRecord> {
    use Degeneracy::*;
    let r = |id: &str, d: &str, g: Degeneracy, f: RawFn| IdentityRecord::raw(id, d, g, f);
    let _ = Family::Appendix;
    vec![
        r("pythagorean", "C² + κS² = 1", Never, |k, [x, ..]| {
            let f = F { k };
            let (c, s) = (f.c(x), f.s(x));
            Ok(vec![(c * c + k * s * s, 1.0, c * c + (k * s * s).abs())])
        }),
        r("cosine_versine", "C = 1 − κV", Never, |k, [x, ..]| {
            let f = F { k };
            let kv = k * f.v(x);
            Ok(vec![(f.c(x), 1.0 - kv, 1.0 + kv.abs())])
        }),
        r("cosine_double", "double-argument cosine", Never, |k, [x, ..]| {
            let f = F { k };
            let (c, s) = (f.c(x), f.s(x));
            Ok(vec![(f.c(2.0 * x), c * c - k * s * s, c * c + (k * s * s).abs())])
        }),
        r("sine_double", "double-argument sine", Never, |k, [x, ..]| {
            let f = F { k };
            let v = 2.0 * f.s(x) * f.c(x);
            Ok(vec![(f.s(2.0 * x), v, v.abs())])
        }),
        r("cosine_half", "half-argument cosine", Never, |k, [x, ..]| {
            let f = F { k };
            let c = f.c(x);
            Ok(vec![(f.c(0.5 * x).powi(2), 0.5 * (c + 1.0), 0.5 * (c.abs() + 1.0))])
        }),
        r("sine_half", "half-argument sine", Never, |k, [x, ..]| {
            let f = F { k };
            let l = f.s(0.5 * x).powi(2);
            let mut out = vec![(l, 0.5 * f.v(x), 0.0)];
            if k != 0.0 {
                let c = f.c(x);
                out.push((l, (1.0 - c) / (2.0 * k), (1.0 + c.abs()) / (2.0 * k.abs())));
            }
            Ok(out)
        }),
        r("tangent_half", "half-argument tangent", Never, |k, [x, ..]| {
            let f = F { k };
            let l = f.t(0.5 * x)?;
            let (c, s) = (f.c(x), f.s(x));
            // 1 + C(x) = 2C(x/2)² cancels near the pole; both quotients
            // inherit its relative error
            let cond = (1.0 + c.abs()) / (1.0 + c).abs() * (1.0 + k.abs().sqrt() * x.abs());
            let mut out = vec![(l, s / (c + 1.0), l.abs() * cond)];
            let ks = k * s;
            if ks.abs() > APPENDIX_POLE {
                out.push((l, (1.0 - c) / ks, l.abs() * cond + (1.0 + c.abs()) / ks.abs()));
            }
            Ok(out)
        }),
        r("cosine_addition", "cosine of a sum and a difference", Never, |k, [x, y, _]| {
            let f = F { k };
            let (cc, ss) = (f.c(x) * f.c(y), k * f.s(x) * f.s(y));
            let sc = cc.abs() + ss.abs();
            Ok(vec![(f.c(x + y), cc - ss, sc), (f.c(x - y), cc + ss, sc)])
        }),
        r("sine_addition", "sine of a sum and a difference", Never, |k, [x, y, _]| {
            let f = F { k };
            let (a, b) = (f.s(x) * f.c(y), f.s(y) * f.c(x));
            let sc = a.abs() + b.abs();
            Ok(vec![(f.s(x + y), a + b, sc), (f.s(x - y), a - b, sc)])
        }),
        r("versine_addition", "versine of a sum and a difference", Never, |k, [x, y, _]| {
            let f = F { k };
            let (vx, vy, ss) = (f.v(x), f.v(y), f.s(x) * f.s(y));
            let kvv = k * vx * vy;
            let sc = abs_sum(&[vx, vy, kvv, ss]);
            Ok(vec![(f.v(x + y), vx + vy - kvv + ss, sc), (f.v(x - y), vx + vy - kvv - ss, sc)])
        }),
        r("tangent_addition", "tangent of a sum and a difference", Never, |k, [x, y, _]| {
            let f = F { k };
            let (tx, ty) = (f.t(x)?, f.t(y)?);
            let (lp, lm) = (f.t(x + y)?, f.t(x - y)?);
            let ktt = k * tx * ty;
            let mut out = Vec::with_capacity(2);
            for (l, num, den) in [(lp, tx + ty, 1.0 - ktt), (lm, tx - ty, 1.0 + ktt)] {
                let r = num / den;
                out.push((l, r, (tx.abs() + ty.abs()) * (1.0 + ktt.abs()) / (den * den)));
            }
            Ok(out)
        }),
        r("cosine_sum_product", "sum of cosines as a product", Never, |k, [x, y, _]| {
            let f = F { k };
            let (cx, cy) = (f.c(x), f.c(y));
            Ok(vec![(cx + cy, 2.0 * f.c(0.5 * (x + y)) * f.c(0.5 * (x - y)), cx.abs() + cy.abs())])
        }),
        r("cosine_difference_product", "difference of cosines as a product", Never, |k, [x, y, _]| {
            let f = F { k };
            let (cx, cy) = (f.c(x), f.c(y));
            Ok(vec![(cx - cy, -2.0 * k * f.s(0.5 * (x + y)) * f.s(0.5 * (x - y)), cx.abs() + cy.abs())])
        }),
        r("sine_sum_product", "sum and difference of sines as products", Never, |k, [x, y, _]| {
            let f = F { k };
            let (sx, sy) = (f.s(x), f.s(y));
            let sc = sx.abs() + sy.abs();
            Ok(vec![
                (sx + sy, 2.0 * f.s(0.5 * (x + y)) * f.c(0.5 * (x - y)), sc),
                (sx - sy, 2.0 * f.s(0.5 * (x - y)) * f.c(0.5 * (x + y)), sc),
            ])
        }),
        r("versine_sum_product", "sum of versines", Never, |k, [x, y, _]| {
            let f = F { k };
            let (vp, vm) = (f.v(0.5 * (x + y)), f.v(0.5 * (x - y)));
            let (vx, vy) = (f.v(x), f.v(y));
            let kvv = k * vp * vm;
            Ok(vec![(vx + vy, 2.0 * (vp + vm - kvv), vx.abs() + vy.abs() + 2.0 * abs_sum(&[vp, vm, kvv]))])
        }),
        r("versine_difference_product", "difference of versines as a product", Never, |k, [x, y, _]| {
            let f = F { k };
            let (vx, vy) = (f.v(x), f.v(y));
            Ok(vec![(vx - vy, 2.0 * f.s(0.5 * (x + y)) * f.s(0.5 * (x - y)), vx.abs() + vy.abs())])
        }),
        three("cosine_sum_plus", "C(x+y) + C(z) through the half sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let (a, b) = (f.c(x + y), f.c(z));
            Ok(vec![(a + b, 2.0 * f.c(p) * f.c(p - z), a.abs() + b.abs())])
        }),
        three("cosine_diff_plus", "C(x−y) + C(z) through the half sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let (a, b) = (f.c(x - y), f.c(z));
            Ok(vec![(a + b, 2.0 * f.c(p - x) * f.c(p - y), a.abs() + b.abs())])
        }),
        three("cosine_sum_minus", "C(x+y) − C(z) through the half sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let (a, b) = (f.c(x + y), f.c(z));
            Ok(vec![(a - b, -2.0 * k * f.s(p) * f.s(p - z), a.abs() + b.abs())])
        }),
        three("cosine_diff_minus", "C(x−y) − C(z) through the half sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let (a, b) = (f.c(x - y), f.c(z));
            Ok(vec![(a - b, 2.0 * k * f.s(p - x) * f.s(p - y), a.abs() + b.abs())])
        }),
        three("sine_sum_plus", "S(x+y) + S(z) through the half sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let (a, b) = (f.s(x + y), f.s(z));
            Ok(vec![(a + b, 2.0 * f.s(p) * f.c(p - z), a.abs() + b.abs())])
        }),
        three("sine_diff_plus", "S(x−y) + S(z) through the half sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let (a, b) = (f.s(x - y), f.s(z));
            Ok(vec![(a + b, 2.0 * f.s(p - y) * f.c(p - x), a.abs() + b.abs())])
        }),
        three("sine_sum_minus", "S(x+y) − S(z) through the half sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let (a, b) = (f.s(x + y), f.s(z));
            Ok(vec![(a - b, 2.0 * f.s(p - z) * f.c(p), a.abs() + b.abs())])
        }),
        three("sine_diff_minus", "S(x−y) − S(z) through the half sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let (a, b) = (f.s(x - y), f.s(z));
            Ok(vec![(a - b, -2.0 * f.s(p - x) * f.c(p - y), a.abs() + b.abs())])
        }),
        three("versine_sum_plus", "V(x+y) + V(z) through the half sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let (a, b) = (f.v(x + y), f.v(z));
            let (u, w) = (f.v(p), f.v(p - z));
            let kuw = k * u * w;
            Ok(vec![(a + b, 2.0 * (u + w - kuw), a.abs() + b.abs() + 2.0 * abs_sum(&[u, w, kuw]))])
        }),
        three("versine_diff_plus", "V(x−y) + V(z) through the half sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let (a, b) = (f.v(x - y), f.v(z));
            let (u, w) = (f.v(p - x), f.v(p - y));
            let kuw = k * u * w;
            Ok(vec![(a + b, 2.0 * (u + w - kuw), a.abs() + b.abs() + 2.0 * abs_sum(&[u, w, kuw]))])
        }),
        three("versine_sum_minus", "V(x+y) − V(z) through the half sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let (a, b) = (f.v(x + y), f.v(z));
            Ok(vec![(a - b, 2.0 * f.s(p) * f.s(p - z), a.abs() + b.abs())])
        }),
        three("versine_diff_minus", "V(x−y) − V(z) through the half sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let (a, b) = (f.v(x - y), f.v(z));
            Ok(vec![(a - b, -2.0 * f.s(p - x) * f.s(p - y), a.abs() + b.abs())])
        }),
        three("cosine_sine_split_1", "C(x)S(y) split through the half sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let (u, w) = (f.c(p) * f.s(p - z), f.s(p - x) * f.c(p - y));
            Ok(vec![(f.c(x) * f.s(y), u + w, u.abs() + w.abs())])
        }),
        three("cosine_sine_split_2", "C(x)S(y) split the other way", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let (u, w) = (f.s(p) * f.c(p - z), f.c(p - x) * f.s(p - y));
            Ok(vec![(f.c(x) * f.s(y), u - w, u.abs() + w.abs())])
        }),
        three("sine_product_split", "S(x)S(y) split through the half sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let (u, w) = (f.s(p) * f.s(p - z), f.s(p - x) * f.s(p - y));
            Ok(vec![(f.s(x) * f.s(y), u + w, u.abs() + w.abs())])
        }),
        three("kappa_sine_product_split", "κS(x)S(y) split into cosines", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let (u, w) = (f.c(p) * f.c(p - z), f.c(p - x) * f.c(p - y));
            Ok(vec![(k * f.s(x) * f.s(y), w - u, u.abs() + w.abs())])
        }),
        three("half_cosine_product_minus", "half-argument cosine product minus the cosine sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let q = 4.0 * f.c(0.5 * x) * f.c(0.5 * y) * f.c(0.5 * z);
            let s = 1.0 + f.c(x) + f.c(y) + f.c(z);
            let r = 8.0 * k * k * f.s(0.5 * p) * f.s(0.5 * (p - x)) * f.s(0.5 * (p - y)) * f.s(0.5 * (p - z));
            Ok(vec![(q - s, r, q.abs() + 1.0 + f.c(x).abs() + f.c(y).abs() + f.c(z).abs())])
        }),
        three("half_cosine_product_plus", "half-argument cosine product plus the cosine sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let q = 4.0 * f.c(0.5 * x) * f.c(0.5 * y) * f.c(0.5 * z);
            let s = 1.0 + f.c(x) + f.c(y) + f.c(z);
            let r = 8.0 * f.c(0.5 * p) * f.c(0.5 * (p - x)) * f.c(0.5 * (p - y)) * f.c(0.5 * (p - z));
            Ok(vec![(q + s, r, q.abs() + 1.0 + f.c(x).abs() + f.c(y).abs() + f.c(z).abs())])
        }),
        three("sine_quadruple_product", "product of four sines of the half sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let l = 4.0 * k * k * f.s(p) * f.s(p - x) * f.s(p - y) * f.s(p - z);
            let (cx, cy, cz) = (f.c(x), f.c(y), f.c(z));
            let h = 16.0 * (f.c(0.5 * x) * f.c(0.5 * y) * f.c(0.5 * z)).powi(2);
            let s = 1.0 + cx + cy + cz;
            let squares = cx * cx + cy * cy + cz * cz;
            let prod = 2.0 * cx * cy * cz;
            Ok(vec![
                (l, h - s * s, h + s * s),
                (l, 1.0 - squares + prod, 1.0 + squares + prod.abs()),
            ])
        }),
        three("cosine_quadruple_product", "product of four cosines of the half sum", |k, [x, y, z]| {
            let (f, p) = (F { k }, 0.5 * (x + y + z));
            let l = 4.0 * f.c(p) * f.c(p - x) * f.c(p - y) * f.c(p - z);
            let (cx, cy, cz) = (f.c(x), f.c(y), f.c(z));
            let squares = cx * cx + cy * cy + cz * cz;
            let prod = 2.0 * cx * cy * cz;
            Ok(vec![(l, -1.0 + squares + prod, 1.0 + squares + prod.abs())])
        }),
    ]
}

/// Residual of one triple, normalised by max(1, |lhs|, |rhs|, scale).
pub fn triple_residual((l, r, s): Triple) -> f64 {
    let d = (l - r).abs();
    if d == 0.0 {
        return 0.0;
    }
    d / 1f64.max(l.abs()).max(r.abs()).max(s)
}
