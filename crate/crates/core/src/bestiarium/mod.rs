//! Registry of named trigonometric identities, checked numerically.
//!
//! Triangle identities are evaluated on a [`Triangle`] through the signed
//! compact notation; the appendix identities are evaluated on raw labelled
//! arguments.  Identities are data: each record carries an evaluator, so the
//! registry can be counted, listed and run as a suite.

mod appendix;
mod context;
mod records;

use std::sync::OnceLock;

use serde::Serialize;

pub use appendix::{triple_residual, APPENDIX_POLE};
pub use context::{radical, Ctx, POLE_SKIP};

use crate::error::{CkError, Result};
use crate::group::{make_triangle_sas, Geometry};
use crate::sampling::Sampler;
use crate::triangle::Triangle;

type PairFn = fn(&Ctx, usize, usize, usize) -> Result<(f64, f64)>;

/// Identity families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Cosine,
    DualCosine,
    Sine,
    Projection,
    Selfdual4,
    Euler,
    Delambre,
    Napier,
    Cagnoli,
    Lhuillier,
    AreaCatalog,
    Minimal,
    Appendix,
}

/// Zero labels under which an identity collapses to a triviality such as 1 = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    Never,
    K1Zero,
    K2Zero,
    /// Trivial whenever either label vanishes.
    AnyZero,
}

impl Degeneracy {
    pub fn dual(self) -> Self {
        match self {
            Degeneracy::K1Zero => Degeneracy::K2Zero,
            Degeneracy::K2Zero => Degeneracy::K1Zero,
            other => other,
        }
    }

    pub fn applies(self, g: Geometry) -> bool {
        match self {
            Degeneracy::Never => false,
            Degeneracy::K1Zero => g.k1 == 0.0,
            Degeneracy::K2Zero => g.k2 == 0.0,
            Degeneracy::AnyZero => g.k1 == 0.0 || g.k2 == 0.0,
        }
    }
}

/// Whether a record takes a triangle or raw labelled arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Arity {
    Triangle,
    Raw,
}

#[derive(Clone)]
enum Evaluator {
    Triangle { orders: Vec<[usize; 3]>, f: PairFn, on_dual: bool },
    Raw(appendix::RawFn),
}

/// One named identity.
#[derive(Clone)]
pub struct IdentityRecord {
    pub id: String,
    pub family: Family,
    pub description: String,
    pub degenerate: Degeneracy,
    /// Id of the dual record; equal to `id` for self-dual identities.
    pub dual: Option<String>,
    eval: Evaluator,
}

impl std::fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("family", &self.family)
            .field("arity", &self.arity())
            .finish()
    }
}

impl IdentityRecord {
    #[allow(clippy::too_many_arguments)]
    fn triangle(
        id: &str,
        family: Family,
        description: &str,
        degenerate: Degeneracy,
        orders: Vec<[usize; 3]>,
        f: PairFn,
        on_dual: bool,
        dual: Option<&str>,
    ) -> Self {
        IdentityRecord {
            id: id.to_string(),
            family,
            description: description.to_string(),
            degenerate,
            dual: dual.map(str::to_string),
            eval: Evaluator::Triangle { orders, f, on_dual },
        }
    }

    fn raw(id: &str, description: &str, degenerate: Degeneracy, f: appendix::RawFn) -> Self {
        IdentityRecord {
            id: id.to_string(),
            family: Family::Appendix,
            description: description.to_string(),
            degenerate,
            dual: None,
            eval: Evaluator::Raw(f),
        }
    }

    pub fn arity(&self) -> Arity {
        match self.eval {
            Evaluator::Triangle { .. } => Arity::Triangle,
            Evaluator::Raw(_) => Arity::Raw,
        }
    }

    /// Largest relative residual over the index orderings of the record.
    fn eval_ctx(&self, ctx: &Ctx) -> Result<f64> {
        let Evaluator::Triangle { orders, f, on_dual } = &self.eval else {
            return Err(CkError::UnknownIdentity(format!("{} takes raw arguments", self.id)));
        };
        let c = if *on_dual { ctx.dual() } else { *ctx };
        let mut worst: f64 = 0.0;
        for &[i, j, k] in orders {
            let (l, r) = f(&c, i, j, k)?;
            worst = worst.max(relative(l, r));
        }
        Ok(worst)
    }

    fn eval_raw(&self, k: f64, args: [f64; 3]) -> Result<f64> {
        let Evaluator::Raw(f) = &self.eval else {
            return Err(CkError::UnknownIdentity(format!("{} takes a triangle", self.id)));
        };
        Ok(f(k, args)?.into_iter().map(triple_residual).fold(0.0, f64::max))
    }
}

/// |l − r| / max(1, |l|, |r|); NaN when either side is not finite.
pub fn relative(l: f64, r: f64) -> f64 {
    if !(l.is_finite() && r.is_finite()) {
        return f64::NAN;
    }
    let d = (l - r).abs();
    if d == 0.0 {
        0.0
    } else {
        d / 1f64.max(l.abs()).max(r.abs())
    }
}

/// The immutable registry: triangle identities first, then the appendix.
pub fn registry() -> &'static [IdentityRecord] {
    static REG: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut v = records::triangle_records();
        v.extend(appendix::appendix_records());
        v
    })
}

pub fn find(id: &str) -> Result<&'static IdentityRecord> {
    registry()
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| CkError::UnknownIdentity(id.to_string()))
}

/// Relative residual of a triangle identity.  Tangent poles surface as
/// `PoleError`.
pub fn check(id: &str, t: &Triangle) -> Result<f64> {
    find(id)?.eval_ctx(&Ctx::new(t))
}

/// Relative residual of an appendix identity at label `k` and arguments
/// `args` (unused trailing arguments are ignored).
pub fn check_appendix(id: &str, k: f64, args: &[f64]) -> Result<f64> {
    let rec = find(id)?;
    let mut a = [0.0; 3];
    for (slot, v) in a.iter_mut().zip(args) {
        *slot = *v;
    }
    rec.eval_raw(k, a)
}

/// Outcome of one identity over a sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    /// Passed, but the identity reduces to a triviality at this geometry.
    DegeneratePass,
    Fail,
    /// Every sample hit a pole.
    Skipped,
}

/// Per-identity result of a suite run.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub family: Family,
    pub samples: usize,
    pub skipped: usize,
    pub max_residual: f64,
    /// Input at which the largest residual occurred: the triangle record
    /// (k1, k2, a, b, c, A, B, C) or the raw draw (κ, x, y, z).
    pub argmax: Option<Vec<f64>>,
    pub status: Status,
}

/// Results of a whole suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub k1: Option<f64>,
    pub k2: Option<f64>,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub identities: Vec<IdentityReport>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.identities.iter().all(|r| r.status != Status::Fail)
    }

    pub fn max_residual(&self) -> f64 {
        self.identities.iter().map(|r| r.max_residual).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> Vec<&IdentityReport> {
        self.identities.iter().filter(|r| r.status == Status::Fail).collect()
    }
}

struct Accumulator {
    samples: usize,
    skipped: usize,
    max: f64,
    argmax: Option<Vec<f64>>,
    bad: bool,
}

impl Accumulator {
    fn new() -> Self {
        Accumulator { samples: 0, skipped: 0, max: 0.0, argmax: None, bad: false }
    }

    fn push(&mut self, r: Result<f64>, input: impl FnOnce() -> Vec<f64>, tol: f64) {
        match r {
            Ok(v) => {
                self.samples += 1;
                if !(v <= tol) {
                    self.bad = true;
                }
                if v > self.max || (v.is_nan() && !self.max.is_nan()) || self.argmax.is_none() {
                    self.max = if v.is_nan() { f64::NAN } else { v.max(self.max) };
                    self.argmax = Some(input());
                }
            }
            Err(_) => self.skipped += 1,
        }
    }

    fn finish(self, rec: &IdentityRecord, degenerate: bool) -> IdentityReport {
        let status = if self.bad {
            Status::Fail
        } else if self.samples == 0 {
            Status::Skipped
        } else if degenerate {
            Status::DegeneratePass
        } else {
            Status::Pass
        };
        IdentityReport {
            identity_id: rec.id.clone(),
            family: rec.family,
            samples: self.samples,
            skipped: self.skipped,
            max_residual: self.max,
            argmax: self.argmax,
            status,
        }
    }
}

fn record_vec(t: &Triangle) -> Vec<f64> {
    let r = t.to_record();
    vec![r.k1, r.k2, r.a, r.b, r.c, r.A, r.B, r.C]
}

/// Triangles for a suite: random side–angle–side data realised and measured
/// in the matrix group.
pub fn sample_triangles(g: Geometry, n: usize, seed: u64) -> Result<Vec<Triangle>> {
    let mut s = Sampler::new(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let (a, c_angle, b) = s.sas(g)?;
        if let Ok((t, _)) = make_triangle_sas(g, a, c_angle, b) {
            out.push(t);
        }
    }
    Ok(out)
}

/// Run every triangle identity over `n` sampled triangles of `g`, and every
/// appendix identity over `n` raw draws whose label is one of the labels of
/// `g` (κ₁, κ₂, κ₁κ₂, κ₁²κ₂, κ₁κ₂²).
pub fn run_suite(g: Geometry, n: usize, seed: u64, tol: f64) -> SuiteReport {
    let mut ids = run_triangle_records(g, n, seed, tol);
    let labels = [g.k1, g.k2, g.k1 * g.k2, g.area_label(), g.coarea_label()];
    let mut s = Sampler::new(seed ^ 0x5eed);
    let draws: Vec<(f64, [f64; 3])> = (0..n)
        .map(|_| {
            let k = labels[s.index(labels.len())];
            (k, [s.uniform(-3.0, 3.0), s.uniform(-3.0, 3.0), s.uniform(-3.0, 3.0)])
        })
        .collect();
    ids.extend(run_raw(&draws, tol));
    SuiteReport { k1: Some(g.k1), k2: Some(g.k2), samples: n, seed, tol, identities: ids }
}

/// The triangle part of [`run_suite`].
pub fn run_triangle_records(g: Geometry, n: usize, seed: u64, tol: f64) -> Vec<IdentityReport> {
    let tris = sample_triangles(g, n, seed).unwrap_or_default();
    let ctxs: Vec<Ctx> = tris.iter().map(Ctx::new).collect();
    registry()
        .iter()
        .filter(|r| r.arity() == Arity::Triangle)
        .map(|rec| {
            let mut acc = Accumulator::new();
            for (t, c) in tris.iter().zip(&ctxs) {
                acc.push(rec.eval_ctx(c), || record_vec(t), tol);
            }
            acc.finish(rec, rec.degenerate.applies(g))
        })
        .collect()
}

/// Appendix identities over `n` draws with κ uniform in [−κ_max, κ_max]
/// (one draw in twenty exactly κ = 0) and arguments uniform in
/// [−x_max, x_max].
pub fn run_appendix(n: usize, seed: u64, tol: f64, k_max: f64, x_max: f64) -> SuiteReport {
    let mut s = Sampler::new(seed);
    let draws: Vec<(f64, [f64; 3])> = (0..n)
        .map(|_| {
            let k = if s.index(20) == 0 { 0.0 } else { s.uniform(-k_max, k_max) };
            (k, [s.uniform(-x_max, x_max), s.uniform(-x_max, x_max), s.uniform(-x_max, x_max)])
        })
        .collect();
    SuiteReport { k1: None, k2: None, samples: n, seed, tol, identities: run_raw(&draws, tol) }
}

fn run_raw(draws: &[(f64, [f64; 3])], tol: f64) -> Vec<IdentityReport> {
    registry()
        .iter()
        .filter(|r| r.arity() == Arity::Raw)
        .map(|rec| {
            let mut acc = Accumulator::new();
            for &(k, a) in draws {
                acc.push(rec.eval_raw(k, a), || vec![k, a[0], a[1], a[2]], tol);
            }
            acc.finish(rec, false)
        })
        .collect()
}

/// Number of records per family.
pub fn family_counts() -> Vec<(Family, usize)> {
    let mut out: Vec<(Family, usize)> = Vec::new();
    for r in registry() {
        match out.iter_mut().find(|(f, _)| *f == r.family) {
            Some((_, n)) => *n += 1,
            None => out.push((r.family, 1)),
        }
    }
    out
}

/// The radicands −(S₁(e)/κ₂)ΠS₁(e_i) and its dual, which must be
/// non-negative for a triangle to exist.
pub fn double_euler_radicands(t: &Triangle) -> (f64, f64) {
    let c = Ctx::new(t);
    (c.side_radicand(), c.angle_radicand())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_unique() {
        let mut seen = HashSet::new();
        for r in registry() {
            assert!(seen.insert(r.id.as_str()), "duplicate id {}", r.id);
        }
    }

    #[test]
    fn duals_resolve() {
        for r in registry() {
            if let Some(d) = &r.dual {
                let back = find(d).unwrap();
                assert_eq!(back.dual.as_deref(), Some(r.id.as_str()));
            }
        }
    }

    #[test]
    fn unknown_identity() {
        let t = crate::solver::solve_sas(Geometry::SPHERE, 1.0, 1.0, 1.0).unwrap();
        assert!(matches!(check("no_such", &t), Err(CkError::UnknownIdentity(_))));
        assert!(matches!(check("pythagorean", &t), Err(CkError::UnknownIdentity(_))));
    }
}
