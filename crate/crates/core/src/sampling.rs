//! Deterministic random triangles and arguments for the verification suites.
//!
//! Parameter ranges scale with 1/√|κ| so that circular arguments stay inside
//! a half period and hyperbolic ones keep cosh of moderate size; data that
//! fail the existence conditions are redrawn.

#![allow(non_snake_case)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CkError, Result};
use crate::group::{make_triangle_sas, Geometry, Point};
use crate::labeled::half_period;
use crate::solver::solve_sas;
use crate::triangle::Triangle;

/// Redraw limit before a sampler gives up on a geometry.
pub const MAX_ATTEMPTS: usize = 10_000;

/// Largest parameter drawn under a zero label.
const FLAT_RANGE: f64 = 2.5;

/// Seeded source of samples; identical seeds give identical streams.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

/// Upper end of the range for a quantity carrying label `k`.
pub fn upper(k: f64) -> f64 {
    if k > 0.0 {
        (0.9 * half_period(k)).min(FLAT_RANGE)
    } else if k < 0.0 {
        (1.5 / (-k).sqrt()).min(FLAT_RANGE)
    } else {
        FLAT_RANGE
    }
}

/// Rejects nearly collapsed triangles: every side and angle must lie within
/// [hi/50, 4·hi] of the range for its label.  Without this a zero label
/// admits slivers with one side ~1e-3 and angles in the thousands, where the
/// identities lose digits to conditioning rather than to any error.
pub fn well_conditioned(t: &Triangle) -> bool {
    let (h1, h2) = (upper(t.geom.k1), upper(t.geom.k2));
    t.sides().iter().all(|&s| s >= 0.02 * h1 && s <= 4.0 * h1)
        && t.angles().iter().all(|&s| s >= 0.02 * h2 && s <= 4.0 * h2)
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    /// Positive quantity with label `k`, drawn from [hi/20, hi] with hi = upper(k).
    pub fn quantity(&mut self, k: f64) -> f64 {
        let hi = upper(k);
        self.uniform(0.05 * hi, hi)
    }

    /// Labels drawn uniformly from [−bound, bound]².
    pub fn geometry(&mut self, bound: f64) -> Geometry {
        Geometry::new(self.uniform(-bound, bound), self.uniform(-bound, bound))
    }

    /// Side–angle–side data (a, C, b) yielding a valid first-kind triangle.
    pub fn sas(&mut self, g: Geometry) -> Result<(f64, f64, f64)> {
        for _ in 0..MAX_ATTEMPTS {
            let (a, b) = (self.quantity(g.k1), self.quantity(g.k1));
            let C = self.quantity(g.k2);
            if solve_sas(g, a, b, C).is_ok_and(|t| well_conditioned(&t)) {
                return Ok((a, C, b));
            }
        }
        Err(CkError::Existence(format!("no valid triangle found for ({}, {})", g.k1, g.k2)))
    }

    /// A solved triangle with random valid data.
    pub fn triangle(&mut self, g: Geometry) -> Result<Triangle> {
        let (a, C, b) = self.sas(g)?;
        solve_sas(g, a, b, C)
    }

    /// A triangle built and measured entirely through the matrix group.
    pub fn oracle_triangle(&mut self, g: Geometry) -> Result<((f64, f64, f64), Triangle, [Point; 3])> {
        for _ in 0..MAX_ATTEMPTS {
            let data = self.sas(g)?;
            if let Ok((t, pts)) = make_triangle_sas(g, data.0, data.1, data.2) {
                return Ok((data, t, pts));
            }
        }
        Err(CkError::Existence(format!("no measurable triangle for ({}, {})", g.k1, g.k2)))
    }
}
