//! The subcommands.  Each builds a serialisable record; a command that fails
//! after producing a meaningful record (a partial solution, a failed
//! verification) returns both.

#![allow(non_snake_case)]

use serde::Serialize;
use serde_json::Value;

use cktrig::bestiarium::{self, SuiteReport};
use cktrig::kinematics::{self, eval_table4, spacetime_name, twin_defect, SpacetimeUnits, Table4};
use cktrig::loops::{basic_identity_residual, holonomy_angle, line_loop_residual, point_loop_residual, Side, Vertex};
use cktrig::orthogonal::{self, OrthoKnown, OrthoTriangle};
use cktrig::solver::{solve_aaa, solve_sas, solve_sss};
use cktrig::tables::{self, TableSummary};
use cktrig::triangle::zero_excess_tol;
use cktrig::{CkError, Excesses, Geometry, SignedView, Triangle, TriangleRecord};

use crate::args::{parse_given, GeometryArgs, Resolved, RunArgs, Suite};
use crate::error::{CliError, CliResult};

/// A record for stdout plus an optional failure deciding the exit code.
pub struct Outcome {
    pub record: Value,
    pub failure: Option<CliError>,
}

impl Outcome {
    fn ok<T: Serialize>(record: &T) -> CliResult<Outcome> {
        Ok(Outcome { record: to_value(record)?, failure: None })
    }

    fn with<T: Serialize>(record: &T, failure: Option<CliError>) -> CliResult<Outcome> {
        Ok(Outcome { record: to_value(record)?, failure })
    }
}

fn to_value<T: Serialize>(v: &T) -> CliResult<Value> {
    serde_json::to_value(v).map_err(|e| CliError::Parse(format!("serialisation failed: {e}")))
}

const TRIANGLE_NAMES: [&str; 6] = ["a", "b", "c", "A", "B", "C"];

#[derive(Debug, Serialize)]
pub struct GeometryInfo {
    pub k1: f64,
    pub k2: f64,
    pub name: Option<&'static str>,
    pub spacetime: Option<&'static str>,
}

impl GeometryInfo {
    fn of(g: Geometry) -> Self {
        GeometryInfo { k1: g.k1, k2: g.k2, name: g.name(), spacetime: spacetime_name(g) }
    }
}

#[derive(Debug, Serialize)]
pub struct UnitsInfo {
    /// `null` for an infinite scale.
    pub tau: Option<f64>,
    pub c: Option<f64>,
    pub sign: i8,
}

impl UnitsInfo {
    fn of(u: &SpacetimeUnits) -> Self {
        UnitsInfo { tau: u.tau.value(), c: u.c.value(), sign: u.curvature_sign }
    }
}

#[derive(Debug, Serialize)]
pub struct Sides {
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub c: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct Angles {
    pub A: Option<f64>,
    pub B: Option<f64>,
    pub C: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct Existence {
    pub holds: bool,
    pub inner_angle_a: Option<f64>,
}

/// Output of `solve`: a full solution, or the quantities that are fixed
/// together with the relation the data leave open.
#[derive(Debug, Serialize)]
pub struct SolveRecord {
    pub geometry: GeometryInfo,
    pub units: Option<UnitsInfo>,
    pub status: &'static str,
    pub sides: Sides,
    pub angles: Angles,
    pub signed: Option<SignedView>,
    pub excesses: Option<Excesses>,
    pub area: Option<f64>,
    pub coarea: Option<f64>,
    pub existence: Option<Existence>,
    pub constraint: Option<String>,
}

impl SolveRecord {
    fn solved(r: &Resolved, t: &Triangle) -> Self {
        SolveRecord {
            geometry: GeometryInfo::of(r.geom),
            units: r.units.as_ref().map(UnitsInfo::of),
            status: "solved",
            sides: Sides { a: Some(t.a), b: Some(t.b), c: Some(t.c) },
            angles: Angles { A: Some(t.A), B: Some(t.B), C: Some(t.C) },
            signed: Some(t.signed()),
            excesses: Some(t.excesses()),
            area: Some(t.area()),
            coarea: Some(t.coarea()),
            existence: Some(Existence { holds: t.existence_holds(), inner_angle_a: t.inner_angle_a() }),
            constraint: None,
        }
    }

    fn partial(r: &Resolved, v: &[Option<f64>; 6], constraint: String) -> Self {
        SolveRecord {
            geometry: GeometryInfo::of(r.geom),
            units: r.units.as_ref().map(UnitsInfo::of),
            status: "partial",
            sides: Sides { a: v[0], b: v[1], c: v[2] },
            angles: Angles { A: v[3], B: v[4], C: v[5] },
            signed: None,
            excesses: None,
            area: None,
            coarea: None,
            existence: None,
            constraint: Some(constraint),
        }
    }
}

enum Solution {
    Full(Triangle),
    Partial([Option<f64>; 6], String),
}

/// Fill what a vanishing label fixes: a = b + c when κ₂ = 0 and A = B + C
/// when κ₁ = 0.
fn complete_linear(g: Geometry, v: &mut [Option<f64>; 6]) {
    let mut fill = |base: usize| {
        match (v[base], v[base + 1], v[base + 2]) {
            (None, Some(y), Some(z)) => v[base] = Some(y + z),
            (Some(x), None, Some(z)) => v[base + 1] = Some(x - z),
            (Some(x), Some(y), None) => v[base + 2] = Some(x - y),
            _ => {}
        };
    };
    if g.k2 == 0.0 {
        fill(0);
    }
    if g.k1 == 0.0 {
        fill(3);
    }
}

fn solve_data(g: Geometry, text: &str) -> CliResult<Solution> {
    let given = parse_given(text, &TRIANGLE_NAMES)?;
    let mut v = [None; 6];
    for (n, x) in &given {
        let i = TRIANGLE_NAMES.iter().position(|m| m == n).expect("names are filtered");
        v[i] = Some(*x);
    }
    let partial = |mut v: [Option<f64>; 6], constraint: String| {
        let known = v.iter().flatten().count();
        complete_linear(g, &mut v);
        let constraint = if v.iter().flatten().count() > known {
            format!("the vanishing label fixes the third side or angle linearly; {constraint}")
        } else {
            constraint
        };
        Ok(Solution::Partial(v, constraint))
    };
    let result = match v {
        [Some(a), Some(b), Some(c), Some(A), Some(B), Some(C)] => Triangle::new(g, a, b, c, A, B, C),
        [Some(a), Some(b), None, None, None, Some(C)] => solve_sas(g, a, b, C),
        [None, None, Some(c), Some(A), Some(B), None] => solve_sas(g.dual(), A, B, c).map(|t| t.dualize()),
        [Some(a), Some(b), Some(c), None, None, None] => solve_sss(g, a, b, c),
        [None, None, None, Some(A), Some(B), Some(C)] => solve_aaa(g, A, B, C),
        _ if given.len() < 3 => {
            return partial(v, format!("{} data leave the triangle open; give a,b,C / A,B,c / a,b,c / A,B,C", given.len()))
        }
        _ => {
            return Err(CliError::Parse(
                "unsupported data; give a,b,C / A,B,c / a,b,c / A,B,C or all six".into(),
            ))
        }
    };
    match result {
        Ok(t) => Ok(Solution::Full(t)),
        Err(CkError::Underdetermined { constraint }) => partial(v, constraint),
        Err(e) => Err(e.into()),
    }
}

/// Two sides with κ₂ = 0 satisfy a = b + c exactly; reject data that do not.
fn check_linear(g: Geometry, v: &[Option<f64>; 6]) -> CliResult<()> {
    for (base, zero) in [(0, g.k2 == 0.0), (3, g.k1 == 0.0)] {
        if let (true, [Some(x), Some(y), Some(z)]) = (zero, [v[base], v[base + 1], v[base + 2]]) {
            if (x - y - z).abs() > zero_excess_tol(0.5 * (x + y + z)) || x <= 0.0 || y <= 0.0 || z <= 0.0 {
                let what = if base == 0 { "sides must satisfy a = b + c" } else { "angles must satisfy A = B + C" };
                return Err(CkError::Existence(what.into()).into());
            }
        }
    }
    Ok(())
}

fn underdetermined(constraint: &str) -> CliError {
    CliError::Engine(CkError::Underdetermined { constraint: constraint.to_string() })
}

pub fn solve(geometry: &GeometryArgs, given: &str) -> CliResult<Outcome> {
    let r = geometry.resolve()?;
    match solve_data(r.geom, given)? {
        Solution::Full(t) => Outcome::ok(&SolveRecord::solved(&r, &t)),
        Solution::Partial(v, constraint) => {
            check_linear(r.geom, &v)?;
            let failure = underdetermined(&constraint);
            Outcome::with(&SolveRecord::partial(&r, &v, constraint), Some(failure))
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OrthoRecord {
    pub geometry: GeometryInfo,
    pub units: Option<UnitsInfo>,
    pub triangle: OrthoTriangle,
    pub area: f64,
    /// Largest residual of the twelve orthogonal relations.
    pub relations_max_residual: f64,
}

pub fn solve_ortho(geometry: &GeometryArgs, given: &str) -> CliResult<Outcome> {
    let r = geometry.resolve()?;
    let names = ["a", "b", "h", "A", "C"];
    let given = parse_given(given, &names)?;
    let [(n1, v1), (n2, v2)] = given.as_slice() else {
        return Err(CliError::Parse(format!("give exactly two of a, b, h, A, C (got {})", given.len())));
    };
    let k1 = OrthoKnown::parse(n1, *v1).expect("names are filtered");
    let k2 = OrthoKnown::parse(n2, *v2).expect("names are filtered");
    let t = orthogonal::solve_ortho(r.geom, k1, k2)?;
    let rel = orthogonal::relations(&t).into_iter().fold(0.0, f64::max);
    Outcome::ok(&OrthoRecord {
        geometry: GeometryInfo::of(r.geom),
        units: r.units.as_ref().map(UnitsInfo::of),
        triangle: t,
        area: orthogonal::ortho_area(&t),
        relations_max_residual: rel,
    })
}

#[derive(Debug, Serialize)]
pub struct Holonomy {
    pub angle: f64,
    pub minus_delta: f64,
    pub residual: f64,
}

#[derive(Debug, Serialize)]
pub struct VerifyRecord {
    pub geometry: GeometryInfo,
    pub triangle: TriangleRecord,
    pub basic_identity: f64,
    /// Based at the vertices A, B, C.
    pub point_loops: [f64; 3],
    /// Based on the sides a, b, c.
    pub line_loops: [f64; 3],
    pub holonomy: Holonomy,
    pub max_residual: f64,
    pub tol: f64,
    pub passed: bool,
}

pub fn verify(geometry: &GeometryArgs, given: &str, tol: f64) -> CliResult<Outcome> {
    let r = geometry.resolve()?;
    let t = match solve_data(r.geom, given)? {
        Solution::Full(t) => t,
        Solution::Partial(_, constraint) => return Err(underdetermined(&constraint)),
    };
    let basic = basic_identity_residual(&t);
    let point_loops = [Vertex::A, Vertex::B, Vertex::C].map(|v| point_loop_residual(&t, v));
    let line_loops = [Side::A, Side::B, Side::C].map(|s| line_loop_residual(&t, s));
    let angle = holonomy_angle(&t)?;
    let minus_delta = -t.excesses().Delta;
    let hres = (angle - minus_delta).abs();
    let max_residual = point_loops.iter().chain(&line_loops).fold(basic.max(hres), |m, v| m.max(*v));
    let passed = max_residual <= tol;
    let rec = VerifyRecord {
        geometry: GeometryInfo::of(r.geom),
        triangle: t.to_record(),
        basic_identity: basic,
        point_loops,
        line_loops,
        holonomy: Holonomy { angle, minus_delta, residual: hres },
        max_residual,
        tol,
        passed,
    };
    let failure = (!passed).then(|| CliError::Verification(format!("largest residual {max_residual:e} exceeds {tol:e}")));
    Outcome::with(&rec, failure)
}

pub const DEFAULT_SUITE_SAMPLES: usize = 200;

pub fn identities(geometry: &GeometryArgs, suite: Suite, run: &RunArgs) -> CliResult<Outcome> {
    let n = run.samples.unwrap_or(DEFAULT_SUITE_SAMPLES);
    let report: SuiteReport = match suite {
        Suite::Appendix => {
            geometry.resolve_optional()?;
            bestiarium::run_appendix(n, run.seed, run.tol, 4.0, 3.0)
        }
        Suite::Bestiarium => {
            let g = geometry.resolve()?.geom;
            SuiteReport {
                k1: Some(g.k1),
                k2: Some(g.k2),
                samples: n,
                seed: run.seed,
                tol: run.tol,
                identities: bestiarium::run_triangle_records(g, n, run.seed, run.tol),
            }
        }
        Suite::All => bestiarium::run_suite(geometry.resolve()?.geom, n, run.seed, run.tol),
    };
    let failure = (!report.all_passed()).then(|| {
        let ids: Vec<&str> = report.failures().iter().map(|r| r.identity_id.as_str()).collect();
        CliError::Verification(format!("failing identities: {}", ids.join(", ")))
    });
    Outcome::with(&report, failure)
}

#[derive(Debug, Serialize)]
pub struct TableRecord {
    pub table: u8,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub summaries: Vec<TableSummary>,
    pub max_residual: f64,
    pub passed: bool,
}

pub const DEFAULT_TABLE_SAMPLES: usize = 100;

pub fn table(geometry: &GeometryArgs, which: &str, run: &RunArgs) -> CliResult<Outcome> {
    let n = run.samples.unwrap_or(DEFAULT_TABLE_SAMPLES);
    let resolved = geometry.resolve_optional()?;
    let geoms: Vec<Geometry> = match resolved {
        Some(r) => vec![r.geom],
        None => Geometry::canonical().to_vec(),
    };
    let (table, summaries) = match which {
        "2" => (2, geoms.iter().map(|g| tables::table2(*g, n, run.seed)).collect::<Result<Vec<_>, _>>()?),
        "3" => (3, geoms.iter().map(|g| tables::table3(*g, n, run.seed)).collect::<Result<Vec<_>, _>>()?),
        "4" => {
            let units = match resolved {
                Some(Resolved { units: Some(u), .. }) => vec![u],
                Some(Resolved { geom, units: None }) => vec![SpacetimeUnits::natural(geom)?],
                None => tables::spacetime_units(1.0, 1.0)?,
            };
            (4, units.iter().map(|u| tables::table4(u, n, run.seed)).collect::<Result<Vec<_>, _>>()?)
        }
        other => return Err(CliError::Parse(format!("no table `{other}`"))),
    };
    let max_residual = summaries.iter().map(|s| s.max_residual.max(s.general_max_residual)).fold(0.0, f64::max);
    let passed = max_residual <= run.tol;
    let rec = TableRecord { table, samples: n, seed: run.seed, tol: run.tol, summaries, max_residual, passed };
    let failure = (!passed).then(|| CliError::Verification(format!("largest cell residual {max_residual:e} exceeds {:e}", run.tol)));
    Outcome::with(&rec, failure)
}

#[derive(Debug, Serialize)]
pub struct SpacetimeRecord {
    pub spacetime: &'static str,
    pub geometry: GeometryInfo,
    pub units: UnitsInfo,
    pub triangle: Option<SolveRecord>,
    /// The same triangle with sides divided by τ and angles by c.
    pub natural: Option<TriangleRecord>,
    /// Proper time along the direct worldline minus that along the other two.
    pub twin_defect: Option<f64>,
    pub table4: Option<Table4>,
}

pub fn spacetime(geometry: &GeometryArgs, given: Option<&str>) -> CliResult<Outcome> {
    let r = geometry.resolve()?;
    let name = spacetime_name(r.geom)
        .ok_or_else(|| CkError::Kind("a spacetime needs a non-positive second label".into()))?;
    let units = match r.units {
        Some(u) => u,
        None => SpacetimeUnits::natural(r.geom)?,
    };
    let mut rec = SpacetimeRecord {
        spacetime: name,
        geometry: GeometryInfo::of(r.geom),
        units: UnitsInfo::of(&units),
        triangle: None,
        natural: None,
        twin_defect: None,
        table4: None,
    };
    let Some(text) = given else {
        return Outcome::ok(&rec);
    };
    match solve_data(r.geom, text)? {
        Solution::Full(t) => {
            rec.natural = Some(kinematics::to_natural(&units, &t).to_record());
            rec.twin_defect = Some(twin_defect(&t)?);
            rec.table4 = Some(eval_table4(&units, &t)?);
            rec.triangle = Some(SolveRecord::solved(&r, &t));
            Outcome::ok(&rec)
        }
        Solution::Partial(v, constraint) => {
            check_linear(r.geom, &v)?;
            if let [Some(a), Some(b), Some(c), ..] = v {
                rec.twin_defect = Some(a - b - c);
            }
            let failure = underdetermined(&constraint);
            rec.triangle = Some(SolveRecord::partial(&r, &v, constraint));
            Outcome::with(&rec, Some(failure))
        }
    }
}
