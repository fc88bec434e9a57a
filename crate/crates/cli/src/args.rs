//! Command-line flags and their resolution into engine inputs.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cktrig::kinematics::{geometry_from_units, Scale, SpacetimeUnits};
use cktrig::Geometry;

use crate::error::{CliError, CliResult};

/// Solve, verify and tabulate triangles in the nine Cayley-Klein planes.
#[derive(Debug, Parser)]
#[command(name = "cktrig", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a triangle from three data (a,b,C / A,B,c / a,b,c / A,B,C).
    Solve {
        #[command(flatten)]
        geometry: GeometryArgs,
        /// Known quantities, e.g. `a=3,b=4,C=1.5707963`.
        #[arg(long)]
        given: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Solve an orthogonal triangle from two of a, b, h, A, C.
    SolveOrtho {
        #[command(flatten)]
        geometry: GeometryArgs,
        /// Two known quantities, e.g. `a=3,h=4`.
        #[arg(long)]
        given: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Solve a triangle and report the basic identity and loop residuals.
    Verify {
        #[command(flatten)]
        geometry: GeometryArgs,
        /// Known quantities: any `solve` data, or all six of a,b,c,A,B,C.
        #[arg(long)]
        given: String,
        #[arg(long, env = "CKTRIG_TOL", default_value_t = 1e-10)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run an identity suite over sampled triangles or raw arguments.
    Identities {
        #[command(flatten)]
        geometry: GeometryArgs,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Confirm a table of specialised theorems cell by cell.
    Table {
        #[command(flatten)]
        geometry: GeometryArgs,
        #[arg(long, value_parser = ["2", "3", "4"])]
        which: String,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Kinematical reading of a spacetime and, optionally, of a triangle in it.
    Spacetime {
        #[command(flatten)]
        geometry: GeometryArgs,
        /// Optional triangle data, as for `solve`.
        #[arg(long)]
        given: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Bestiarium,
    Appendix,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Exactly one of: a preset name, the two labels, or spacetime scales.
#[derive(Debug, Clone, Default, Args)]
pub struct GeometryArgs {
    /// Preset name or alias (elliptic, euclidean, hyperbolic, galilean, de-sitter, ...).
    #[arg(long)]
    pub geometry: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub k1: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub k2: Option<f64>,
    /// Universe time radius; a positive number or `inf`.
    #[arg(long)]
    pub tau: Option<String>,
    /// Relativistic constant; a positive number or `inf`.
    #[arg(long = "c")]
    pub speed: Option<String>,
    /// Sign of the time curvature (−1, 0 or 1) for the `--tau` form.
    #[arg(long, allow_hyphen_values = true)]
    pub sign: Option<i8>,
    /// Kinematical units `tau=..,c=..` rescaling a kinematical preset.
    #[arg(long)]
    pub units: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub output: Format,
    /// Also write the JSON record to this file.
    #[arg(long)]
    pub report_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, env = "CKTRIG_TOL", default_value_t = 1e-9)]
    pub tol: f64,
}

/// A geometry together with the units it was given in, if any.
#[derive(Debug, Clone, Copy)]
pub struct Resolved {
    pub geom: Geometry,
    pub units: Option<SpacetimeUnits>,
}

fn parse_scale(name: &str, s: &str) -> CliResult<Scale> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") {
        return Ok(Scale::Infinite);
    }
    let v: f64 = t.parse().map_err(|_| CliError::Parse(format!("{name}: `{s}` is not a number or `inf`")))?;
    if !(v.is_finite() && v > 0.0) {
        return Err(CliError::Parse(format!("{name} must be positive, got {v}")));
    }
    Ok(Scale::Finite(v))
}

/// `key=value` pairs separated by commas.
pub fn parse_pairs(s: &str) -> CliResult<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| CliError::Parse(format!("`{item}` is not of the form name=value")))?;
        let k = k.trim().to_string();
        if out.insert(k.clone(), v.trim().to_string()).is_some() {
            return Err(CliError::Parse(format!("`{k}` given twice")));
        }
    }
    if out.is_empty() {
        return Err(CliError::Parse("nothing given".into()));
    }
    Ok(out)
}

/// `--given` values restricted to the allowed names, in input order of names.
pub fn parse_given(s: &str, allowed: &[&str]) -> CliResult<Vec<(String, f64)>> {
    let pairs = parse_pairs(s)?;
    let mut out = Vec::new();
    for name in allowed {
        if let Some(v) = pairs.get(*name) {
            let x: f64 = v.parse().map_err(|_| CliError::Parse(format!("{name}: `{v}` is not a number")))?;
            if !x.is_finite() {
                return Err(CliError::Parse(format!("{name} must be finite")));
            }
            out.push((name.to_string(), x));
        }
    }
    if let Some(k) = pairs.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(CliError::Parse(format!("unknown quantity `{k}`; expected one of {}", allowed.join(", "))));
    }
    Ok(out)
}

impl GeometryArgs {
    fn forms(&self) -> usize {
        usize::from(self.geometry.is_some())
            + usize::from(self.k1.is_some() || self.k2.is_some())
            + usize::from(self.tau.is_some() || self.speed.is_some() || self.sign.is_some())
    }

    /// The geometry when the request may omit it.
    pub fn resolve_optional(&self) -> CliResult<Option<Resolved>> {
        if self.forms() == 0 {
            if self.units.is_some() {
                return Err(CliError::Parse("--units needs a geometry".into()));
            }
            return Ok(None);
        }
        self.resolve().map(Some)
    }

    pub fn resolve(&self) -> CliResult<Resolved> {
        match self.forms() {
            0 => return Err(CliError::Parse("no geometry given; use --geometry, --k1/--k2 or --tau/--c".into())),
            1 => {}
            _ => return Err(CliError::Parse("give exactly one of --geometry, --k1/--k2, --tau/--c/--sign".into())),
        }
        if self.tau.is_some() || self.speed.is_some() || self.sign.is_some() {
            if self.units.is_some() {
                return Err(CliError::Parse("--units cannot be combined with --tau/--c".into()));
            }
            let tau = self.tau.as_deref().map(|s| parse_scale("tau", s)).transpose()?.unwrap_or(Scale::Infinite);
            let c = self.speed.as_deref().map(|s| parse_scale("c", s)).transpose()?.unwrap_or(Scale::Infinite);
            let sign = match (tau, self.sign) {
                (Scale::Infinite, _) => 0,
                (Scale::Finite(_), Some(s)) => s,
                (Scale::Finite(_), None) => {
                    return Err(CliError::Parse("--sign is required with a finite --tau".into()));
                }
            };
            let u = SpacetimeUnits::new(tau, c, sign).map_err(|e| CliError::Parse(e.to_string()))?;
            return Ok(Resolved { geom: geometry_from_units(&u), units: Some(u) });
        }
        let geom = if let Some(name) = &self.geometry {
            Geometry::from_name(name).ok_or_else(|| CliError::Parse(format!("unknown geometry `{name}`")))?
        } else {
            match (self.k1, self.k2) {
                (Some(k1), Some(k2)) if k1.is_finite() && k2.is_finite() => Geometry::new(k1, k2),
                (Some(_), Some(_)) => return Err(CliError::Parse("labels must be finite".into())),
                _ => return Err(CliError::Parse("--k1 and --k2 must be given together".into())),
            }
        };
        let Some(spec) = &self.units else {
            return Ok(Resolved { geom, units: None });
        };
        if geom.k2 > 0.0 {
            return Err(CliError::Parse("--units applies only to kinematical geometries (κ₂ ≤ 0)".into()));
        }
        let pairs = parse_pairs(spec)?;
        if let Some(k) = pairs.keys().find(|k| !matches!(k.as_str(), "tau" | "c")) {
            return Err(CliError::Parse(format!("unknown unit `{k}`; expected tau or c")));
        }
        let natural = SpacetimeUnits::natural(geom).map_err(|e| CliError::Parse(e.to_string()))?;
        let pick = |name: &str, label: f64, default: Scale| -> CliResult<Scale> {
            if label == 0.0 {
                return Ok(Scale::Infinite);
            }
            pairs.get(name).map(|s| parse_scale(name, s)).transpose().map(|s| s.unwrap_or(default))
        };
        let tau = pick("tau", geom.k1, natural.tau)?;
        let c = pick("c", geom.k2, natural.c)?;
        let u = SpacetimeUnits::new(tau, c, natural.curvature_sign).map_err(|e| CliError::Parse(e.to_string()))?;
        Ok(Resolved { geom: geometry_from_units(&u), units: Some(u) })
    }
}
