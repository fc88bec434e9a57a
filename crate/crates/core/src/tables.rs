//! The cosine, sine and dual cosine theorems and the orthogonal-triangle
//! relations as they read in each of the nine geometries with labels in
//! {−1, 0, +1}, written with ordinary circular and hyperbolic functions.
//!
//! These specialised forms are independent of the labelled functions and
//! serve as a cross-check of the general formulas.

#![allow(non_snake_case)]

use serde::Serialize;

use crate::bestiarium;
use crate::error::{CkError, Result};
use crate::group::Geometry;
use crate::kinematics::{eval_table4, geometry_from_units, Scale, SpacetimeUnits};
use crate::orthogonal::{ortho_area, OrthoTriangle};
use crate::sampling::Sampler;
use crate::triangle::Triangle;

/// One specialised relation evaluated on one triangle.
#[derive(Debug, Clone, Serialize)]
pub struct Cell {
    pub formula: String,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
}

fn cell(formula: String, lhs: f64, rhs: f64) -> Cell {
    let d = (lhs - rhs).abs();
    let residual = if d == 0.0 { 0.0 } else { d / 1f64.max(lhs.abs()).max(rhs.abs()) };
    Cell { formula, lhs, rhs, residual }
}

/// cos/sin/tan or cosh/sinh/tanh for a unit label.
#[derive(Clone, Copy)]
struct Trig {
    circular: bool,
}

impl Trig {
    fn of(k: f64) -> Trig {
        Trig { circular: k > 0.0 }
    }
    fn c(self, x: f64) -> f64 {
        if self.circular {
            x.cos()
        } else {
            x.cosh()
        }
    }
    fn s(self, x: f64) -> f64 {
        if self.circular {
            x.sin()
        } else {
            x.sinh()
        }
    }
    fn t(self, x: f64) -> f64 {
        if self.circular {
            x.tan()
        } else {
            x.tanh()
        }
    }
    fn cn(self) -> &'static str {
        if self.circular {
            "cos"
        } else {
            "cosh"
        }
    }
    fn sn(self) -> &'static str {
        if self.circular {
            "sin"
        } else {
            "sinh"
        }
    }
    fn tn(self) -> &'static str {
        if self.circular {
            "tan"
        } else {
            "tanh"
        }
    }
}

fn canonical(g: Geometry) -> Result<()> {
    let unit = |k: f64| k == 0.0 || k == 1.0 || k == -1.0;
    if unit(g.k1) && unit(g.k2) {
        Ok(())
    } else {
        Err(CkError::Range(format!("labels ({}, {}) are not in {{−1, 0, 1}}", g.k1, g.k2)))
    }
}

/// "+" for a positive coefficient, "−" otherwise.
fn sign(v: f64) -> &'static str {
    if v > 0.0 {
        "+"
    } else {
        "−"
    }
}

/// Cosine, sine and dual cosine theorems of one canonical geometry.
pub fn table2_cells(t: &Triangle) -> Result<Vec<Cell>> {
    let g = t.geom;
    canonical(g)?;
    let (k1, k2) = (g.k1, g.k2);
    let (a, b, c, A, B, C) = (t.a, t.b, t.c, t.A, t.B, t.C);
    let (f1, f2) = (Trig::of(k1), Trig::of(k2));
    let mut out = Vec::with_capacity(9);
    // the first relation of each triple carries the external angle
    let sides = [(a, b, c, A, -1.0, "a", "b", "c", "A"), (b, a, c, B, 1.0, "b", "a", "c", "B"), (c, a, b, C, 1.0, "c", "a", "b", "C")];
    let angles = [(A, B, C, a, -1.0, "A", "B", "C", "a"), (B, A, C, b, 1.0, "B", "A", "C", "b"), (C, A, B, c, 1.0, "C", "A", "B", "c")];

    // cosine theorems
    for (x, y, z, W, s, xn, yn, zn, wn) in sides {
        if k1 != 0.0 && k2 != 0.0 {
            let coef = s * k1;
            let (c1, s1, c2) = (f1.cn(), f1.sn(), f2.cn());
            out.push(cell(
                format!("{c1} {xn} = {c1} {yn} {c1} {zn} {} {s1} {yn} {s1} {zn} {c2} {wn}", sign(coef)),
                f1.c(x),
                f1.c(y) * f1.c(z) + coef * f1.s(y) * f1.s(z) * f2.c(W),
            ));
        } else if k1 == 0.0 && k2 != 0.0 {
            let coef = -s;
            out.push(cell(
                format!("{xn}² = {yn}² + {zn}² {} 2{yn}{zn} {} {}", sign(coef), f2.cn(), wn),
                x * x,
                y * y + z * z + 2.0 * coef * y * z * f2.c(W),
            ));
        } else {
            // a zero second label makes the sides add up linearly
            let (l, r, f) = if s < 0.0 { (x, y + z, format!("{xn} = {yn} + {zn}")) } else { (x, y - z, format!("{xn} = {yn} − {zn}")) };
            out.push(cell(f, l, r));
        }
    }

    // sine theorem
    let sf = |x: f64| if k1 == 0.0 { x } else { f1.s(x) };
    let sg = |x: f64| if k2 == 0.0 { x } else { f2.s(x) };
    let name = |k: f64, f: Trig, v: &str| if k == 0.0 { v.to_string() } else { format!("{} {v}", f.sn()) };
    for (x, X, xn, Xn) in [(b, B, "b", "B"), (c, C, "c", "C")] {
        out.push(cell(
            format!("{}/{} = {}/{}", name(k1, f1, "a"), name(k2, f2, "A"), name(k1, f1, xn), name(k2, f2, Xn)),
            sf(a) / sg(A),
            sf(x) / sg(X),
        ));
    }

    // dual cosine theorems
    for (X, Y, Z, w, s, xn, yn, zn, wn) in angles {
        if k1 != 0.0 && k2 != 0.0 {
            let coef = s * k2;
            let (c2, s2, c1) = (f2.cn(), f2.sn(), f1.cn());
            out.push(cell(
                format!("{c2} {xn} = {c2} {yn} {c2} {zn} {} {s2} {yn} {s2} {zn} {c1} {wn}", sign(coef)),
                f2.c(X),
                f2.c(Y) * f2.c(Z) + coef * f2.s(Y) * f2.s(Z) * f1.c(w),
            ));
        } else if k2 == 0.0 && k1 != 0.0 {
            let coef = -s;
            out.push(cell(
                format!("{xn}² = {yn}² + {zn}² {} 2{yn}{zn} {} {wn}", sign(coef), f1.cn()),
                X * X,
                Y * Y + Z * Z + 2.0 * coef * Y * Z * f1.c(w),
            ));
        } else {
            let (l, r, f) = if s < 0.0 { (X, Y + Z, format!("{xn} = {yn} + {zn}")) } else { (X, Y - Z, format!("{xn} = {yn} − {zn}")) };
            out.push(cell(f, l, r));
        }
    }
    Ok(out)
}

/// Ids of the general records that the Table 2 cells specialise.
pub const TABLE2_GENERAL: [&str; 7] = ["cosine_a", "cosine_b", "cosine_c", "sine_theorem", "cosine_A", "cosine_B", "cosine_C"];

/// Orthogonal-triangle relations of one canonical geometry, including the
/// area.
pub fn table3_cells(t: &OrthoTriangle) -> Result<Vec<Cell>> {
    let g = t.geom;
    canonical(g)?;
    let (k1, k2) = (g.k1, g.k2);
    let k12 = k1 * k2;
    let (a, b, h, A, C) = (t.a, t.b, t.h, t.A, t.C);
    let (f1, f2, fh) = (Trig::of(k1), Trig::of(k2), Trig::of(k12));
    let area = ortho_area(t);
    let mut out = Vec::new();
    match (k1 != 0.0, k2 != 0.0) {
        (true, true) => {
            let (c1, s1, t1) = (f1.cn(), f1.sn(), f1.tn());
            let (c2, s2) = (f2.cn(), f2.sn());
            let (ch, sh, th) = (fh.cn(), fh.sn(), fh.tn());
            out.push(cell(format!("{c1} b = {c1} a {ch} h"), f1.c(b), f1.c(a) * fh.c(h)));
            out.push(cell(format!("{c2} C = {c2} A {ch} h"), f2.c(C), f2.c(A) * fh.c(h)));
            out.push(cell(format!("{sh} h = {s1} b {s2} C"), fh.s(h), f1.s(b) * f2.s(C)));
            out.push(cell(format!("{th} h = {t1} b {s2} A"), fh.t(h), f1.t(b) * f2.s(A)));
            out.push(cell(format!("{s1} a = {s1} b {c2} A"), f1.s(a), f1.s(b) * f2.c(A)));
            out.push(cell(format!("{t1} a = {t1} b {c2} C"), f1.t(a), f1.t(b) * f2.c(C)));
            // the area label κ₁²κ₂ has the sign of κ₂
            out.push(cell(
                format!("{s2} S = {s1} a {sh} h / (1 + {c1} b)"),
                f2.s(area),
                f1.s(a) * fh.s(h) / (1.0 + f1.c(b)),
            ));
        }
        (false, true) => {
            let (c2, s2) = (f2.cn(), f2.sn());
            out.push(cell(format!("b² = a² {} h²", sign(k2)), b * b, a * a + k2 * h * h));
            out.push(cell("C = A".into(), C, A));
            out.push(cell(format!("h = b {s2} C"), h, b * f2.s(C)));
            out.push(cell(format!("a = b {c2} C"), a, b * f2.c(C)));
            out.push(cell("S = ½ a h".into(), area, 0.5 * a * h));
        }
        (true, false) => {
            let (c1, s1, t1) = (f1.cn(), f1.sn(), f1.tn());
            out.push(cell("b = a".into(), b, a));
            out.push(cell(format!("C² = A² {} h²", sign(k1)), C * C, A * A + k1 * h * h));
            out.push(cell(format!("h = C {s1} b"), h, C * f1.s(b)));
            out.push(cell(format!("h = A {t1} b"), h, A * f1.t(b)));
            out.push(cell(format!("S = h {s1} a / (1 + {c1} b)"), area, h * f1.s(a) / (1.0 + f1.c(b))));
        }
        (false, false) => {
            out.push(cell("b = a".into(), b, a));
            out.push(cell("C = A".into(), C, A));
            out.push(cell("h = b C".into(), h, b * C));
            out.push(cell("S = ½ a h".into(), area, 0.5 * a * h));
        }
    }
    Ok(out)
}

/// Largest residual of every cell over a sample of one geometry.
#[derive(Debug, Clone, Serialize)]
pub struct TableSummary {
    pub table: u8,
    pub geometry: String,
    pub k1: f64,
    pub k2: f64,
    pub samples: usize,
    pub cells: Vec<CellSummary>,
    /// Largest residual of the general labelled forms on the same samples.
    pub general_max_residual: f64,
    pub max_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellSummary {
    pub formula: String,
    pub max_residual: f64,
}

fn summarise(table: u8, g: Geometry, samples: usize, rows: Vec<Vec<Cell>>, general: f64) -> TableSummary {
    let mut cells: Vec<CellSummary> = Vec::new();
    for r in rows {
        for (i, c) in r.into_iter().enumerate() {
            if let Some(s) = cells.get_mut(i) {
                s.max_residual = s.max_residual.max(c.residual);
            } else {
                cells.push(CellSummary { formula: c.formula, max_residual: c.residual });
            }
        }
    }
    let max_residual = cells.iter().map(|c| c.max_residual).fold(0.0, f64::max);
    TableSummary {
        table,
        geometry: g.name().unwrap_or("custom").to_string(),
        k1: g.k1,
        k2: g.k2,
        samples,
        cells,
        general_max_residual: general,
        max_residual,
    }
}

/// Table 2 at one canonical geometry over `n` solver-produced triangles.
pub fn table2(g: Geometry, n: usize, seed: u64) -> Result<TableSummary> {
    let mut s = Sampler::new(seed);
    let mut rows = Vec::with_capacity(n);
    let mut general: f64 = 0.0;
    for _ in 0..n {
        let t = s.triangle(g)?;
        rows.push(table2_cells(&t)?);
        for id in TABLE2_GENERAL {
            general = general.max(bestiarium::check(id, &t)?);
        }
    }
    Ok(summarise(2, g, n, rows, general))
}

/// Table 3 at one canonical geometry over `n` orthogonal triangles.
pub fn table3(g: Geometry, n: usize, seed: u64) -> Result<TableSummary> {
    let mut s = Sampler::new(seed);
    let mut rows = Vec::with_capacity(n);
    let mut general: f64 = 0.0;
    for _ in 0..n {
        let t = s.ortho(g)?;
        rows.push(table3_cells(&t)?);
        general = general.max(crate::orthogonal::relations(&t).into_iter().fold(0.0, f64::max));
    }
    Ok(summarise(3, g, n, rows, general))
}

/// Table 4 over `n` triangles of the spacetime with units `u`.
pub fn table4(u: &SpacetimeUnits, n: usize, seed: u64) -> Result<TableSummary> {
    let g = geometry_from_units(u);
    let mut s = Sampler::new(seed);
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let t = s.triangle(g)?;
        let r = eval_table4(u, &t)?;
        let cells = r
            .rows
            .into_iter()
            .flat_map(|row| {
                let f = row.formula;
                row.cells.into_iter().map(move |c| Cell { formula: f.clone(), lhs: c.lhs, rhs: c.rhs, residual: c.residual })
            })
            .collect();
        rows.push(cells);
    }
    let mut out = summarise(4, g, n, rows, 0.0);
    out.geometry = crate::kinematics::spacetime_name(g).unwrap_or("custom").to_string();
    Ok(out)
}

/// The six spacetimes for the given finite τ and c.
pub fn spacetime_units(tau: f64, c: f64) -> Result<Vec<SpacetimeUnits>> {
    let (t, v) = (Scale::Finite(tau), Scale::Finite(c));
    [
        (t, v, 1),
        (Scale::Infinite, v, 0),
        (t, v, -1),
        (t, Scale::Infinite, 1),
        (Scale::Infinite, Scale::Infinite, 0),
        (t, Scale::Infinite, -1),
    ]
    .into_iter()
    .map(|(a, b, s)| SpacetimeUnits::new(a, b, s))
    .collect()
}
