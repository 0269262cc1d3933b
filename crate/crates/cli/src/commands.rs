use std::fmt::Write as _;

use splinedim_core::arith::format_rational;
use splinedim_core::dimension::{
    dim_with, lower_cut, stabilization_degree, upper_cut, DimError, Method, MethodRequest,
};
use splinedim_core::oracle::{dim_spline_oracle_with, OracleOptions};
use splinedim_core::power_ideal::{homology_regularity, TiePair};
use splinedim_core::triangulation::{extract_one_tie_params, Triangulation};

use crate::table::{emit, Format, TableRow};
use crate::{CliError, Output, EXIT_MISMATCH};

pub fn parse_method(s: &str) -> Result<MethodRequest, String> {
    match s {
        "auto" => Ok(MethodRequest::Auto),
        "lattice" => Ok(MethodRequest::Lattice),
        "explicit" => Ok(MethodRequest::Explicit),
        "oracle" => Ok(MethodRequest::Oracle),
        _ => Err(format!("unknown method {s:?} (expected auto, lattice, explicit or oracle)")),
    }
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

/// Counts, classification and the parameters of the totally interior edge.
pub fn validate(tri: &Triangulation) -> Output {
    let mut out = String::new();
    let interior: Vec<usize> = tri.interior_vertices().collect();
    let ties: Vec<usize> = tri.totally_interior_edges().collect();
    let _ = writeln!(out, "vertices: {}", tri.vertices().len());
    let _ = writeln!(out, "edges: {}", tri.edges().len());
    let _ = writeln!(out, "triangles: {}", tri.triangles().len());
    let _ = writeln!(out, "interior edges: {}", tri.interior_edges().count());
    let _ = writeln!(
        out,
        "{}; interior vertices: {}",
        plural(ties.len(), "totally interior edge"),
        interior.len()
    );
    for &e in &ties {
        let edge = tri.edge(e);
        let verts = tri.vertices();
        let _ = writeln!(out, "  edge {}-{}: {} to {}", edge.a, edge.b, verts[edge.a], verts[edge.b]);
    }
    for &v in &interior {
        let slopes = tri.slope_count(v).expect("interior vertex");
        let _ = writeln!(out, "  interior vertex {v} {}: {} edges, {} slopes", tri.vertices()[v], tri.edges_at(v).len(), slopes);
    }
    let qcc = if tri.is_quasi_cross_cut() { "yes" } else { "no" };
    let _ = writeln!(out, "quasi-cross-cut: {qcc}");
    match extract_one_tie_params(tri) {
        Ok(p) => {
            let _ = writeln!(out, "parameters: p={} s={} q={} t={}", p.p, p.s, p.q, p.t);
            if p.trivial_slope_collision {
                let _ = writeln!(out, "an edge at an endpoint is parallel to the totally interior edge");
            }
        }
        Err(e) => {
            let _ = writeln!(out, "parameters: unavailable ({})", e.name());
        }
    }
    Output::ok(out)
}

/// One dimension as `L=.. H1=.. dim=.. method=..`.
pub fn dim(
    tri: &Triangulation,
    r: u32,
    d: u32,
    method: MethodRequest,
    options: OracleOptions,
) -> Result<Output, CliError> {
    let rep = dim_with(tri, d, r, method, options)?;
    Ok(Output::ok(format!(
        "L={} H1={} dim={} method={}\n",
        rep.lower_bound, rep.correction, rep.total, rep.method
    )))
}

/// Rows for `d = 0..=dmax`, optionally checked against the oracle.
pub fn table_rows(
    tri: &Triangulation,
    r: u32,
    dmax: u32,
    method: MethodRequest,
    verify: bool,
    options: OracleOptions,
) -> Result<Vec<TableRow>, CliError> {
    (0..=dmax)
        .map(|d| {
            let mut row = TableRow::from_report(&dim_with(tri, d, r, method, options)?);
            if verify {
                row.oracle_total = Some(dim_spline_oracle_with(tri, d, r, options)?);
            }
            Ok(row)
        })
        .collect()
}

pub fn table(
    tri: &Triangulation,
    r: u32,
    dmax: u32,
    method: MethodRequest,
    format: Format,
    verify: bool,
    options: OracleOptions,
) -> Result<Output, CliError> {
    let rows = table_rows(tri, r, dmax, method, verify, options)?;
    let mismatch = rows.iter().any(|row| row.matches() == Some(false));
    let text = emit(&rows, format);
    Ok(Output { text, code: if mismatch { EXIT_MISMATCH } else { 0 } })
}

/// Thresholds for a mesh with one totally interior edge.
pub fn regularity(tri: &Triangulation, r: u32) -> Result<Output, CliError> {
    if tri.is_quasi_cross_cut() {
        return Ok(Output::ok(format!(
            "dim = L for all d (method={}: every edge reaches the boundary along its slope)\n",
            Method::QuasiCrossCut
        )));
    }
    let params = extract_one_tie_params(tri).map_err(DimError::UnsupportedTopology)?;
    let (s, t) = (params.s, params.t);
    if params.trivial_slope_collision {
        return Ok(Output::ok(format!(
            "dim = L for all d (method={}: an edge at an endpoint is parallel to the totally interior edge)\n",
            Method::TrivialCase
        )));
    }
    if params.trivial_many_slopes(r) {
        return Ok(Output::ok(format!(
            "dim = L for all d (method={}: max(s,t)+1 = {} >= r+3 = {})\n",
            Method::TrivialCase,
            s.max(t) + 1,
            r + 3
        )));
    }
    let tp = TiePair::new(s, t, r).map_err(|_| DimError::TrivialCase)?;
    let stab = stabilization_degree(params.counts(), r)?;
    let mut out = String::new();
    let _ = writeln!(out, "s={s} t={t} r={r}");
    let _ = writeln!(out, "congruence case: {}", if tp.congruence_case() { "yes" } else { "no" });
    let _ = writeln!(out, "homology regularity: {}", homology_regularity(tp));
    let _ = writeln!(out, "stabilization degree: {stab}");
    let _ = writeln!(out, "supersmoothness threshold: {}", format_rational(&lower_cut(s, t, r)));
    let _ = writeln!(out, "middle range upper cut: {}", format_rational(&upper_cut(s, t, r)));
    Ok(Output::ok(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use splinedim_core::triangulation::samples::{figure2, tohaneanu};

    #[test]
    fn dim_lines() {
        let tri = figure2();
        let out = dim(&tri, 8, 12, MethodRequest::Auto, OracleOptions::default()).unwrap();
        assert_eq!(out.text, "L=134 H1=1 dim=135 method=lattice\n");
        let out = dim(&tri, 6, 9, MethodRequest::Auto, OracleOptions::default()).unwrap();
        assert!(out.text.contains("H1=0 "));
        let out = dim(&tri, 8, 12, MethodRequest::Oracle, OracleOptions::default()).unwrap();
        assert!(out.text.contains("dim=135 method=oracle"));
    }

    #[test]
    fn validate_report() {
        let text = validate(&figure2()).text;
        assert!(text.contains("1 totally interior edge; interior vertices: 2"), "{text}");
        assert!(text.contains("parameters: p=6 s=3 q=5 t=4"));
        assert!(validate(&tohaneanu()).text.contains("parameters: p=4 s=2 q=4 t=2"));
    }

    #[test]
    fn regularity_reports() {
        let tri = figure2();
        let text = regularity(&tri, 6).unwrap().text;
        assert!(text.contains("homology regularity: 8"));
        assert!(text.contains("stabilization degree: 9"));
        assert!(text.contains("supersmoothness threshold: 26/3"));
        assert!(regularity(&tri, 10).unwrap().text.contains("homology regularity: 15"));
        assert!(regularity(&tri, 5).unwrap().text.contains("stabilization degree"));
        assert!(regularity(&tri, 2).unwrap().text.starts_with("dim = L for all d"));
    }

    #[test]
    fn verified_tables() {
        let out = table(&figure2(), 6, 12, MethodRequest::Auto, Format::Csv, true, OracleOptions::default()).unwrap();
        assert_eq!(out.code, 0);
        assert!(out.text.lines().skip(1).all(|l| l.ends_with(",true")));
    }
}
