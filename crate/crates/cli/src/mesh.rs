//! Mesh files: a JSON object with `vertices` (pairs of exact coordinates)
//! and `triangles` (zero-based vertex index triples).
//!
//! A coordinate is a JSON integer or a string holding an integer or a
//! fraction `"num/den"`. Floating-point numbers are rejected.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Deserialize;
use serde_json::Value;
use splinedim_core::arith::{format_rational, parse_rational, Rational};
use splinedim_core::triangulation::{Point2, Triangulation};

use crate::CliError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MeshDoc {
    vertices: Vec<[Value; 2]>,
    triangles: Vec<[usize; 3]>,
}

fn coordinate(v: &Value) -> Result<Rational, String> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                Err(format!("coordinate {n} is not exact; write it as \"num/den\""))
            }
        }
        Value::String(s) => parse_rational(s).map_err(|e| e.to_string()),
        other => Err(format!("coordinate {other} must be an integer or a \"num/den\" string")),
    }
}

/// Parses mesh text. Syntax problems are [`CliError::Parse`]; a well-formed
/// document describing an invalid triangulation is [`CliError::Mesh`].
pub fn parse_mesh(text: &str) -> Result<Triangulation, CliError> {
    let doc: MeshDoc = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let vertices = doc
        .vertices
        .iter()
        .enumerate()
        .map(|(i, [x, y])| {
            let wrap = |e: String| CliError::Parse(format!("vertex {i}: {e}"));
            Ok(Point2::new(coordinate(x).map_err(wrap)?, coordinate(y).map_err(wrap)?))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(Triangulation::build(vertices, doc.triangles)?)
}

pub fn read_mesh(path: &Path) -> Result<Triangulation, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    parse_mesh(&text)
}

fn coordinate_json(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("\"{}\"", format_rational(q))
    }
}

/// Mesh text with one vertex or triangle per line. Triangles are written
/// in their normalized counterclockwise order.
pub fn mesh_to_string(tri: &Triangulation) -> String {
    let mut out = String::from("{\n  \"vertices\": [\n");
    let n = tri.vertices().len();
    for (i, p) in tri.vertices().iter().enumerate() {
        let sep = if i + 1 < n { "," } else { "" };
        let _ = writeln!(out, "    [{}, {}]{sep}", coordinate_json(&p.x), coordinate_json(&p.y));
    }
    out.push_str("  ],\n  \"triangles\": [\n");
    let n = tri.triangles().len();
    for (i, [a, b, c]) in tri.triangles().iter().enumerate() {
        let sep = if i + 1 < n { "," } else { "" };
        let _ = writeln!(out, "    [{a}, {b}, {c}]{sep}");
    }
    out.push_str("  ]\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use splinedim_core::triangulation::samples::{figure2, tohaneanu};

    #[test]
    fn round_trip() {
        for tri in [figure2(), tohaneanu()] {
            let text = mesh_to_string(&tri);
            assert_eq!(parse_mesh(&text).unwrap(), tri);
        }
    }

    #[test]
    fn coordinates() {
        let ok = r#"{"vertices": [[0, 0], ["1", "0"], ["1/2", 1]], "triangles": [[0, 1, 2]]}"#;
        let tri = parse_mesh(ok).unwrap();
        assert_eq!(format_rational(&tri.vertices()[2].x), "1/2");
        let float = r#"{"vertices": [[0, 0], [1.5, 0], [0, 1]], "triangles": [[0, 1, 2]]}"#;
        assert!(matches!(parse_mesh(float), Err(CliError::Parse(_))));
        let dec = r#"{"vertices": [[0, 0], ["0.5", 0], [0, 1]], "triangles": [[0, 1, 2]]}"#;
        assert!(matches!(parse_mesh(dec), Err(CliError::Parse(_))));
        let flat = r#"{"vertices": [[0, 0], [1, 0], [2, 0]], "triangles": [[0, 1, 2]]}"#;
        assert!(matches!(parse_mesh(flat), Err(CliError::Mesh(_))));
        assert!(matches!(parse_mesh("{"), Err(CliError::Parse(_))));
    }
}
