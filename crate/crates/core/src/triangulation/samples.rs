//! Reference meshes with a single totally interior edge.

use alloc::vec::Vec;

use super::{Point2, Triangulation};
use crate::arith::parse_rational;

fn points(coords: &[(&str, &str)]) -> Vec<Point2> {
    coords
        .iter()
        .map(|&(x, y)| Point2::new(parse_rational(x).unwrap(), parse_rational(y).unwrap()))
        .collect()
}

/// Eleven vertices, totally interior edge from `(-1,0)` to `(1,0)`, with
/// `p = 6, s = 3` at the first endpoint and `q = 5, t = 4` at the second.
pub fn figure2() -> Triangulation {
    let vertices = points(&[
        ("-1", "0"),
        ("1", "0"),
        ("2", "1"),
        ("1", "2"),
        ("0", "1"),
        ("-1", "7/4"),
        ("-2", "1"),
        ("-9/4", "-5/4"),
        ("-1", "-3/2"),
        ("0", "-1"),
        ("7/4", "-1"),
    ]);
    let triangles = alloc::vec![
        [0, 1, 4],
        [0, 4, 5],
        [0, 5, 6],
        [0, 6, 7],
        [0, 7, 8],
        [0, 8, 9],
        [0, 9, 1],
        [1, 2, 3],
        [1, 3, 4],
        [1, 9, 10],
        [1, 10, 2],
    ];
    Triangulation::build(vertices, triangles).expect("figure2 sample is valid")
}

/// Eight triangles around the edge from `(-1,0)` to `(1,0)` with
/// `p = q = 4` and `s = t = 2`.
pub fn tohaneanu() -> Triangulation {
    let vertices = points(&[
        ("-1", "0"),
        ("1", "0"),
        ("1/3", "4/3"),
        ("1/3", "-4/3"),
        ("-2", "1"),
        ("-2", "-1"),
        ("2", "2"),
        ("2", "-2"),
    ]);
    let triangles = alloc::vec![
        [0, 1, 2],
        [0, 2, 4],
        [0, 4, 5],
        [0, 5, 3],
        [0, 3, 1],
        [1, 6, 2],
        [1, 3, 7],
        [1, 7, 6],
    ];
    Triangulation::build(vertices, triangles).expect("tohaneanu sample is valid")
}
