//! Small named graphs.

use alloc::vec;
use alloc::vec::Vec;

use super::{CellGraph, Dart};

fn build(rotations: Vec<Vec<Dart>>, edges: &[(Dart, Dart)]) -> CellGraph {
    CellGraph::new(rotations, edges).expect("valid shape")
}

/// Path on `n ≥ 1` vertices; edge `k` joins `k` and `k + 1` with darts `2k`, `2k + 1`.
pub fn path(n: usize) -> CellGraph {
    let n = n.max(1);
    let rotations = (0..n)
        .map(|v| {
            let mut r = Vec::new();
            if v > 0 {
                r.push((2 * v - 1) as Dart);
            }
            if v + 1 < n {
                r.push((2 * v) as Dart);
            }
            r
        })
        .collect();
    let edges: Vec<(Dart, Dart)> = (0..n - 1).map(|k| (2 * k as Dart, 2 * k as Dart + 1)).collect();
    build(rotations, &edges)
}

/// Cycle on `n ≥ 2` vertices, planar.
pub fn cycle(n: usize) -> CellGraph {
    let rotations = (0..n)
        .map(|v| vec![(2 * v) as Dart, (2 * ((v + n - 1) % n) + 1) as Dart])
        .collect();
    let edges: Vec<(Dart, Dart)> = (0..n).map(|k| (2 * k as Dart, 2 * k as Dart + 1)).collect();
    build(rotations, &edges)
}

/// Two vertices joined by two edges.
pub fn bigon() -> CellGraph {
    build(vec![vec![0, 1], vec![2, 3]], &[(0, 2), (1, 3)])
}

/// Two vertices joined by three edges, planar.
pub fn theta() -> CellGraph {
    build(vec![vec![0, 1, 2], vec![5, 4, 3]], &[(0, 3), (1, 4), (2, 5)])
}

/// One vertex with one loop.
pub fn one_loop() -> CellGraph {
    build(vec![vec![0, 1]], &[(0, 1)])
}

/// One vertex with two interleaved loops, the only type (1,1) graph with two edges.
pub fn interleaved_loops() -> CellGraph {
    build(vec![vec![0, 1, 2, 3]], &[(0, 2), (1, 3)])
}

/// Two vertices, a loop at each, joined by an edge.
pub fn dumbbell() -> CellGraph {
    build(vec![vec![0, 1, 4], vec![2, 3, 5]], &[(0, 1), (2, 3), (4, 5)])
}

/// Planar piece of type (0,3) for undoing a contraction: vertex 0 has `d`
/// spokes, the first `a` ending at vertex 1 and the rest at vertex 2, and
/// vertices 1 and 2 are joined by the edge with darts `2d`, `2d + 1`.
pub fn splitting_piece(d: usize, a: usize) -> CellGraph {
    let d32 = d as Dart;
    let a = a.min(d) as Dart;
    let hub: Vec<Dart> = (0..d32).collect();
    let left: Vec<Dart> = core::iter::once(2 * d32).chain((0..a).rev().map(|k| d32 + k)).collect();
    let right: Vec<Dart> = core::iter::once(2 * d32 + 1).chain((a..d32).rev().map(|k| d32 + k)).collect();
    let mut edges: Vec<(Dart, Dart)> = (0..d32).map(|k| (k, d32 + k)).collect();
    edges.push((2 * d32, 2 * d32 + 1));
    build(vec![hub, left, right], &edges)
}
