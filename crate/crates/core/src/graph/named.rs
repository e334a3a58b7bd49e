//! Small reference graphs used by fixtures and tests.

use super::CubicGraph;
use crate::error::{Error, Result};

/// The 3-cube, vertices are 3-bit strings.
pub fn q3() -> CubicGraph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            if v & bit == 0 {
                edges.push((v, v | bit));
            }
        }
    }
    CubicGraph::new(8, edges).unwrap()
}

pub fn k4() -> CubicGraph {
    CubicGraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// K_{3,3} with sides {0,1,2} and {3,4,5}.
pub fn k33() -> CubicGraph {
    let edges = (0..3).flat_map(|a| (3..6).map(move |b| (a, b)));
    CubicGraph::new(6, edges).unwrap()
}

pub fn petersen() -> CubicGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    CubicGraph::new(10, edges).unwrap()
}

/// The prism C_k □ K_2: outer cycle `0..k`, inner cycle `k..2k`, rung `i`-`k+i`.
pub fn prism(k: usize) -> Result<CubicGraph> {
    if k < 3 {
        return Err(Error::InvalidGraph(format!("prism needs k >= 3, got {k}")));
    }
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    CubicGraph::new(2 * k, edges)
}

/// Two disjoint copies of `g`, the second shifted by `g.n()`.
pub fn disjoint_union(g: &CubicGraph, h: &CubicGraph) -> CubicGraph {
    let n = g.n();
    let edges = g.edges().iter().copied().chain(h.edges().iter().map(|&(a, b)| (a + n, b + n)));
    CubicGraph::new(n + h.n(), edges).unwrap()
}
