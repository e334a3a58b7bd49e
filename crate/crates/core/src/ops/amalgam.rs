//! Amalgamation of two colored graphs along matching cycles.

use crate::coloring::{is_etc, Color, TotalAssignment};
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, VertexId};

/// Cycle removed from one side, listed in order; `cycle[i]` of the first
/// graph is matched to `cycle[i]` of the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmalgamSide<'a> {
    pub graph: &'a CubicGraph,
    pub coloring: &'a TotalAssignment,
    pub cycle: Vec<VertexId>,
}

// For a vertex on the cycle, its neighbor off the cycle and the edge color.
fn off_cycle(side: &AmalgamSide<'_>) -> Result<Vec<(VertexId, Color, Color)>> {
    let g = side.graph;
    let k = side.cycle.len();
    if k < 3 {
        return Err(Error::Precondition("cycle needs at least three vertices".into()));
    }
    let mut seen = vec![false; g.n()];
    for &v in &side.cycle {
        if v >= g.n() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::Precondition(format!("bad cycle vertex {v}")));
        }
    }
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let v = side.cycle[i];
        let (p, q) = (side.cycle[(i + k - 1) % k], side.cycle[(i + 1) % k]);
        if !g.has_edge(v, p) || !g.has_edge(v, q) {
            return Err(Error::Precondition(format!("{:?} is not a cycle", side.cycle)));
        }
        let off: Vec<_> = g.neighbors(v).iter().copied().filter(|&w| w != p && w != q).collect();
        let &[w] = off.as_slice() else {
            return Err(Error::Precondition("cycle on fewer than four vertices".into()));
        };
        if seen[w] {
            return Err(Error::Precondition(format!("cycle has chord at {v}")));
        }
        let e = g.edge_between(v, w).expect("neighbor");
        let vc = side.coloring.vertex(v).ok_or_else(|| Error::Incomplete(format!("vertex {v}")))?;
        let ec = side.coloring.edge(e).ok_or_else(|| Error::Incomplete(format!("edge {e}")))?;
        out.push((w, vc, ec));
    }
    Ok(out)
}

/// Deletes both cycles and joins the off-cycle neighbors pairwise. Matched
/// cycle vertices must agree in color, and so must their off-cycle edges;
/// the new edge takes that color. The result is checked to be an ETC.
/// Vertices of the first graph come first, then those of the second.
pub fn amalgam(a: &AmalgamSide<'_>, b: &AmalgamSide<'_>) -> Result<(CubicGraph, TotalAssignment)> {
    if a.cycle.len() != b.cycle.len() {
        return Err(Error::Precondition("cycles have different lengths".into()));
    }
    let offa = off_cycle(a)?;
    let offb = off_cycle(b)?;
    let mut map_a = vec![usize::MAX; a.graph.n()];
    let mut map_b = vec![usize::MAX; b.graph.n()];
    let mut n = 0;
    for (v, slot) in map_a.iter_mut().enumerate() {
        if !a.cycle.contains(&v) {
            *slot = n;
            n += 1;
        }
    }
    for (v, slot) in map_b.iter_mut().enumerate() {
        if !b.cycle.contains(&v) {
            *slot = n;
            n += 1;
        }
    }
    let mut edges = Vec::new();
    let mut ecol = Vec::new();
    let mut vcol = vec![None; n];
    for (side, map) in [(a, &map_a), (b, &map_b)] {
        for (e, &(x, y)) in side.graph.edges().iter().enumerate() {
            if map[x] != usize::MAX && map[y] != usize::MAX {
                edges.push((map[x], map[y]));
                ecol.push(side.coloring.edge(e));
            }
        }
        for (v, &t) in map.iter().enumerate() {
            if t != usize::MAX {
                vcol[t] = side.coloring.vertex(v);
            }
        }
    }
    for (i, (&(wa, ca, ea), &(wb, cb, eb))) in offa.iter().zip(&offb).enumerate() {
        if ca != cb || ea != eb {
            return Err(Error::Precondition(format!("colors disagree at position {i}")));
        }
        edges.push((map_a[wa], map_b[wb]));
        ecol.push(Some(ea));
    }
    let h = CubicGraph::new(n, edges.clone())
        .map_err(|e| Error::NotSimple(format!("amalgam is not a simple cubic graph: {e}")))?;
    let mut out = TotalAssignment::empty(&h);
    out.vertices = vcol;
    for (k, &(x, y)) in edges.iter().enumerate() {
        out.edges[h.edge_between(x, y).expect("edge")] = ecol[k];
    }
    if out.is_complete() && !is_etc(&h, &out)? {
        return Err(Error::Precondition("amalgam coloring is not an ETC".into()));
    }
    Ok((h, out))
}
