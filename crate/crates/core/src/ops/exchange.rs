//! Exchanges: trading the two present sides of a 4-cycle for the two
//! absent ones.

use serde::{Deserialize, Serialize};

use crate::coloring::{is_etc, is_etgc, Color, TotalAssignment};
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, VertexId};
use crate::maps::{CombinatorialMap, Cutout, Point, RotationSystem};

/// `cycle = (v0, v1, v2, v3)` with `v0v1`, `v2v3` present and `v1v2`,
/// `v3v0` absent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeSite {
    pub cycle: [VertexId; 4],
}

// Checks the site and returns the common color of the present pair.
fn check_site(g: &CubicGraph, a: &TotalAssignment, site: &ExchangeSite) -> Result<Color> {
    let [v0, v1, v2, v3] = site.cycle;
    let mut sorted = site.cycle;
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) || sorted[3] >= g.n() {
        return Err(Error::Precondition(format!("{:?} is not four distinct vertices", site.cycle)));
    }
    let (Some(e01), Some(e23)) = (g.edge_between(v0, v1), g.edge_between(v2, v3)) else {
        return Err(Error::Precondition("present pair is missing from the graph".into()));
    };
    if g.has_edge(v1, v2) || g.has_edge(v3, v0) {
        return Err(Error::NotSimple("absent pair already present".into()));
    }
    let vc = |v: VertexId| a.vertex(v).ok_or_else(|| Error::Incomplete(format!("vertex {v} unset")));
    let c01 = a.edge(e01).ok_or_else(|| Error::Incomplete("edge unset".into()))?;
    let c23 = a.edge(e23).ok_or_else(|| Error::Incomplete("edge unset".into()))?;
    let (c0, c1, c2, c3) = (vc(v0)?, vc(v1)?, vc(v2)?, vc(v3)?);
    if c0 != c2 || c1 != c3 || c0 == c1 || c01 != c23 || c01 == c0 || c01 == c1 {
        return Err(Error::Precondition(format!(
            "site colors {c0},{c1},{c2},{c3} with sides {c01},{c23} do not allow an exchange"
        )));
    }
    Ok(c01)
}

/// Removes `v0v1`, `v2v3`, adds `v1v2`, `v3v0` with their color; every other
/// element keeps its color. The result is checked to be an ETC, and an
/// ETGC whenever it still has girth 4.
pub fn exchange(g: &CubicGraph, a: &TotalAssignment, site: &ExchangeSite) -> Result<(CubicGraph, TotalAssignment)> {
    let color = check_site(g, a, site)?;
    let [v0, v1, v2, v3] = site.cycle;
    let mut edges: Vec<(VertexId, VertexId)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(x, y)| !matches!((x.min(y), x.max(y)), p if p == (v0.min(v1), v0.max(v1)) || p == (v2.min(v3), v2.max(v3))))
        .collect();
    edges.push((v1, v2));
    edges.push((v3, v0));
    let h = CubicGraph::new(g.n(), edges)?;
    let mut out = TotalAssignment::empty(&h);
    out.vertices.clone_from(&a.vertices);
    for (f, &(x, y)) in h.edges().iter().enumerate() {
        out.edges[f] = match g.edge_between(x, y) {
            Some(e) => a.edges[e],
            None => Some(color),
        };
    }
    if out.is_complete() {
        let ok = if h.girth() == Some(4) { is_etgc(&h, &out)? } else { is_etc(&h, &out)? };
        if !ok {
            return Err(Error::Precondition("exchange result fails its coloring check".into()));
        }
    }
    Ok((h, out))
}

/// Exchange on an embedded graph; the caller supplies the new cyclic
/// neighbor order at every vertex, since the surgery may change the surface.
pub fn exchange_map(
    m: &CombinatorialMap,
    a: &TotalAssignment,
    site: &ExchangeSite,
    neighbor_orders: &[[VertexId; 3]],
) -> Result<(CombinatorialMap, TotalAssignment)> {
    let (h, out) = exchange(m.graph(), a, site)?;
    let rotation = RotationSystem::from_neighbor_orders(&h, neighbor_orders)?;
    Ok((CombinatorialMap::new(h, rotation)?, out))
}

/// Exchange drawn on a cutout: the sides `p0p1`, `p2p3` must be straight
/// polylines; the new sides are straight segments `p1p2`, `p3p0`. A new
/// side lying on a glued border line also gets its glued copy.
pub fn exchange_cutout(c: &Cutout, corners: [Point; 4]) -> Result<Cutout> {
    let r = c.realize_full()?;
    let ids = corners
        .iter()
        .map(|&p| c.point_index(p).map(|i| r.vertex_of_point[i]))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Precondition("site corner is not a vertex".into()))?;
    let site = ExchangeSite { cycle: [ids[0], ids[1], ids[2], ids[3]] };
    let color = check_site(r.map.graph(), &r.assignment, &site)?;
    let mut out = c.clone();
    let mut drop = Vec::new();
    for (a, b) in [(corners[0], corners[1]), (corners[2], corners[3])] {
        let k = c.polyline_between(a, b).ok_or_else(|| Error::Precondition(format!("no drawn edge {a:?}-{b:?}")))?;
        drop.push(k);
        // the glued copy of a border edge goes too
        let e = r.edge_of_polyline[k];
        drop.extend((0..c.polylines.len()).filter(|&j| j != k && r.edge_of_polyline[j] == e));
    }
    let keep: Vec<usize> = (0..c.polylines.len()).filter(|k| !drop.contains(k)).collect();
    out.polylines = keep.iter().map(|&k| c.polylines[k].clone()).collect();
    out.edge_colors = keep.iter().map(|&k| c.edge_colors[k]).collect();
    for (a, b) in [(corners[1], corners[2]), (corners[3], corners[0])] {
        out.polylines.push(vec![a, b]);
        out.edge_colors.push(Some(color));
        if let Some(twin) = glued_twin(c, a, b) {
            out.polylines.push(vec![twin.0, twin.1]);
            out.edge_colors.push(Some(color));
        }
    }
    out.validate()?;
    Ok(out)
}

fn glued_twin(c: &Cutout, a: Point, b: Point) -> Option<(Point, Point)> {
    use crate::maps::Identification::*;
    let (w, h) = (c.width, c.height);
    let gx = matches!(c.identification, X | Both);
    let gy = matches!(c.identification, Y | Both);
    if gx && a.0 == b.0 && (a.0 == 0 || a.0 == w) {
        let x = w - a.0;
        return Some(((x, a.1), (x, b.1)));
    }
    if gy && a.1 == b.1 && (a.1 == 0 || a.1 == h) {
        let y = h - a.1;
        return Some(((a.0, y), (b.0, y)));
    }
    None
}
