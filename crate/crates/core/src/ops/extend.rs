//! Extension (stacking copies of a cutout) and unfolding (replacing a
//! square face by a ladder or by a general patch).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, TotalAssignment};
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, VertexId};
use crate::maps::{Cutout, Point};

/// Direction along which copies are stacked, or along which a ladder runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
}

/// `copies` translated copies of `c` placed side by side along `axis`,
/// consecutive copies sharing their common border.
pub fn extend(c: &Cutout, copies: usize, axis: Axis) -> Result<Cutout> {
    if copies < 2 {
        return Err(Error::Precondition("an extension needs at least two copies".into()));
    }
    c.validate()?;
    let (w, h) = (c.width, c.height);
    let step: Point = match axis {
        Axis::X => (w, 0),
        Axis::Y => (0, h),
    };
    let far = |p: Point| match axis {
        Axis::X => p.0 == w,
        Axis::Y => p.1 == h,
    };
    let near = |p: Point| match axis {
        Axis::X => p.0 == 0,
        Axis::Y => p.1 == 0,
    };
    // the far border of one copy lands on the near border of the next
    let shift = |p: Point| (p.0 - step.0, p.1 - step.1);
    let border = |pred: &dyn Fn(Point) -> bool, moved: bool| {
        let mut pts: Vec<(Point, Option<Color>)> = c
            .points
            .iter()
            .zip(&c.vertex_colors)
            .filter(|(p, _)| pred(**p))
            .map(|(&p, &col)| (if moved { shift(p) } else { p }, col))
            .collect();
        pts.sort();
        let mut lines: Vec<(Vec<Point>, Option<Color>)> = c
            .polylines
            .iter()
            .zip(&c.edge_colors)
            .filter(|(pl, _)| pl.iter().all(|&p| pred(p)))
            .map(|(pl, &col)| {
                let mut q: Vec<Point> = pl.iter().map(|&p| if moved { shift(p) } else { p }).collect();
                if q.last() < q.first() {
                    q.reverse();
                }
                (q, col)
            })
            .collect();
        lines.sort();
        (pts, lines)
    };
    if border(&near, false) != border(&far, true) {
        return Err(Error::Cutout("opposite borders do not match; copies cannot be stacked".into()));
    }
    let mut points: Vec<Point> = Vec::new();
    let mut vertex_colors = Vec::new();
    let mut seen_pts: HashMap<Point, usize> = HashMap::new();
    let mut polylines: Vec<Vec<Point>> = Vec::new();
    let mut edge_colors = Vec::new();
    let mut seen_lines: HashMap<Vec<Point>, usize> = HashMap::new();
    for k in 0..copies as i64 {
        let tr = |p: Point| (p.0 + k * step.0, p.1 + k * step.1);
        for (&p, &col) in c.points.iter().zip(&c.vertex_colors) {
            let q = tr(p);
            if seen_pts.contains_key(&q) {
                continue;
            }
            seen_pts.insert(q, points.len());
            points.push(q);
            vertex_colors.push(col);
        }
        for (pl, &col) in c.polylines.iter().zip(&c.edge_colors) {
            let q: Vec<Point> = pl.iter().map(|&p| tr(p)).collect();
            let mut key = q.clone();
            if key.last() < key.first() {
                key.reverse();
            }
            if seen_lines.contains_key(&key) {
                continue;
            }
            seen_lines.insert(key, polylines.len());
            polylines.push(q);
            edge_colors.push(col);
        }
    }
    let n = copies as i64;
    let (width, height) = match axis {
        Axis::X => (w * n, h),
        Axis::Y => (w, h * n),
    };
    let out = Cutout { width, height, identification: c.identification, points, vertex_colors, polylines, edge_colors };
    out.validate()?;
    Ok(out)
}

/// Colors for the inserted ladder, listed from the kept edge `e` towards
/// `e'`. The first rail starts at the lower-left corner of the square;
/// rail vertices and rungs are the interior ones only, rail edges are all
/// of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderColors {
    pub first_rail_vertices: Vec<Color>,
    pub first_rail_edges: Vec<Color>,
    pub second_rail_vertices: Vec<Color>,
    pub second_rail_edges: Vec<Color>,
    pub rungs: Vec<Color>,
}

/// Replaces the unit square with lower-left corner `corner` by the ladder
/// `P2 x P(2 ell)`. With `ladder = Axis::Y` the two horizontal sides of the
/// square are kept as the end rungs `e`, `e'`, its vertical sides are
/// removed and the ladder runs vertically; the cutout is stretched by
/// `2 ell - 1` along that axis to make room. `Axis::X` is the transpose.
/// New elements are uncolored unless `colors` are given.
pub fn unfold(c: &Cutout, corner: Point, ell: usize, ladder: Axis, colors: Option<&LadderColors>) -> Result<Cutout> {
    if ell < 2 {
        return Err(Error::Precondition("unfolding needs ell >= 2".into()));
    }
    let (x0, y0) = corner;
    let sq = [(x0, y0), (x0 + 1, y0), (x0 + 1, y0 + 1), (x0, y0 + 1)];
    let r = c.realize_full()?;
    let ids: Vec<VertexId> = sq
        .iter()
        .map(|&p| c.point_index(p).map(|i| r.vertex_of_point[i]))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Precondition(format!("no square with corner {corner:?}")))?;
    if !r.map.trace_belts().iter().any(|b| b.len() == 4 && b.matches_cycle(&ids)) {
        return Err(Error::Precondition(format!("square at {corner:?} is not a 4-belt")));
    }
    let k = 2 * ell as i64 - 1;
    let stretch = |p: Point| match ladder {
        Axis::Y => (p.0, p.1 * k),
        Axis::X => (p.0 * k, p.1),
    };
    // the two sides to remove run along the ladder axis
    let removed: Vec<(Point, Point)> = match ladder {
        Axis::Y => vec![(sq[0], sq[3]), (sq[1], sq[2])],
        Axis::X => vec![(sq[0], sq[1]), (sq[3], sq[2])],
    };
    let mut out = c.clone();
    let mut keep = Vec::new();
    for (i, pl) in c.polylines.iter().enumerate() {
        let ends = (pl[0], *pl.last().unwrap());
        let gone = pl.len() == 2 && removed.iter().any(|&(a, b)| ends == (a, b) || ends == (b, a));
        if !gone {
            keep.push(i);
        }
    }
    if keep.len() + 2 != c.polylines.len() {
        return Err(Error::Precondition("square sides are not straight unit edges".into()));
    }
    out.polylines = keep.iter().map(|&i| c.polylines[i].iter().map(|&p| stretch(p)).collect()).collect();
    out.edge_colors = keep.iter().map(|&i| c.edge_colors[i]).collect();
    out.points = c.points.iter().map(|&p| stretch(p)).collect();
    match ladder {
        Axis::Y => out.height *= k,
        Axis::X => out.width *= k,
    }
    // rails start at the stretched corners on the low side of the square
    let (lo_a, lo_b) = match ladder {
        Axis::Y => (stretch(sq[0]), stretch(sq[1])),
        Axis::X => (stretch(sq[0]), stretch(sq[3])),
    };
    let along = |p: Point, t: i64| match ladder {
        Axis::Y => (p.0, p.1 + t),
        Axis::X => (p.0 + t, p.1),
    };
    let pick = |list: Option<&Vec<Color>>, i: usize| list.and_then(|l| l.get(i).copied());
    for t in 1..k {
        let i = (t - 1) as usize;
        out.points.push(along(lo_a, t));
        out.vertex_colors.push(pick(colors.map(|c| &c.first_rail_vertices), i));
        out.points.push(along(lo_b, t));
        out.vertex_colors.push(pick(colors.map(|c| &c.second_rail_vertices), i));
        out.polylines.push(vec![along(lo_a, t), along(lo_b, t)]);
        out.edge_colors.push(pick(colors.map(|c| &c.rungs), i));
    }
    for t in 0..k {
        let i = t as usize;
        out.polylines.push(vec![along(lo_a, t), along(lo_a, t + 1)]);
        out.edge_colors.push(pick(colors.map(|c| &c.first_rail_edges), i));
        out.polylines.push(vec![along(lo_b, t), along(lo_b, t + 1)]);
        out.edge_colors.push(pick(colors.map(|c| &c.second_rail_edges), i));
    }
    out.validate()?;
    Ok(out)
}

/// Endpoint of a patch edge: a corner of the replaced square (0..4) or a
/// new inner vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatchVertex {
    Corner(usize),
    Inner(usize),
}

/// Replacement subgraph for the graph-level unfolding: it must contain the
/// kept edges `corner0-corner1` and `corner2-corner3` and give every corner
/// degree two and every inner vertex degree three.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Patch {
    pub inner: usize,
    pub edges: Vec<(PatchVertex, PatchVertex)>,
}

impl Patch {
    /// The ladder `P2 x P(2 ell)` with rails `corner0 .. corner3` and
    /// `corner1 .. corner2`.
    pub fn ladder(ell: usize) -> Result<Patch> {
        if ell < 2 {
            return Err(Error::Precondition("ladder needs ell >= 2".into()));
        }
        let inner_rungs = 2 * ell - 2;
        let left = |i: usize| {
            if i == 0 {
                PatchVertex::Corner(0)
            } else if i == inner_rungs + 1 {
                PatchVertex::Corner(3)
            } else {
                PatchVertex::Inner(2 * (i - 1))
            }
        };
        let right = |i: usize| {
            if i == 0 {
                PatchVertex::Corner(1)
            } else if i == inner_rungs + 1 {
                PatchVertex::Corner(2)
            } else {
                PatchVertex::Inner(2 * (i - 1) + 1)
            }
        };
        let mut edges = Vec::new();
        for i in 0..=inner_rungs + 1 {
            edges.push((left(i), right(i)));
            if i <= inner_rungs {
                edges.push((left(i), left(i + 1)));
                edges.push((right(i), right(i + 1)));
            }
        }
        Ok(Patch { inner: 2 * inner_rungs, edges })
    }
}

/// Graph-level unfolding of the 4-cycle `square = (a, b, c, d)`: the edges
/// `bc` and `da` are removed and `patch` is glued along `ab` and `cd`.
/// Inner patch vertex `i` becomes vertex `n + i`. Colors of surviving
/// elements are carried over when an assignment is given.
pub fn unfold_graph(
    g: &CubicGraph,
    a: Option<&TotalAssignment>,
    square: [VertexId; 4],
    patch: &Patch,
) -> Result<(CubicGraph, Option<TotalAssignment>)> {
    let [s0, s1, s2, s3] = square;
    for (x, y) in [(s0, s1), (s1, s2), (s2, s3), (s3, s0)] {
        if !g.has_edge(x, y) {
            return Err(Error::Precondition(format!("{square:?} is not a 4-cycle")));
        }
    }
    let mut deg = vec![0usize; 4 + patch.inner];
    let slot = |p: PatchVertex| match p {
        PatchVertex::Corner(i) => i,
        PatchVertex::Inner(i) => 4 + i,
    };
    for &(p, q) in &patch.edges {
        if slot(p) >= deg.len() || slot(q) >= deg.len() || slot(p) == slot(q) {
            return Err(Error::Precondition("patch edge out of range".into()));
        }
        deg[slot(p)] += 1;
        deg[slot(q)] += 1;
    }
    let has = |i: usize, j: usize| {
        patch.edges.iter().any(|&(p, q)| {
            (p, q) == (PatchVertex::Corner(i), PatchVertex::Corner(j))
                || (q, p) == (PatchVertex::Corner(i), PatchVertex::Corner(j))
        })
    };
    if !has(0, 1) || !has(2, 3) || deg[..4].iter().any(|&d| d != 2) || deg[4..].iter().any(|&d| d != 3) {
        return Err(Error::Precondition("patch violates the boundary contract".into()));
    }
    let n = g.n();
    let id = |p: PatchVertex| match p {
        PatchVertex::Corner(i) => square[i],
        PatchVertex::Inner(i) => n + i,
    };
    let dropped = [g.edge_between(s1, s2).unwrap(), g.edge_between(s3, s0).unwrap()];
    let kept = [g.edge_between(s0, s1).unwrap(), g.edge_between(s2, s3).unwrap()];
    let mut edges: Vec<(VertexId, VertexId)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(e, _)| !dropped.contains(e) && !kept.contains(e))
        .map(|(_, &p)| p)
        .collect();
    edges.extend(patch.edges.iter().map(|&(p, q)| (id(p), id(q))));
    let h = CubicGraph::new(n + patch.inner, edges)?;
    let colors = a.map(|a| {
        let mut out = TotalAssignment::empty(&h);
        out.vertices[..n].copy_from_slice(&a.vertices);
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if let Some(f) = h.edge_between(u, v) {
                if !dropped.contains(&e) {
                    out.edges[f] = a.edges[e];
                }
            }
        }
        out
    });
    Ok((h, colors))
}
