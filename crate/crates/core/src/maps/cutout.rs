//! Rectangular cutouts `[0, w] x [0, h]` with integer vertex placements and
//! polyline edges, glued along one or both pairs of opposite sides.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{CombinatorialMap, RotationSystem};
use crate::coloring::{Color, TotalAssignment};
use crate::error::{Error, Result};
use crate::graph::{edge_connectivity, CubicGraph, EdgeId, VertexId};

pub type Point = (i64, i64);

/// Which opposite sides are glued. `X` glues `x = 0` to `x = w`
/// (an xcutout), `Y` glues `y = 0` to `y = h` (a ycutout).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Identification {
    X,
    Y,
    Both,
}

impl Identification {
    fn glues_x(self) -> bool {
        matches!(self, Identification::X | Identification::Both)
    }

    fn glues_y(self) -> bool {
        matches!(self, Identification::Y | Identification::Both)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cutout {
    pub width: i64,
    pub height: i64,
    pub identification: Identification,
    /// Vertex placements; boundary copies of one vertex are listed once
    /// per copy.
    pub points: Vec<Point>,
    pub vertex_colors: Vec<Option<Color>>,
    /// Each edge as a polyline from one placement to another.
    pub polylines: Vec<Vec<Point>>,
    pub edge_colors: Vec<Option<Color>>,
}

/// Everything produced by gluing a cutout.
#[derive(Debug, Clone)]
pub struct Realized {
    pub map: CombinatorialMap,
    pub vertex_of_point: Vec<VertexId>,
    pub edge_of_polyline: Vec<EdgeId>,
    pub assignment: TotalAssignment,
}

// Glued vertices and edges, possibly with loops or parallel edges.
struct Glued {
    n: usize,
    vertex_of_point: Vec<VertexId>,
    vertex_colors: Vec<Option<Color>>,
    // (u, v, representative polyline, color)
    edges: Vec<(VertexId, VertexId, usize, Option<Color>)>,
    edge_of_polyline: Vec<usize>,
}

impl Cutout {
    pub fn new(
        width: i64,
        height: i64,
        identification: Identification,
        points: Vec<Point>,
        polylines: Vec<Vec<Point>>,
    ) -> Result<Self> {
        let c = Cutout {
            width,
            height,
            identification,
            vertex_colors: vec![None; points.len()],
            edge_colors: vec![None; polylines.len()],
            points,
            polylines,
        };
        c.validate()?;
        Ok(c)
    }

    /// Parses the row notation used for grid drawings. Rows run from top
    /// (`y = h`) to bottom (`y = 0`) and alternate between vertex rows of
    /// `2w + 1` tokens (`vertex edge vertex ... vertex`) and vertical rows of
    /// `w + 1` tokens. A vertex token is a color digit, `*` for an
    /// uncolored vertex or `.` for no vertex; an edge token is a color
    /// digit, `-` or `|` for an uncolored edge, or `.` / `:` for no edge.
    pub fn from_grid(text: &str, identification: Identification) -> Result<Self> {
        let rows: Vec<Vec<&str>> = text
            .lines()
            .map(|l| l.split_whitespace().collect::<Vec<_>>())
            .filter(|r| !r.is_empty())
            .collect();
        if rows.len() % 2 == 0 {
            return Err(Error::Cutout("grid needs an odd number of rows".into()));
        }
        let tokens = rows[0].len();
        if tokens % 2 == 0 || tokens < 3 {
            return Err(Error::Cutout("vertex rows need 2w+1 tokens".into()));
        }
        let w = (tokens / 2) as i64;
        let h = (rows.len() / 2) as i64;
        let mut points = Vec::new();
        let mut vertex_colors = Vec::new();
        let mut polylines = Vec::new();
        let mut edge_colors = Vec::new();
        let parse_vertex = |t: &str| -> Result<Option<Option<Color>>> {
            match t {
                "." => Ok(None),
                "*" => Ok(Some(None)),
                d => color_token(d).map(|c| Some(Some(c))),
            }
        };
        let parse_edge = |t: &str| -> Result<Option<Option<Color>>> {
            match t {
                "." | ":" => Ok(None),
                "-" | "|" => Ok(Some(None)),
                d => color_token(d).map(|c| Some(Some(c))),
            }
        };
        for (r, row) in rows.iter().enumerate() {
            let y = h - (r / 2) as i64;
            if r % 2 == 0 {
                if row.len() != tokens {
                    return Err(Error::Cutout(format!("vertex row {r} has {} tokens", row.len())));
                }
                for (i, t) in row.iter().enumerate() {
                    let x = (i / 2) as i64;
                    if i % 2 == 0 {
                        if let Some(c) = parse_vertex(t)? {
                            points.push((x, y));
                            vertex_colors.push(c);
                        }
                    } else if let Some(c) = parse_edge(t)? {
                        polylines.push(vec![(x, y), (x + 1, y)]);
                        edge_colors.push(c);
                    }
                }
            } else {
                if row.len() as i64 != w + 1 {
                    return Err(Error::Cutout(format!("vertical row {r} has {} tokens", row.len())));
                }
                for (x, t) in row.iter().enumerate() {
                    if let Some(c) = parse_edge(t)? {
                        polylines.push(vec![(x as i64, y), (x as i64, y - 1)]);
                        edge_colors.push(c);
                    }
                }
            }
        }
        let c = Cutout { width: w, height: h, identification, points, vertex_colors, polylines, edge_colors };
        c.validate()?;
        Ok(c)
    }

    pub fn point_index(&self, p: Point) -> Option<usize> {
        self.points.iter().position(|&q| q == p)
    }

    pub fn polyline_between(&self, a: Point, b: Point) -> Option<usize> {
        self.polylines.iter().position(|pl| {
            let (s, t) = (pl[0], *pl.last().unwrap());
            (s, t) == (a, b) || (s, t) == (b, a)
        })
    }

    /// Geometric well-formedness: placements inside the rectangle and
    /// distinct, polylines joining placements, no overlaps or crossings.
    pub fn validate(&self) -> Result<()> {
        if self.width <= 0 || self.height <= 0 {
            return Err(Error::Cutout("empty rectangle".into()));
        }
        if self.vertex_colors.len() != self.points.len() || self.edge_colors.len() != self.polylines.len() {
            return Err(Error::Cutout("color lists do not match placements".into()));
        }
        let inside = |&(x, y): &Point| x >= 0 && y >= 0 && x <= self.width && y <= self.height;
        let mut index: HashMap<Point, usize> = HashMap::new();
        for (i, p) in self.points.iter().enumerate() {
            if !inside(p) {
                return Err(Error::Cutout(format!("placement {p:?} outside the rectangle")));
            }
            if index.insert(*p, i).is_some() {
                return Err(Error::Cutout(format!("placement {p:?} listed twice")));
            }
        }
        let mut segments: Vec<(usize, usize, Point, Point)> = Vec::new();
        for (k, pl) in self.polylines.iter().enumerate() {
            if pl.len() < 2 {
                return Err(Error::Cutout(format!("polyline {k} has fewer than two points")));
            }
            for end in [pl[0], *pl.last().unwrap()] {
                if !index.contains_key(&end) {
                    return Err(Error::Cutout(format!("polyline {k} ends at {end:?}, not a vertex")));
                }
            }
            for (s, w) in pl.windows(2).enumerate() {
                if !inside(&w[1]) || w[0] == w[1] {
                    return Err(Error::Cutout(format!("polyline {k} has a bad segment")));
                }
                if s > 0 && index.contains_key(&w[0]) {
                    return Err(Error::Cutout(format!("polyline {k} passes through vertex {:?}", w[0])));
                }
                if let Some(p) = self.points.iter().find(|&&p| p != w[0] && p != w[1] && on_segment(w[0], w[1], p)) {
                    return Err(Error::Cutout(format!("polyline {k} passes through vertex {p:?}")));
                }
                segments.push((k, s, w[0], w[1]));
            }
        }
        for i in 0..segments.len() {
            for j in (i + 1)..segments.len() {
                let (ki, si, a, b) = segments[i];
                let (kj, sj, c, d) = segments[j];
                if !segments_meet(a, b, c, d) {
                    continue;
                }
                if ki == kj && si.abs_diff(sj) == 1 {
                    // consecutive segments of one polyline: only the joint
                    let joint = if si < sj { b } else { d };
                    if overlap_beyond_point(a, b, c, d, joint) {
                        return Err(Error::Cutout(format!("polyline {ki} folds back on itself")));
                    }
                    continue;
                }
                let shared = [a, b].into_iter().find(|p| (*p == c || *p == d) && index.contains_key(p));
                match shared {
                    Some(p) if !overlap_beyond_point(a, b, c, d, p) => {}
                    _ => {
                        return Err(Error::Cutout(format!(
                            "edges {ki} and {kj} cross ({a:?}-{b:?} and {c:?}-{d:?})"
                        )))
                    }
                }
            }
        }
        Ok(())
    }

    fn canonical(&self, (x, y): Point) -> Point {
        let x = if self.identification.glues_x() && x == self.width { 0 } else { x };
        let y = if self.identification.glues_y() && y == self.height { 0 } else { y };
        (x, y)
    }

    fn on_glued_line(&self, pl: &[Point]) -> bool {
        let (w, h) = (self.width, self.height);
        let all = |f: &dyn Fn(&Point) -> bool| pl.iter().all(f);
        (self.identification.glues_x() && (all(&|p| p.0 == 0) || all(&|p| p.0 == w)))
            || (self.identification.glues_y() && (all(&|p| p.1 == 0) || all(&|p| p.1 == h)))
    }

    fn glue(&self) -> Result<Glued> {
        self.validate()?;
        let (w, h) = (self.width, self.height);
        let present: std::collections::HashSet<Point> = self.points.iter().copied().collect();
        for &(x, y) in &self.points {
            let mut twins = Vec::new();
            if self.identification.glues_x() && (x == 0 || x == w) {
                twins.push((w - x, y));
            }
            if self.identification.glues_y() && (y == 0 || y == h) {
                twins.push((x, h - y));
            }
            if let Some(t) = twins.into_iter().find(|t| !present.contains(t)) {
                return Err(Error::Cutout(format!(
                    "identification mismatch: {:?} has no partner {t:?}",
                    (x, y)
                )));
            }
        }
        let mut id_of: HashMap<Point, VertexId> = HashMap::new();
        let mut vertex_of_point = Vec::with_capacity(self.points.len());
        let mut vertex_colors: Vec<Option<Color>> = Vec::new();
        for (i, &p) in self.points.iter().enumerate() {
            let next = id_of.len();
            let v = *id_of.entry(self.canonical(p)).or_insert(next);
            if v == vertex_colors.len() {
                vertex_colors.push(self.vertex_colors[i]);
            } else {
                match (vertex_colors[v], self.vertex_colors[i]) {
                    (Some(a), Some(b)) if a != b => {
                        return Err(Error::Cutout(format!("copies of vertex at {p:?} disagree in color")))
                    }
                    (None, c) => vertex_colors[v] = c,
                    _ => {}
                }
            }
            vertex_of_point.push(v);
        }
        let mut edges: Vec<(VertexId, VertexId, usize, Option<Color>)> = Vec::new();
        let mut edge_of_polyline = Vec::with_capacity(self.polylines.len());
        let mut glued_key: HashMap<Vec<Point>, (usize, usize)> = HashMap::new();
        for (k, pl) in self.polylines.iter().enumerate() {
            let u = vertex_of_point[self.point_index(pl[0]).unwrap()];
            let v = vertex_of_point[self.point_index(*pl.last().unwrap()).unwrap()];
            let color = self.edge_colors[k];
            if self.on_glued_line(pl) {
                let mut key: Vec<Point> = pl.iter().map(|&p| self.canonical(p)).collect();
                let rev: Vec<Point> = key.iter().rev().copied().collect();
                if rev < key {
                    key = rev;
                }
                if let Some(&(e, count)) = glued_key.get(&key) {
                    if count > 1 {
                        return Err(Error::NotSimple(format!("boundary edge {k} drawn more than twice")));
                    }
                    match (edges[e].3, color) {
                        (Some(a), Some(b)) if a != b => {
                            return Err(Error::Cutout(format!("copies of boundary edge {k} disagree in color")))
                        }
                        (None, c) => edges[e].3 = c,
                        _ => {}
                    }
                    glued_key.insert(key, (e, count + 1));
                    edge_of_polyline.push(e);
                    continue;
                }
                glued_key.insert(key, (edges.len(), 1));
            }
            edge_of_polyline.push(edges.len());
            edges.push((u, v, k, color));
        }
        if let Some((key, _)) = glued_key.iter().find(|(_, &(_, c))| c != 2) {
            return Err(Error::Cutout(format!("boundary edge at {key:?} lacks its glued copy")));
        }
        Ok(Glued { n: id_of.len(), vertex_of_point, vertex_colors, edges, edge_of_polyline })
    }

    pub fn realize(&self) -> Result<CombinatorialMap> {
        Ok(self.realize_full()?.map)
    }

    /// Glues the cutout into a cubic map; the rotation at every vertex is
    /// the counterclockwise order of its edges' first segments.
    pub fn realize_full(&self) -> Result<Realized> {
        let glued = self.glue()?;
        let mut seen = std::collections::HashSet::new();
        for &(u, v, k, _) in &glued.edges {
            if u == v {
                return Err(Error::NotSimple(format!("edge {k} is a loop")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::NotSimple(format!("edge {k} duplicates another edge")));
            }
        }
        let graph = CubicGraph::new(glued.n, glued.edges.iter().map(|&(u, v, _, _)| (u, v)))
            .map_err(|e| match e {
                Error::InvalidGraph(m) => Error::Cutout(format!("glued graph is not cubic: {m}")),
                other => other,
            })?;
        let edge_id: Vec<EdgeId> =
            glued.edges.iter().map(|&(u, v, _, _)| graph.edge_between(u, v).unwrap()).collect();
        let mut dirs: Vec<Vec<(Point, EdgeId)>> = vec![Vec::new(); glued.n];
        for (i, &(u, v, k, _)) in glued.edges.iter().enumerate() {
            let pl = &self.polylines[k];
            let m = pl.len();
            dirs[u].push(((pl[1].0 - pl[0].0, pl[1].1 - pl[0].1), edge_id[i]));
            dirs[v].push(((pl[m - 2].0 - pl[m - 1].0, pl[m - 2].1 - pl[m - 1].1), edge_id[i]));
        }
        let mut order = Vec::with_capacity(glued.n);
        for (v, list) in dirs.iter_mut().enumerate() {
            list.sort_by(|a, b| angle_cmp(a.0, b.0));
            if list.windows(2).any(|p| angle_cmp(p[0].0, p[1].0) == Ordering::Equal) {
                return Err(Error::Cutout(format!("two edges leave vertex {v} in the same direction")));
            }
            order.push([list[0].1, list[1].1, list[2].1]);
        }
        let rotation = RotationSystem::new(&graph, order)?;
        let mut assignment = TotalAssignment::empty(&graph);
        assignment.vertices.clone_from(&glued.vertex_colors);
        for (i, &(_, _, _, c)) in glued.edges.iter().enumerate() {
            assignment.edges[edge_id[i]] = c;
        }
        let edge_of_polyline = glued.edge_of_polyline.iter().map(|&i| edge_id[i]).collect();
        Ok(Realized {
            map: CombinatorialMap::new(graph, rotation)?,
            vertex_of_point: glued.vertex_of_point,
            edge_of_polyline,
            assignment,
        })
    }

    /// The glued multigraph with pendant and isolated vertices pruned
    /// (repeatedly) and degree-2 vertices suppressed (each one replaced by
    /// a single edge joining its two neighbors). Loops are
    /// kept so that a closed chain of degree-2 vertices survives as an
    /// isolated vertex.
    pub fn smoothed_multigraph(&self) -> Result<(usize, Vec<(VertexId, VertexId)>)> {
        let glued = self.glue()?;
        let mut edges: Vec<Option<(VertexId, VertexId)>> =
            glued.edges.iter().map(|&(u, v, _, _)| Some((u, v))).collect();
        let mut alive = vec![true; glued.n];
        loop {
            let mut inc: Vec<Vec<usize>> = vec![Vec::new(); glued.n];
            for (i, e) in edges.iter().enumerate() {
                if let Some((u, v)) = *e {
                    inc[u].push(i);
                    inc[v].push(i);
                }
            }
            if let Some(v) = (0..glued.n).find(|&v| alive[v] && inc[v].len() <= 1) {
                for &i in &inc[v] {
                    edges[i] = None;
                }
                alive[v] = false;
                continue;
            }
            let target = (0..glued.n).find(|&v| {
                alive[v] && inc[v].len() == 2 && inc[v][0] != inc[v][1]
            });
            let Some(v) = target else { break };
            let (a, b) = (inc[v][0], inc[v][1]);
            let other = |i: usize| {
                let (x, y) = edges[i].unwrap();
                if x == v {
                    y
                } else {
                    x
                }
            };
            let joined = (other(a), other(b));
            edges[a] = Some(joined);
            edges[b] = None;
            alive[v] = false;
        }
        let mut new_id = vec![usize::MAX; glued.n];
        let mut n = 0;
        for v in 0..glued.n {
            if alive[v] {
                new_id[v] = n;
                n += 1;
            }
        }
        let out = edges.into_iter().flatten().map(|(u, v)| (new_id[u], new_id[v])).collect();
        Ok((n, out))
    }

    /// The same drawing with only the `keep` identification in force; the
    /// two copies of each boundary vertex on the dropped sides become
    /// distinct vertices.
    pub fn reinterpret(&self, keep: Identification) -> Result<Cutout> {
        if self.identification != Identification::Both {
            return Err(Error::Precondition("reinterpretation needs a bicutout".into()));
        }
        if keep == Identification::Both {
            return Err(Error::Precondition("keep exactly one identification".into()));
        }
        let mut c = self.clone();
        c.identification = keep;
        // The seam runs through the boundary row (column). Its drawn edges
        // are kept once, on the bottom (left) side; the copies on the top
        // (right) side would be parallel twins and are dropped, leaving the
        // top (right) boundary vertices as stubs of half-edges.
        let (w, h) = (self.width, self.height);
        let on_dropped_side = |line: &Vec<Point>| match keep {
            Identification::X => line.iter().all(|p| p.1 == h),
            _ => line.iter().all(|p| p.0 == w),
        };
        let keep_edge: Vec<bool> = c.polylines.iter().map(|l| !on_dropped_side(l)).collect();
        let mut k = keep_edge.iter();
        c.polylines.retain(|_| *k.next().unwrap());
        let mut k = keep_edge.iter();
        c.edge_colors.retain(|_| *k.next().unwrap());
        Ok(c)
    }

    /// True iff one of the two single-identification readings is a
    /// 3-edge-connected graph (after suppressing degree-2 vertices).
    pub fn is_toroidally_3_edge_connected(&self) -> Result<bool> {
        for keep in [Identification::X, Identification::Y] {
            let (n, edges) = self.reinterpret(keep)?.smoothed_multigraph()?;
            if edge_connectivity(n, &edges) >= 3 {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Grid rendering inverse to `from_grid`; only unit axis-parallel edges
    /// between grid points can be expressed.
    pub fn to_grid(&self) -> Result<String> {
        let mut lines = Vec::new();
        let vtok = |p: Point| match self.point_index(p) {
            None => ".".to_string(),
            Some(i) => self.vertex_colors[i].map_or("*".into(), |c| c.to_string()),
        };
        let etok = |a: Point, b: Point, blank: &str| match self.polyline_between(a, b) {
            Some(k) if self.polylines[k].len() == 2 => {
                self.edge_colors[k].map_or("-".to_string(), |c| c.to_string())
            }
            _ => blank.to_string(),
        };
        let mut covered = 0;
        for y in (0..=self.height).rev() {
            let mut row = Vec::new();
            for x in 0..=self.width {
                row.push(vtok((x, y)));
                if x < self.width {
                    if self.polyline_between((x, y), (x + 1, y)).is_some() {
                        covered += 1;
                    }
                    row.push(etok((x, y), (x + 1, y), "."));
                }
            }
            lines.push(row.join(" "));
            if y > 0 {
                let row: Vec<String> = (0..=self.width)
                    .map(|x| {
                        if self.polyline_between((x, y), (x, y - 1)).is_some() {
                            covered += 1;
                        }
                        etok((x, y), (x, y - 1), ":")
                    })
                    .collect();
                lines.push(row.join(" "));
            }
        }
        if covered != self.polylines.len() {
            return Err(Error::Cutout("cutout has edges that are not unit grid segments".into()));
        }
        Ok(lines.join("\n"))
    }
}

fn color_token(t: &str) -> Result<Color> {
    match t.parse::<u8>() {
        Ok(c) if c < 4 => Ok(c),
        _ => Err(Error::Cutout(format!("bad token {t:?}"))),
    }
}

// Counterclockwise angular order starting from the positive x axis.
fn angle_cmp(a: Point, b: Point) -> Ordering {
    let half = |(x, y): Point| if y > 0 || (y == 0 && x > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 * b.1 - a.1 * b.0;
        0.cmp(&cross)
    })
}

fn orient(a: Point, b: Point, c: Point) -> i64 {
    ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum()
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    orient(a, b, p) == 0
        && p.0 >= a.0.min(b.0)
        && p.0 <= a.0.max(b.0)
        && p.1 >= a.1.min(b.1)
        && p.1 <= a.1.max(b.1)
}

fn segments_meet(a: Point, b: Point, c: Point, d: Point) -> bool {
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b)
}

// True if segments ab and cd share more than the single point p.
fn overlap_beyond_point(a: Point, b: Point, c: Point, d: Point, p: Point) -> bool {
    let collinear = orient(a, b, c) == 0 && orient(a, b, d) == 0;
    if collinear {
        // collinear segments sharing p overlap iff they leave p the same way
        let u = if a == p { b } else { a };
        let v = if c == p { d } else { c };
        let dot = (u.0 - p.0) * (v.0 - p.0) + (u.1 - p.1) * (v.1 - p.1);
        return dot > 0;
    }
    // non-collinear segments meet in exactly one point; it must be p
    !(on_segment(a, b, p) && on_segment(c, d, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    const OCT_LEFT: &str = "
        0 3 1 0 2 1 3 2 0
        1 2 3 0 1
        2 0 3 1 0 2 1 3 2";

    #[test]
    fn oct_left_realizes_q3() {
        let c = Cutout::from_grid(OCT_LEFT, Identification::X).unwrap();
        assert_eq!((c.width, c.height), (4, 1));
        let r = c.realize_full().unwrap();
        let g = r.map.graph();
        assert_eq!(g.n(), 8);
        assert_eq!(g.canonical_form(), crate::graph::named::q3().canonical_form());
        assert_eq!(r.map.euler_genus().unwrap(), 0);
        assert!(r.assignment.is_complete());
    }

    #[test]
    fn grid_round_trip() {
        let c = Cutout::from_grid(OCT_LEFT, Identification::X).unwrap();
        let again = Cutout::from_grid(&c.to_grid().unwrap(), Identification::X).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn mismatched_boundary_rejected() {
        let text = "
            * - * - * - * . .
            | | | | :
            * - * - * - * - *";
        let c = Cutout::from_grid(text, Identification::X).unwrap();
        assert!(matches!(c.realize(), Err(Error::Cutout(_))));
    }

    #[test]
    fn crossing_edges_rejected() {
        let pts = vec![(0, 0), (1, 1), (0, 1), (1, 0)];
        let lines = vec![vec![(0, 0), (1, 1)], vec![(0, 1), (1, 0)]];
        assert!(Cutout::new(1, 1, Identification::X, pts, lines).is_err());
    }

    #[test]
    fn touching_at_vertex_allowed() {
        let pts = vec![(0, 0), (1, 1), (2, 0)];
        let lines = vec![vec![(0, 0), (1, 1)], vec![(1, 1), (2, 0)]];
        assert!(Cutout::new(2, 1, Identification::X, pts, lines).is_ok());
    }

    #[test]
    fn loops_are_not_simple() {
        // an edge from (0,0) to (1,0) on a width-1 xcutout is a loop
        let text = "
            * - *
            | |
            * - *";
        let c = Cutout::from_grid(text, Identification::X).unwrap();
        assert!(matches!(c.realize(), Err(Error::NotSimple(_))));
    }

    #[test]
    fn angle_order_is_counterclockwise() {
        let mut dirs = vec![(0, -1), (-1, 0), (1, 0), (0, 1), (1, 1)];
        dirs.sort_by(|a, b| angle_cmp(*a, *b));
        assert_eq!(dirs, vec![(1, 0), (1, 1), (0, 1), (-1, 0), (0, -1)]);
    }
}
