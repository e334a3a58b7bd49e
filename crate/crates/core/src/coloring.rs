//! Coloring notions over the color set {0, 1, 2, 3} and their validators.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, SimpleGraph, VertexId};

pub type Color = u8;
pub const COLORS: [Color; 4] = [0, 1, 2, 3];

/// Partial or complete colors on vertices and edges (indexed by `EdgeId`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TotalAssignment {
    pub vertices: Vec<Option<Color>>,
    pub edges: Vec<Option<Color>>,
}

impl TotalAssignment {
    pub fn empty(g: &CubicGraph) -> Self {
        TotalAssignment { vertices: vec![None; g.n()], edges: vec![None; g.m()] }
    }

    pub fn complete(vertices: Vec<Color>, edges: Vec<Color>) -> Self {
        TotalAssignment {
            vertices: vertices.into_iter().map(Some).collect(),
            edges: edges.into_iter().map(Some).collect(),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.vertices.iter().chain(&self.edges).all(Option::is_some)
    }

    pub fn vertex(&self, v: VertexId) -> Option<Color> {
        self.vertices[v]
    }

    pub fn edge(&self, e: EdgeId) -> Option<Color> {
        self.edges[e]
    }

    /// Vertex colors of a complete assignment.
    pub fn vertex_colors(&self) -> Result<Vec<Color>> {
        self.vertices
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| Error::Incomplete(format!("vertex {v} unset"))))
            .collect()
    }

    pub fn edge_colors(&self) -> Result<Vec<Color>> {
        self.edges
            .iter()
            .enumerate()
            .map(|(e, c)| c.ok_or_else(|| Error::Incomplete(format!("edge {e} unset"))))
            .collect()
    }

    /// Apply a color permutation `perm[c]` to every set entry.
    pub fn permute_colors(&self, perm: &[Color; 4]) -> Self {
        let map = |c: &Option<Color>| c.map(|c| perm[c as usize]);
        TotalAssignment {
            vertices: self.vertices.iter().map(map).collect(),
            edges: self.edges.iter().map(map).collect(),
        }
    }

    fn check_shape(&self, g: &CubicGraph) -> Result<()> {
        if self.vertices.len() != g.n() || self.edges.len() != g.m() {
            return Err(Error::Precondition(format!(
                "assignment shape {}+{} does not match graph {}+{}",
                self.vertices.len(),
                self.edges.len(),
                g.n(),
                g.m()
            )));
        }
        if self.vertices.iter().chain(&self.edges).flatten().any(|&c| c > 3) {
            return Err(Error::Precondition("color outside {0,1,2,3}".into()));
        }
        Ok(())
    }

    fn full(&self, g: &CubicGraph) -> Result<(Vec<Color>, Vec<Color>)> {
        self.check_shape(g)?;
        Ok((self.vertex_colors()?, self.edge_colors()?))
    }
}

/// Which coloring a search or propagation targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Etc,
    Etgc,
}

/// A vertex or an edge: the things that receive colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Element {
    Vertex(VertexId),
    Edge(EdgeId),
}

/// Elements `0..n` are vertices, `n..n+m` edges. Two elements conflict
/// when they must receive different colors: vertices at distance at most
/// two, a vertex and its incident edges, adjacent edges, and (for ETGCs)
/// opposite edges of a 4-cycle. A complete assignment is an ETC (resp.
/// ETGC) iff it properly colors this graph with four colors.
#[derive(Debug, Clone)]
pub struct ConflictGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl ConflictGraph {
    pub fn new(g: &CubicGraph, mode: Mode) -> Result<Self> {
        let n = g.n();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + g.m()];
        let link = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
            if a != b && !adj[a].contains(&b) {
                adj[a].push(b);
                adj[b].push(a);
            }
        };
        for v in 0..n {
            for &w in g.neighbors(v) {
                link(v, w, &mut adj);
                for &x in g.neighbors(w) {
                    link(v, x, &mut adj);
                }
            }
            let inc = g.incident(v);
            for i in 0..3 {
                link(v, n + inc[i], &mut adj);
                for j in (i + 1)..3 {
                    link(n + inc[i], n + inc[j], &mut adj);
                }
            }
        }
        if mode == Mode::Etgc {
            for cyc in g.girth_cycles()? {
                let es = cycle_edges(g, &cyc);
                link(n + es[0], n + es[2], &mut adj);
                link(n + es[1], n + es[3], &mut adj);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(ConflictGraph { n, adj })
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adj[x]
    }

    pub fn element(&self, x: usize) -> Element {
        if x < self.n {
            Element::Vertex(x)
        } else {
            Element::Edge(x - self.n)
        }
    }

    pub fn index(&self, e: Element) -> usize {
        match e {
            Element::Vertex(v) => v,
            Element::Edge(e) => self.n + e,
        }
    }
}

/// Vertex classes indexed by color.
pub fn color_classes(g: &CubicGraph, a: &TotalAssignment) -> [Vec<VertexId>; 4] {
    let mut classes: [Vec<VertexId>; 4] = Default::default();
    for v in 0..g.n() {
        if let Some(c) = a.vertex(v) {
            classes[c as usize].push(v);
        }
    }
    classes
}

fn edge_proper(g: &CubicGraph, ec: &[Color]) -> bool {
    (0..g.n()).all(|v| {
        let [a, b, c] = g.incident(v).map(|e| ec[e]);
        a != b && b != c && a != c
    })
}

fn vertex_vs_edges(g: &CubicGraph, vc: &[Color], ec: &[Color]) -> bool {
    (0..g.n()).all(|v| g.incident(v).iter().all(|&e| ec[e] != vc[v]))
}

pub fn is_total_coloring(g: &CubicGraph, a: &TotalAssignment) -> Result<bool> {
    let (vc, ec) = a.full(g)?;
    Ok(g.edges().iter().all(|&(u, v)| vc[u] != vc[v])
        && edge_proper(g, &ec)
        && vertex_vs_edges(g, &vc, &ec))
}

/// Independent set meeting every closed neighborhood exactly once.
pub fn is_efficient_dominating_set(g: &CubicGraph, set: &[VertexId]) -> bool {
    let mut member = vec![false; g.n()];
    for &v in set {
        if v >= g.n() {
            return false;
        }
        member[v] = true;
    }
    (0..g.n()).all(|v| {
        let hits = member[v] as usize + g.neighbors(v).iter().filter(|&&w| member[w]).count();
        hits == 1
    })
}

pub fn is_etc(g: &CubicGraph, a: &TotalAssignment) -> Result<bool> {
    if !is_total_coloring(g, a)? {
        return Ok(false);
    }
    Ok(color_classes(g, a).iter().all(|class| is_efficient_dominating_set(g, class)))
}

fn require_girth4(g: &CubicGraph) -> Result<Vec<[VertexId; 4]>> {
    g.girth_cycles()
}

fn rainbow(colors: [Color; 4]) -> bool {
    let mut seen = [false; 4];
    for c in colors {
        if seen[c as usize] {
            return false;
        }
        seen[c as usize] = true;
    }
    true
}

fn cycle_edges(g: &CubicGraph, cyc: &[VertexId; 4]) -> [EdgeId; 4] {
    [0, 1, 2, 3].map(|i| g.edge_between(cyc[i], cyc[(i + 1) % 4]).expect("4-cycle edge"))
}

pub fn is_vegc(g: &CubicGraph, a: &TotalAssignment) -> Result<bool> {
    let cycles = require_girth4(g)?;
    if !is_total_coloring(g, a)? {
        return Ok(false);
    }
    let (vc, ec) = a.full(g)?;
    Ok(cycles.iter().all(|cyc| {
        rainbow(cyc.map(|v| vc[v])) && rainbow(cycle_edges(g, cyc).map(|e| ec[e]))
    }))
}

pub fn is_etgc(g: &CubicGraph, a: &TotalAssignment) -> Result<bool> {
    Ok(is_vegc(g, a)? && is_etc(g, a)?)
}

/// Proper 4-edge-coloring with every 4-cycle rainbow, on a graph of girth 4.
pub fn is_egc(g: &SimpleGraph, edge_colors: &[Color]) -> Result<bool> {
    if edge_colors.len() != g.edges().len() {
        return Err(Error::Precondition("edge color count mismatch".into()));
    }
    let cycles = g.four_cycles();
    if g.has_triangle() || cycles.is_empty() {
        return Err(Error::NotGirth4(None));
    }
    let proper = (0..g.n()).all(|v| {
        let mut seen = [false; 4];
        g.neighbors(v).iter().all(|&w| {
            let c = edge_colors[g.edge_between(v, w).unwrap()];
            c < 4 && !std::mem::replace(&mut seen[c as usize], true)
        })
    });
    Ok(proper
        && cycles.iter().all(|cyc| {
            rainbow([0, 1, 2, 3].map(|i| {
                edge_colors[g.edge_between(cyc[i], cyc[(i + 1) % 4]).unwrap()]
            }))
        }))
}

/// Identical vertex colorings and different colors on every edge.
pub fn are_orthogonal(g: &CubicGraph, a1: &TotalAssignment, a2: &TotalAssignment) -> Result<bool> {
    for (name, a) in [("first", a1), ("second", a2)] {
        if !is_etc(g, a)? {
            return Err(Error::Precondition(format!("{name} assignment is not an ETC")));
        }
    }
    Ok(a1.vertices == a2.vertices && a1.edges.iter().zip(&a2.edges).all(|(x, y)| x != y))
}

/// EGC of `g □ K_2` from an orthogonal pair: layer edges take each
/// assignment's edge colors, the rung at `v` takes the shared color of `v`.
pub fn prism_egc(
    g: &CubicGraph,
    a1: &TotalAssignment,
    a2: &TotalAssignment,
) -> Result<(SimpleGraph, Vec<Color>)> {
    if !are_orthogonal(g, a1, a2)? {
        return Err(Error::Precondition("assignments are not orthogonal".into()));
    }
    let prism = SimpleGraph::prism_of(g);
    let n = g.n();
    let (e1, e2, vc) = (a1.edge_colors()?, a2.edge_colors()?, a1.vertex_colors()?);
    let mut colors = vec![0; prism.edges().len()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        colors[prism.edge_between(u, v).unwrap()] = e1[e];
        colors[prism.edge_between(u + n, v + n).unwrap()] = e2[e];
    }
    for v in 0..n {
        colors[prism.edge_between(v, v + n).unwrap()] = vc[v];
    }
    Ok((prism, colors))
}

/// Semi-total coloring: proper on edges, each vertex differs from its
/// incident edges; adjacent vertices may agree.
pub fn is_stc(g: &CubicGraph, a: &TotalAssignment) -> Result<bool> {
    let (vc, ec) = a.full(g)?;
    Ok(edge_proper(g, &ec) && vertex_vs_edges(g, &vc, &ec))
}

/// Edges whose endpoints share a color.
pub fn beta_edges(g: &CubicGraph, a: &TotalAssignment) -> Vec<EdgeId> {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| a.vertex(u).is_some() && a.vertex(u) == a.vertex(v))
        .map(|(e, _)| e)
        .collect()
}

/// Every vertex (members included) has exactly one neighbor in `set`.
pub fn is_total_perfect_code(g: &CubicGraph, set: &[VertexId]) -> bool {
    let mut member = vec![false; g.n()];
    for &v in set {
        if v >= g.n() {
            return false;
        }
        member[v] = true;
    }
    (0..g.n()).all(|v| g.neighbors(v).iter().filter(|&&w| member[w]).count() == 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TpcPartition {
    pub classes: [(Color, Vec<VertexId>); 2],
}

/// Splits the vertices by color; succeeds iff exactly two colors occur and
/// both classes are total perfect codes.
///
/// On a cubic graph this never succeeds: a vertex with exactly one neighbor
/// in each of two complementary classes has degree 2. See
/// [`is_own_color_matching`] for the weaker property that two-colored STCs
/// can satisfy.
pub fn tpc_partition(g: &CubicGraph, a: &TotalAssignment) -> Option<TpcPartition> {
    let classes = color_classes(g, a);
    let used: Vec<(Color, Vec<VertexId>)> = classes
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_empty())
        .map(|(c, vs)| (c as Color, vs))
        .collect();
    if used.len() != 2 || used.iter().map(|(_, v)| v.len()).sum::<usize>() != g.n() {
        return None;
    }
    if !used.iter().all(|(_, vs)| is_total_perfect_code(g, vs)) {
        return None;
    }
    let mut it = used.into_iter();
    Some(TpcPartition { classes: [it.next().unwrap(), it.next().unwrap()] })
}

/// Every vertex is colored and has exactly one neighbor of its own color,
/// so the beta edges form a perfect matching and each color class induces
/// a matching.
pub fn is_own_color_matching(g: &CubicGraph, a: &TotalAssignment) -> bool {
    (0..g.n()).all(|v| {
        a.vertex(v).is_some()
            && g.neighbors(v).iter().filter(|&&w| a.vertex(w) == a.vertex(v)).count() == 1
    })
}

/// An STC in which every vertex is an end of exactly one beta edge. The
/// stronger reading, with both vertex classes total perfect codes, has no
/// instance among cubic graphs (see [`tpc_partition`]).
pub fn is_perfect_stc(g: &CubicGraph, a: &TotalAssignment) -> Result<bool> {
    Ok(is_stc(g, a)? && is_own_color_matching(g, a))
}

/// `(v_0, e_1, v_1, ..., e_k, v_k)`: `v_0` has color `c0`, edges alternate
/// `c1, c0, c1, ...`, the chain cannot continue past `v_k`, and `v_k` has
/// the color the next edge would have needed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlternatingPath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub c0: Color,
    pub c1: Color,
}

impl AlternatingPath {
    /// Build from a vertex sequence; colors are read off the assignment.
    pub fn from_vertices(g: &CubicGraph, a: &TotalAssignment, vertices: &[VertexId]) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidPath("needs at least one edge".into()));
        }
        let edges = vertices
            .windows(2)
            .map(|w| {
                g.edge_between(w[0], w[1])
                    .ok_or_else(|| Error::InvalidPath(format!("{}-{} is not an edge", w[0], w[1])))
            })
            .collect::<Result<Vec<_>>>()?;
        let c0 = a.vertex(vertices[0]).ok_or_else(|| Error::Incomplete("start vertex unset".into()))?;
        let c1 = a.edge(edges[0]).ok_or_else(|| Error::Incomplete("first edge unset".into()))?;
        Ok(AlternatingPath { vertices: vertices.to_vec(), edges, c0, c1 })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

fn edge_of_color(g: &CubicGraph, ec: &[Option<Color>], v: VertexId, c: Color, skip: Option<EdgeId>) -> Option<EdgeId> {
    g.incident(v).iter().copied().find(|&e| Some(e) != skip && ec[e] == Some(c))
}

// Follows the (c0,c1) edge chain from v0; None if it is not a valid path.
fn chain_from(g: &CubicGraph, a: &TotalAssignment, v0: VertexId, c0: Color, c1: Color) -> Option<AlternatingPath> {
    if a.vertex(v0) != Some(c0) {
        return None;
    }
    let mut vertices = vec![v0];
    let mut edges = Vec::new();
    let mut want = c1;
    let mut cur = v0;
    let mut last = None;
    while let Some(e) = edge_of_color(g, &a.edges, cur, want, last) {
        let next = g.other_end(e, cur);
        if vertices.contains(&next) {
            return None;
        }
        edges.push(e);
        vertices.push(next);
        cur = next;
        last = Some(e);
        want = if want == c0 { c1 } else { c0 };
    }
    if edges.is_empty() || a.vertex(cur) != Some(want) {
        return None;
    }
    Some(AlternatingPath { vertices, edges, c0, c1 })
}

pub fn find_maximal_alternating_paths(
    g: &CubicGraph,
    a: &TotalAssignment,
    c0: Color,
    c1: Color,
) -> Result<Vec<AlternatingPath>> {
    if c0 == c1 {
        return Err(Error::Precondition("c0 must differ from c1".into()));
    }
    if c0 > 3 || c1 > 3 {
        return Err(Error::Precondition("color outside {0,1,2,3}".into()));
    }
    if !is_stc(g, a)? {
        return Err(Error::Precondition("assignment is not an STC".into()));
    }
    let mut out = Vec::new();
    for v0 in 0..g.n() {
        if let Some(p) = chain_from(g, a, v0, c0, c1) {
            let end = *p.vertices.last().unwrap();
            // paths with both ends colored c0 are found from each end
            if a.vertex(end) == Some(c0) && end < v0 {
                continue;
            }
            out.push(p);
        }
    }
    Ok(out)
}

pub fn check_alternating_path(g: &CubicGraph, a: &TotalAssignment, p: &AlternatingPath) -> Result<()> {
    if p.c0 == p.c1 {
        return Err(Error::InvalidPath("c0 equals c1".into()));
    }
    if p.vertices.len() != p.edges.len() + 1 || p.edges.is_empty() {
        return Err(Error::InvalidPath("vertex/edge counts disagree".into()));
    }
    let expected = chain_from(g, a, p.vertices[0], p.c0, p.c1)
        .ok_or_else(|| Error::InvalidPath(format!("no maximal alternating path from {}", p.vertices[0])))?;
    if expected.vertices != p.vertices || expected.edges != p.edges {
        return Err(Error::InvalidPath(format!(
            "path {:?} is not the maximal chain {:?}",
            p.vertices, expected.vertices
        )));
    }
    Ok(())
}

/// Swap `c0` and `c1` on the end vertices and every edge of the path.
pub fn beta_reduce(g: &CubicGraph, a: &TotalAssignment, p: &AlternatingPath) -> Result<TotalAssignment> {
    if !is_stc(g, a)? {
        return Err(Error::Precondition("assignment is not an STC".into()));
    }
    check_alternating_path(g, a, p)?;
    let swap = |c: Color| if c == p.c0 { p.c1 } else { p.c0 };
    let mut out = a.clone();
    for &e in &p.edges {
        out.edges[e] = out.edges[e].map(swap);
    }
    for v in [p.vertices[0], *p.vertices.last().unwrap()] {
        out.vertices[v] = out.vertices[v].map(swap);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn eds_examples() {
        let g = named::q3();
        assert!(is_efficient_dominating_set(&g, &[0, 7]));
        assert!(!is_efficient_dominating_set(&g, &[]));
        let k = named::k33();
        for v in 0..6 {
            assert!(!is_efficient_dominating_set(&k, &[v]));
        }
    }

    #[test]
    fn eds_pairs_in_q3_are_antipodal() {
        let g = named::q3();
        for a in 0..8 {
            for b in (a + 1)..8 {
                assert_eq!(is_efficient_dominating_set(&g, &[a, b]), a ^ b == 7);
            }
        }
    }

    #[test]
    fn incomplete_is_error() {
        let g = named::q3();
        let a = TotalAssignment::empty(&g);
        assert!(matches!(is_total_coloring(&g, &a), Err(Error::Incomplete(_))));
    }

    #[test]
    fn tpc_basics() {
        // 3|S| = n has no solution on Q3
        let g = named::q3();
        assert!(!is_total_perfect_code(&g, &[0, 1, 6, 7]));
        let k = named::k33();
        assert!(is_total_perfect_code(&k, &[0, 3]));
        assert!(!is_total_perfect_code(&k, &[0, 1]));
    }

    #[test]
    fn monochromatic_assignment() {
        let g = named::k33();
        let same = TotalAssignment::complete(vec![0; 6], vec![1; 9]);
        assert_eq!(beta_edges(&g, &same).len(), 9);
        assert!(tpc_partition(&g, &same).is_none());
        assert!(!is_stc(&g, &same).unwrap());
    }

    #[test]
    fn same_colors_rejected_by_alternating_search() {
        let g = named::k33();
        let a = TotalAssignment::complete(vec![0; 6], vec![1; 9]);
        assert!(find_maximal_alternating_paths(&g, &a, 1, 1).is_err());
    }
}
