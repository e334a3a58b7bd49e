//! Simple cubic graphs and their structural queries.

mod canon;
mod enumerate;
pub mod named;
mod simple;

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

pub use canon::CanonicalForm;
pub use simple::SimpleGraph;
pub use enumerate::{enumerate_cubic_girth4, enumerate_cubic_girth4_with_ceiling, DEFAULT_CEILING};

pub type VertexId = usize;
pub type EdgeId = usize;

/// A simple 3-regular graph on vertices `0..n`.
///
/// Edges are stored as sorted pairs `(u, v)` with `u < v`, in lexicographic
/// order; an `EdgeId` is an index into that list. Neighbors of every vertex
/// are kept in increasing order, aligned with the incident edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<[VertexId; 3]>,
    inc: Vec<[EdgeId; 3]>,
    index: HashMap<(VertexId, VertexId), EdgeId>,
}

impl CubicGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if n < 4 {
            return Err(Error::InvalidGraph(format!("n = {n} < 4")));
        }
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({a},{b}) out of range")));
            }
            if a == b {
                return Err(Error::NotSimple(format!("loop at {a}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotSimple(format!("duplicate edge {:?}", w[0])));
        }
        let mut nbrs: Vec<Vec<(usize, usize)>> = vec![Vec::with_capacity(3); n];
        for (e, &(a, b)) in list.iter().enumerate() {
            nbrs[a].push((b, e));
            nbrs[b].push((a, e));
        }
        let mut adj = Vec::with_capacity(n);
        let mut inc = Vec::with_capacity(n);
        for (v, l) in nbrs.iter_mut().enumerate() {
            if l.len() != 3 {
                return Err(Error::InvalidGraph(format!("vertex {v} has degree {}", l.len())));
            }
            l.sort_unstable();
            adj.push([l[0].0, l[1].0, l[2].0]);
            inc.push([l[0].1, l[1].1, l[2].1]);
        }
        let index = list.iter().enumerate().map(|(e, &p)| (p, e)).collect();
        Ok(CubicGraph { n, edges: list, adj, inc, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId; 3] {
        &self.adj[v]
    }

    pub fn incident(&self, v: VertexId) -> &[EdgeId; 3] {
        &self.inc[v]
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<CubicGraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph("permutation length mismatch".into()));
        }
        CubicGraph::new(self.n, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
    }

    pub fn distances_from(&self, s: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    q.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices in breadth-first order from `root`, ties by neighbor order.
    pub fn bfs_order(&self, root: VertexId) -> Vec<VertexId> {
        let mut seen = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        for start in std::iter::once(root).chain(0..self.n) {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut q = VecDeque::from([start]);
            while let Some(u) = q.pop_front() {
                order.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        q.push_back(w);
                    }
                }
            }
        }
        order
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    /// Length of a shortest cycle, or `None` for an acyclic graph.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        q.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Every 4-cycle, once each, as `[a, b, c, d]` with `a` the smallest
    /// vertex and `b < d` its two cycle neighbors.
    pub fn girth_cycles(&self) -> Result<Vec<[VertexId; 4]>> {
        let g = self.girth();
        if g != Some(4) {
            return Err(Error::NotGirth4(g));
        }
        Ok(self.four_cycles())
    }

    pub(crate) fn four_cycles(&self) -> Vec<[VertexId; 4]> {
        let mut out = Vec::new();
        for a in 0..self.n {
            let na = self.adj[a];
            for i in 0..3 {
                for j in (i + 1)..3 {
                    let (b, d) = (na[i].min(na[j]), na[i].max(na[j]));
                    if b < a || d < a {
                        continue;
                    }
                    for &c in &self.adj[b] {
                        if c > a && c != d && self.adj[d].contains(&c) {
                            out.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        out
    }

    /// Minimum number of edges whose removal disconnects the graph.
    pub fn edge_connectivity(&self) -> usize {
        edge_connectivity(self.n, &self.edges)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canon::canonical_form(self.n, &self.adj)
    }
}

/// Edge connectivity of a multigraph given as an edge list. Loops are
/// ignored; parallel edges count separately.
pub fn edge_connectivity(n: usize, edges: &[(usize, usize)]) -> usize {
    if n <= 1 {
        return 0;
    }
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in edges {
        if a == b {
            continue;
        }
        // two opposite unit arcs per undirected edge, stored as pairs
        adj[a].push((b, arcs.len()));
        arcs.push((a, b));
        adj[b].push((a, arcs.len()));
        arcs.push((b, a));
    }
    let mut best = usize::MAX;
    for t in 1..n {
        best = best.min(max_flow(n, &adj, &arcs, 0, t, best));
        if best == 0 {
            break;
        }
    }
    best
}

// Unit-capacity undirected max flow from s to t, stopping early at `cap`.
fn max_flow(
    n: usize,
    adj: &[Vec<(usize, usize)>],
    arcs: &[(usize, usize)],
    s: usize,
    t: usize,
    cap: usize,
) -> usize {
    let mut flow = vec![0i32; arcs.len()];
    let mut total = 0;
    while total < cap {
        let mut prev: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            if u == t {
                break;
            }
            for &(w, a) in &adj[u] {
                // residual of arc a is 1 - flow[a] + flow[twin]
                let twin = a ^ 1;
                if !seen[w] && 1 - flow[a] + flow[twin] > 0 {
                    seen[w] = true;
                    prev[w] = Some(a);
                    q.push_back(w);
                }
            }
        }
        if !seen[t] {
            break;
        }
        let mut v = t;
        while let Some(a) = prev[v] {
            let twin = a ^ 1;
            if flow[twin] > 0 {
                flow[twin] -= 1;
            } else {
                flow[a] += 1;
            }
            v = arcs[a].0;
        }
        total += 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn girth_of_small_graphs() {
        assert_eq!(q3().girth(), Some(4));
        assert_eq!(k4().girth(), Some(3));
        assert_eq!(prism(8).unwrap().girth(), Some(4));
        assert_eq!(k33().girth(), Some(4));
        assert_eq!(petersen().girth(), Some(5));
    }

    #[test]
    fn girth_cycles_counts() {
        assert_eq!(q3().girth_cycles().unwrap().len(), 6);
        assert_eq!(k33().girth_cycles().unwrap().len(), 9);
        assert_eq!(prism(8).unwrap().girth_cycles().unwrap().len(), 8);
        assert_eq!(k4().girth_cycles(), Err(Error::NotGirth4(Some(3))));
    }

    #[test]
    fn connectivity() {
        assert_eq!(q3().edge_connectivity(), 3);
        assert_eq!(edge_connectivity(4, &[(0, 1), (2, 3)]), 0);
        for k in 3..10 {
            assert_eq!(prism(k).unwrap().edge_connectivity(), 3);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(CubicGraph::new(4, [(0, 1), (1, 2)]).is_err());
        assert!(matches!(CubicGraph::new(4, [(0, 0)]), Err(Error::NotSimple(_))));
    }
}
