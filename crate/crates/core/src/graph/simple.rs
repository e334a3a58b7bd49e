//! Simple graphs of arbitrary degree, used for prisms `Γ □ K_2`.

use std::collections::HashMap;

use super::{CubicGraph, EdgeId, VertexId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
    index: HashMap<(VertexId, VertexId), EdgeId>,
}

impl SimpleGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::InvalidGraph(format!("bad edge ({a},{b})")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if list.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotSimple("duplicate edge".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &list {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        let index = list.iter().enumerate().map(|(e, &p)| (p, e)).collect();
        Ok(SimpleGraph { n, edges: list, adj, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_triangle(&self) -> bool {
        self.edges.iter().any(|&(a, b)| self.adj[a].iter().any(|x| self.adj[b].contains(x)))
    }

    /// 4-cycles `[a, b, c, d]`, `a` smallest, `b < d`.
    pub fn four_cycles(&self) -> Vec<[VertexId; 4]> {
        let mut out = Vec::new();
        for a in 0..self.n {
            let na = &self.adj[a];
            for i in 0..na.len() {
                for j in (i + 1)..na.len() {
                    let (b, d) = (na[i], na[j]);
                    if b < a || d < a {
                        continue;
                    }
                    for &c in &self.adj[b] {
                        if c > a && c != d && self.adj[d].binary_search(&c).is_ok() {
                            out.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        out
    }

    /// `g □ K_2`: layer one on `0..n`, layer two on `n..2n`, rungs `v`-`n+v`.
    pub fn prism_of(g: &CubicGraph) -> SimpleGraph {
        let n = g.n();
        let edges = g
            .edges()
            .iter()
            .copied()
            .chain(g.edges().iter().map(|&(a, b)| (a + n, b + n)))
            .chain((0..n).map(|v| (v, v + n)));
        SimpleGraph::new(2 * n, edges).unwrap()
    }
}

impl From<&CubicGraph> for SimpleGraph {
    fn from(g: &CubicGraph) -> Self {
        SimpleGraph::new(g.n(), g.edges().iter().copied()).unwrap()
    }
}
