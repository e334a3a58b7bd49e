//! Canonical labeling by equitable refinement plus individualization.
//!
//! Every leaf of the search tree gives a labeling; the certificate is the
//! lexicographically smallest relabeled edge list over all leaves. Cell
//! order after refinement depends only on signatures, so the result is an
//! isomorphism invariant.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub edges: Vec<(u32, u32)>,
}

impl CanonicalForm {
    /// The graph6 string of the canonically labeled graph (n < 63).
    pub fn graph6(&self) -> String {
        let mut out = vec![(self.n as u8) + 63];
        let mut bits = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for j in 1..self.n {
            for i in 0..j {
                let (a, b) = (i as u32, j as u32);
                bits.push(self.edges.binary_search(&(a, b)).is_ok());
            }
        }
        for chunk in bits.chunks(6) {
            let mut x = 0u8;
            for k in 0..6 {
                x = (x << 1) | u8::from(chunk.get(k).copied().unwrap_or(false));
            }
            out.push(x + 63);
        }
        String::from_utf8(out).expect("graph6 is ascii")
    }
}

pub(crate) fn canonical_form(n: usize, adj: &[[usize; 3]]) -> CanonicalForm {
    let cells = refine(adj, vec![(0..n).collect()]);
    let mut search = Search { adj, first: None, best: None, autos: Vec::new() };
    search.descend(cells, &mut Vec::new());
    CanonicalForm { n, edges: search.best.map(|(c, _)| c).unwrap_or_default() }
}

type Cert = Vec<(u32, u32)>;

const MAX_AUTOS: usize = 256;

struct Search<'a> {
    adj: &'a [[usize; 3]],
    // certificate and inverse labeling of the first and the best leaf
    first: Option<(Cert, Vec<usize>)>,
    best: Option<(Cert, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut done: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if done.iter().any(|&u| self.same_orbit(u, v, prefix)) {
                continue;
            }
            done.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&x| x != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.descend(refine(self.adj, next), prefix);
            prefix.pop();
        }
    }

    // Orbit test under the group generated by the stored automorphisms
    // that fix the prefix pointwise.
    fn same_orbit(&self, u: usize, v: usize, prefix: &[usize]) -> bool {
        let gens: Vec<&Vec<usize>> =
            self.autos.iter().filter(|g| prefix.iter().all(|&p| g[p] == p)).collect();
        if gens.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![u];
        seen[u] = true;
        while let Some(x) = stack.pop() {
            if x == v {
                return true;
            }
            for g in &gens {
                let y = g[x];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let n = self.adj.len();
        let mut pos = vec![0u32; n];
        let mut inv = vec![0usize; n];
        for (i, c) in cells.iter().enumerate() {
            pos[c[0]] = i as u32;
            inv[i] = c[0];
        }
        let mut cert: Cert = Vec::with_capacity(n * 3 / 2);
        for (u, nb) in self.adj.iter().enumerate() {
            for &w in nb {
                if u < w {
                    let (a, b) = (pos[u], pos[w]);
                    cert.push((a.min(b), a.max(b)));
                }
            }
        }
        cert.sort_unstable();
        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.0 == cert && self.autos.len() < MAX_AUTOS {
                // equal certificates: vertex v maps to the vertex holding
                // the same label in the known leaf
                let gamma: Vec<usize> = (0..n).map(|v| known.1[pos[v] as usize]).collect();
                if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                    self.autos.push(gamma);
                }
                break;
            }
        }
        if self.first.is_none() {
            self.first = Some((cert.clone(), inv.clone()));
        }
        if self.best.as_ref().is_none_or(|b| cert < b.0) {
            self.best = Some((cert, inv));
        }
    }
}

fn refine(adj: &[[usize; 3]], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut cell_of = vec![0u32; adj.len()];
    loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i as u32;
            }
        }
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        let mut split = false;
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<([u32; 3], usize)> = c
                .iter()
                .map(|&v| {
                    let mut s = adj[v].map(|w| cell_of[w]);
                    s.sort_unstable();
                    (s, v)
                })
                .collect();
            keyed.sort_unstable();
            let start = next.len();
            let mut cur = keyed[0].0;
            next.push(Vec::new());
            for (s, v) in keyed {
                if s != cur {
                    cur = s;
                    next.push(Vec::new());
                }
                next.last_mut().unwrap().push(v);
            }
            if next.len() - start > 1 {
                split = true;
            }
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::named;

    #[test]
    fn graph6_of_complete_graph() {
        assert_eq!(named::k4().canonical_form().graph6(), "C~");
    }

    #[test]
    fn graph6_length() {
        // 8 vertices: one size byte and ceil(28 / 6) = 5 data bytes
        assert_eq!(named::q3().canonical_form().graph6().len(), 6);
    }
}
