//! Generation of connected cubic graphs of girth exactly 4.
//!
//! Vertices are saturated in index order; the smallest unsaturated vertex
//! picks its new neighbors in increasing order among triangle-free
//! candidates, and among candidates sharing the same neighborhood only the
//! smallest is offered, since such candidates are interchangeable. Completed graphs
//! are deduplicated by canonical form.

use std::collections::HashSet;

use super::{CanonicalForm, CubicGraph};
use crate::error::{Error, Result};

pub const DEFAULT_CEILING: usize = 16;

/// All pairwise non-isomorphic connected cubic graphs of girth 4 on `n`
/// vertices, in order of discovery (deterministic).
pub fn enumerate_cubic_girth4(n: usize, max_results: Option<usize>) -> Result<Vec<CubicGraph>> {
    enumerate_cubic_girth4_with_ceiling(n, max_results, DEFAULT_CEILING)
}

pub fn enumerate_cubic_girth4_with_ceiling(
    n: usize,
    max_results: Option<usize>,
    ceiling: usize,
) -> Result<Vec<CubicGraph>> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if n < 4 || n > ceiling {
        return Err(Error::OrderOutOfRange { n, min: 4, max: ceiling });
    }
    let mut gen = Generator {
        n,
        adj: vec![Vec::with_capacity(3); n],
        seen: HashSet::new(),
        out: Vec::new(),
        limit: max_results.unwrap_or(usize::MAX),
    };
    gen.extend();
    Ok(gen.out)
}

struct Generator {
    n: usize,
    adj: Vec<Vec<usize>>,
    seen: HashSet<CanonicalForm>,
    out: Vec<CubicGraph>,
    limit: usize,
}

impl Generator {
    fn extend(&mut self) {
        if self.out.len() >= self.limit {
            return;
        }
        let Some(v) = (0..self.n).find(|&v| self.adj[v].len() < 3) else {
            self.finish();
            return;
        };
        if v > 0 && self.adj[v].is_empty() {
            // earlier vertices form a closed component
            return;
        }
        let floor = self.adj[v].iter().copied().filter(|&x| x > v).max().unwrap_or(v);
        let mut offered: Vec<Vec<usize>> = Vec::new();
        for w in floor + 1..self.n {
            if self.adj[w].len() == 3 {
                continue;
            }
            if self.adj[v].iter().any(|x| self.adj[w].contains(x)) {
                continue;
            }
            // swapping two candidates with the same neighborhood is an
            // automorphism of the partial graph fixing 0..=v
            let mut key = self.adj[w].clone();
            key.sort_unstable();
            if offered.contains(&key) {
                continue;
            }
            offered.push(key);
            self.adj[v].push(w);
            self.adj[w].push(v);
            self.extend();
            self.adj[v].pop();
            self.adj[w].pop();
        }
    }

    fn finish(&mut self) {
        let edges = (0..self.n)
            .flat_map(|u| self.adj[u].iter().filter(move |&&w| u < w).map(move |&w| (u, w)))
            .collect::<Vec<_>>();
        let g = CubicGraph::new(self.n, edges).expect("generator keeps graphs cubic and simple");
        if !g.is_connected() || g.four_cycles().is_empty() {
            return;
        }
        if self.seen.insert(g.canonical_form()) {
            self.out.push(g);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn small_orders() {
        let six = enumerate_cubic_girth4(6, None).unwrap();
        assert_eq!(six.len(), 1);
        assert_eq!(six[0].canonical_form(), named::k33().canonical_form());
        let eight = enumerate_cubic_girth4(8, None).unwrap();
        assert_eq!(eight.len(), 2);
        assert!(eight.iter().any(|g| g.canonical_form() == named::q3().canonical_form()));
        assert_eq!(enumerate_cubic_girth4(7, None), Err(Error::OddOrder(7)));
        assert!(enumerate_cubic_girth4(18, None).is_err());
    }

    #[test]
    fn known_counts_up_to_twelve() {
        // connected cubic graphs of girth >= 4 minus those of girth >= 5
        assert_eq!(enumerate_cubic_girth4(10, None).unwrap().len(), 5);
        assert_eq!(enumerate_cubic_girth4(12, None).unwrap().len(), 20);
    }

    #[test]
    fn max_results_caps_output() {
        assert_eq!(enumerate_cubic_girth4(12, Some(3)).unwrap().len(), 3);
    }
}
