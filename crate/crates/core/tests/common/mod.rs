//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls the library's validators or search.

#![allow(dead_code)]

use etgc::CubicGraph;

/// All 4-cycles as sorted vertex quadruples, found by trying every
/// ordered quadruple.
pub fn brute_four_cycles(g: &CubicGraph) -> Vec<[usize; 4]> {
    let n = g.n();
    let adj = |a: usize, b: usize| g.neighbors(a).contains(&b);
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
                    if distinct && a < b && a < c && a < d && b < d && adj(a, b) && adj(b, c) && adj(c, d) && adj(d, a) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// Solutions counted by [`naive_count`].
pub struct NaiveCount {
    pub etc: u64,
    pub etgc: u64,
}

/// Every total 4-coloring, checked at the leaves against the definitions:
/// each vertex color class dominates each closed neighborhood exactly once
/// (ETC) and additionally every 4-cycle is rainbow on vertices and on
/// edges (ETGC). Counts are of labeled colorings, no symmetry removed.
pub fn naive_count(g: &CubicGraph) -> NaiveCount {
    let n = g.n();
    let m = g.m();
    let edges = g.edges().to_vec();
    let cycles = brute_four_cycles(g);
    let mut vc = vec![u8::MAX; n];
    let mut ec = vec![u8::MAX; m];
    let mut out = NaiveCount { etc: 0, etgc: 0 };

    fn leaf(g: &CubicGraph, vc: &[u8], ec: &[u8], cycles: &[[usize; 4]], out: &mut NaiveCount) {
        for v in 0..g.n() {
            let mut hits = [0; 4];
            hits[vc[v] as usize] += 1;
            for &w in g.neighbors(v) {
                hits[vc[w] as usize] += 1;
            }
            if hits != [1, 1, 1, 1] {
                return;
            }
        }
        out.etc += 1;
        let distinct = |xs: [u8; 4]| (0..4).all(|i| (i + 1..4).all(|j| xs[i] != xs[j]));
        let ok = cycles.iter().all(|c| {
            let e = |i: usize| ec[g.edge_between(c[i], c[(i + 1) % 4]).unwrap()];
            distinct(c.map(|v| vc[v])) && distinct([e(0), e(1), e(2), e(3)])
        });
        if ok && !cycles.is_empty() {
            out.etgc += 1;
        }
    }

    // elements 0..n are vertices, n..n+m are edges
    fn rec(
        k: usize,
        g: &CubicGraph,
        edges: &[(usize, usize)],
        vc: &mut Vec<u8>,
        ec: &mut Vec<u8>,
        cycles: &[[usize; 4]],
        out: &mut NaiveCount,
    ) {
        let n = g.n();
        if k == n + edges.len() {
            leaf(g, vc, ec, cycles, out);
            return;
        }
        for c in 0..4u8 {
            let ok = if k < n {
                g.neighbors(k).iter().all(|&w| vc[w] != c)
            } else {
                let (u, v) = edges[k - n];
                vc[u] != c
                    && vc[v] != c
                    && g.incident(u).iter().chain(g.incident(v)).all(|&f| ec[f] != c)
            };
            if ok {
                if k < n {
                    vc[k] = c;
                } else {
                    ec[k - n] = c;
                }
                rec(k + 1, g, edges, vc, ec, cycles, out);
                if k < n {
                    vc[k] = u8::MAX;
                } else {
                    ec[k - n] = u8::MAX;
                }
            }
        }
    }
    rec(0, g, &edges, &mut vc, &mut ec, &cycles, &mut out);
    out
}

/// `C_l □ K_2` drawn as an uncolored cylinder of width `l`.
pub fn cylinder_grid(l: usize) -> String {
    let row = vec!["*"; l + 1].join(" - ");
    let rungs = vec!["|"; l + 1].join(" ");
    format!("{row}\n{rungs}\n{row}")
}

/// Labeled ETC count by a second route: vertex colorings in which every
/// closed neighborhood is rainbow, each extended by counting the proper
/// edge colorings that avoid both end colors.
pub fn perfect_code_count(g: &CubicGraph) -> u64 {
    let mut vc = vec![u8::MAX; g.n()];
    let mut total = 0;

    fn edges_extend(g: &CubicGraph, vc: &[u8], ec: &mut Vec<u8>, k: usize) -> u64 {
        if k == g.m() {
            return 1;
        }
        let (u, v) = g.edges()[k];
        let mut sum = 0;
        for c in 0..4u8 {
            if c != vc[u] && c != vc[v] && g.incident(u).iter().chain(g.incident(v)).all(|&f| ec[f] != c) {
                ec[k] = c;
                sum += edges_extend(g, vc, ec, k + 1);
                ec[k] = u8::MAX;
            }
        }
        sum
    }

    fn rec(g: &CubicGraph, vc: &mut Vec<u8>, v: usize, total: &mut u64) {
        if v == g.n() {
            *total += edges_extend(g, vc, &mut vec![u8::MAX; g.m()], 0);
            return;
        }
        for c in 0..4u8 {
            // distance at most 2 from v
            let near = g.neighbors(v).iter().any(|&w| vc[w] == c || g.neighbors(w).iter().any(|&x| x != v && vc[x] == c));
            if !near {
                vc[v] = c;
                rec(g, vc, v + 1, total);
                vc[v] = u8::MAX;
            }
        }
    }
    rec(g, &mut vc, 0, &mut total);
    total
}
