mod common;

use std::collections::BTreeSet;

use etgc::coloring::Mode;
use etgc::graph::{enumerate_cubic_girth4, named};
use etgc::search::{find_etc, SearchOptions};
use etgc::CubicGraph;
use proptest::prelude::*;

fn sample_graphs() -> Vec<CubicGraph> {
    let mut out = vec![named::q3(), named::k33(), named::petersen(), named::prism(8).unwrap()];
    out.extend(enumerate_cubic_girth4(10, None).unwrap());
    out
}

fn relabeled(g: &CubicGraph, keys: &[u32]) -> CubicGraph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.sort_by_key(|&i| (keys[i % keys.len()], i));
    g.relabel(&perm).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_labels(idx in 0usize..9, keys in prop::collection::vec(any::<u32>(), 16)) {
        let graphs = sample_graphs();
        let g = &graphs[idx % graphs.len()];
        let h = relabeled(g, &keys);
        prop_assert_eq!(g.canonical_form(), h.canonical_form());
    }

    #[test]
    fn verdict_ignores_labels(keys in prop::collection::vec(any::<u32>(), 16)) {
        for g in [named::q3(), named::prism(8).unwrap(), named::prism(6).unwrap()] {
            let h = relabeled(&g, &keys);
            let a = find_etc(&g, Mode::Etgc, &SearchOptions::default()).unwrap();
            let b = find_etc(&h, Mode::Etgc, &SearchOptions::default()).unwrap();
            prop_assert_eq!(a.verdict, b.verdict);
            prop_assert_eq!(a.graph_id, b.graph_id);
        }
    }
}

#[test]
fn girth_cycles_match_brute_force() {
    for g in sample_graphs().into_iter().filter(|g| g.girth() == Some(4)) {
        let mut fast: Vec<[usize; 4]> = g
            .girth_cycles()
            .unwrap()
            .into_iter()
            .map(|c| {
                // rotate and reflect to the form the brute force emits
                let i = (0..4).min_by_key(|&i| c[i]).unwrap();
                let r = [c[i], c[(i + 1) % 4], c[(i + 2) % 4], c[(i + 3) % 4]];
                if r[1] < r[3] { r } else { [r[0], r[3], r[2], r[1]] }
            })
            .collect();
        fast.sort_unstable();
        let mut slow = common::brute_four_cycles(&g);
        slow.sort_unstable();
        assert_eq!(fast, slow);
    }
}

// All cubic graphs on `n` labeled vertices, up to isomorphism, generated
// by joining the lowest vertex that still lacks a neighbor, triangles
// rejected as they appear.
fn brute_cubic(n: usize) -> BTreeSet<etgc::CanonicalForm> {
    fn rec(n: usize, deg: &mut Vec<usize>, edges: &mut Vec<(usize, usize)>, out: &mut BTreeSet<etgc::CanonicalForm>) {
        let Some(v) = (0..n).find(|&v| deg[v] < 3) else {
            if let Ok(g) = CubicGraph::new(n, edges.iter().copied()) {
                if g.is_connected() && g.girth() == Some(4) {
                    out.insert(g.canonical_form());
                }
            }
            return;
        };
        for w in v + 1..n {
            let linked = |a: usize, b: usize| edges.contains(&(a.min(b), a.max(b)));
            let triangle = (0..n).any(|x| linked(v, x) && linked(w, x));
            if deg[w] < 3 && !linked(v, w) && !triangle {
                deg[v] += 1;
                deg[w] += 1;
                edges.push((v, w));
                rec(n, deg, edges, out);
                edges.pop();
                deg[v] -= 1;
                deg[w] -= 1;
            }
        }
    }
    // every graph has a labeling in which vertex 0 is adjacent to 1, 2, 3
    let mut out = BTreeSet::new();
    let mut deg = vec![0; n];
    deg[..4].copy_from_slice(&[3, 1, 1, 1]);
    rec(n, &mut deg, &mut vec![(0, 1), (0, 2), (0, 3)], &mut out);
    out
}

#[test]
fn enumeration_matches_brute_force_on_eight_vertices() {
    let fast: BTreeSet<_> = enumerate_cubic_girth4(8, None).unwrap().iter().map(|g| g.canonical_form()).collect();
    assert_eq!(fast.len(), 2);
    assert_eq!(fast, brute_cubic(8));
}

#[test]
fn enumeration_counts() {
    // connected cubic graphs of girth exactly 4
    let counts: Vec<usize> = [6, 8, 10, 12].iter().map(|&n| enumerate_cubic_girth4(n, None).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 2, 5, 20]);
}
