mod common;

use std::collections::BTreeMap;
use std::path::PathBuf;

use etgc::coloring::Mode;
use etgc::graph::{enumerate_cubic_girth4, named};
use etgc::search::{count_etcs_up_to_color_permutation, find_etc, graph_id, SearchOptions, Verdict};
use etgc::CubicGraph;
use serde::{Deserialize, Serialize};

use common::naive_count;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Frozen {
    n: usize,
    /// Labeled ETCs (no color symmetry removed).
    etc: u64,
    /// Labeled ETGCs; absent when the graph does not have girth 4.
    etgc: Option<u64>,
}

fn fixtures() -> Vec<CubicGraph> {
    let mut out = vec![named::k4(), named::petersen()];
    for n in [6, 8, 10, 12] {
        out.extend(enumerate_cubic_girth4(n, None).unwrap());
    }
    out
}

fn frozen_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/oracle_counts.json")
}

fn library_agrees(g: &CubicGraph, mode: Mode, labeled: u64) {
    let count = count_etcs_up_to_color_permutation(g, mode, 10_000_000).unwrap();
    assert!(count.exact);
    // every ETC of a cubic graph uses all four colors, so the symmetric
    // group acts freely
    assert_eq!(count.count * 24, labeled, "{mode:?} count on {:?}", g.edges());
    let r = find_etc(g, mode, &SearchOptions::default()).unwrap();
    let want = if labeled > 0 { Verdict::CertificateFound } else { Verdict::ExhaustedNone };
    assert_eq!(r.verdict, want);
}

#[test]
fn search_matches_naive_oracle_and_frozen_counts() {
    let mut got = BTreeMap::new();
    for g in fixtures() {
        let naive = naive_count(&g);
        let girth4 = g.girth() == Some(4);
        library_agrees(&g, Mode::Etc, naive.etc);
        if girth4 {
            library_agrees(&g, Mode::Etgc, naive.etgc);
        }
        let id = graph_id(&g.canonical_form());
        let entry = Frozen { n: g.n(), etc: naive.etc, etgc: girth4.then_some(naive.etgc) };
        assert!(got.insert(id, entry).is_none(), "duplicate fixture");
    }
    let path = frozen_path();
    if std::env::var_os("ETGC_BLESS").is_some() {
        std::fs::write(&path, serde_json::to_string_pretty(&got).unwrap() + "\n").unwrap();
    }
    let text = std::fs::read_to_string(&path).expect("frozen counts (set ETGC_BLESS=1 to write)");
    let frozen: BTreeMap<String, Frozen> = serde_json::from_str(&text).unwrap();
    assert_eq!(got, frozen);
}

#[test]
fn known_small_verdicts() {
    let none = |g: &CubicGraph, mode| find_etc(g, mode, &SearchOptions::default()).unwrap().verdict;
    // K4 needs five colors for any total coloring
    assert_eq!(none(&named::k4(), Mode::Etc), Verdict::ExhaustedNone);
    assert_eq!(none(&named::k33(), Mode::Etc), Verdict::ExhaustedNone);
    assert_eq!(none(&named::petersen(), Mode::Etc), Verdict::ExhaustedNone);
    assert_eq!(none(&named::q3(), Mode::Etgc), Verdict::CertificateFound);
}

#[test]
fn counts_on_larger_graphs_match_the_perfect_code_oracle() {
    use etgc::families;
    let cases = [
        ("C8 x K2", named::prism(8).unwrap(), 2),
        ("C12 x K2", named::prism(12).unwrap(), 2),
        ("tess", families::truncated_square_tiling().unwrap().graph, 8),
        ("C6 x K2", named::prism(6).unwrap(), 0),
    ];
    for (name, g, frozen) in cases {
        let labeled = common::perfect_code_count(&g);
        let count = count_etcs_up_to_color_permutation(&g, Mode::Etc, 10_000_000).unwrap();
        assert!(count.exact);
        assert_eq!(count.count * 24, labeled, "{name}");
        assert_eq!(count.count, frozen, "{name}");
    }
}
