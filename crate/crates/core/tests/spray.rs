mod common;

use etgc::coloring::is_etgc;
use etgc::ops::{spray_propagate, SprayOutcome, SpraySeed};
use etgc::{Cutout, Identification};

fn spray_cylinder(l: usize) -> (etgc::CubicGraph, Vec<SprayOutcome>) {
    let c = Cutout::from_grid(&common::cylinder_grid(l), Identification::X).unwrap();
    let r = c.realize_full().unwrap();
    let at = |p| r.vertex_of_point[c.point_index(p).unwrap()];
    let square = [at((0, 1)), at((1, 1)), at((1, 0)), at((0, 0))];
    let outcomes = SpraySeed::seed_patterns(square)
        .iter()
        .map(|seed| spray_propagate(&r.map, seed).unwrap().0)
        .collect();
    (r.map.graph().clone(), outcomes)
}

#[test]
fn forbidden_cylinder_lengths_conflict() {
    for l in [6, 7, 9, 10] {
        for outcome in spray_cylinder(l).1 {
            assert!(outcome.is_conflict(), "C{l} x K2: {outcome:?}");
        }
    }
}

#[test]
fn cylinders_of_length_divisible_by_four_complete() {
    for l in [4, 8, 12, 16] {
        let (g, outcomes) = spray_cylinder(l);
        assert_eq!(g.canonical_form(), etgc::graph::named::prism(l).unwrap().canonical_form());
        for outcome in outcomes {
            match outcome {
                SprayOutcome::Complete(a) => assert!(is_etgc(&g, &a).unwrap(), "C{l} x K2"),
                other => panic!("C{l} x K2: {other:?}"),
            }
        }
    }
}
