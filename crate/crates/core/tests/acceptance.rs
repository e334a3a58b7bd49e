//! Acceptance run: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines always reach stdout.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use etgc::coloring::{
    are_orthogonal, beta_edges, is_egc, is_etgc, is_perfect_stc, is_total_coloring, prism_egc, tpc_partition, Mode,
};
use etgc::families::{self, OCT_LEFT, TESS_LEFT, TESS_EXCHANGE_SITE};
use etgc::graph::{enumerate_cubic_girth4, named};
use etgc::ops::{exchange_cutout, extend, replay, spray_propagate, unfold_graph, Axis, Patch, SprayOutcome, SpraySeed, TraceStep};
use etgc::search::{self, find_etc, graph_id, HarnessOptions, SearchOptions, Summary, Verdict};
use etgc::{CubicGraph, Cutout, Identification, Result};

struct Outcome {
    pass: bool,
    detail: String,
    /// A failing sub-check that cannot be met by any implementation.
    known_unattainable: Option<String>,
}

fn ok(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into(), known_unattainable: None }
}

fn timed(limit: Duration, f: impl FnOnce() -> Result<Outcome>) -> Outcome {
    let start = Instant::now();
    let mut out = f().unwrap_or_else(|e| ok(false, format!("error: {e}")));
    let spent = start.elapsed();
    if spent > limit {
        out.pass = false;
        out.detail.push_str(&format!("; over the {limit:?} limit"));
    }
    out.detail.push_str(&format!("; {:.3} s", spent.as_secs_f64()));
    out
}

fn belts(inst: &families::NamedFamilyInstance) -> Vec<usize> {
    inst.map.as_ref().map(|m| m.trace_belts().iter().map(|b| b.len()).collect()).unwrap_or_default()
}

fn criterion_1() -> Result<Outcome> {
    let q3 = families::q3()?;
    let partner = q3.partner.clone().expect("q3 carries both colorings");
    let both = is_etgc(&q3.graph, &q3.assignment)? && is_etgc(&q3.graph, &partner)?;
    let orth = are_orthogonal(&q3.graph, &q3.assignment, &partner)?;
    let (q4, colors) = prism_egc(&q3.graph, &q3.assignment, &partner)?;
    let egc = is_egc(&q4, &colors)?;
    Ok(ok(both && orth && egc && q4.n() == 16, format!("both ETGC {both}, orthogonal {orth}, Q4 EGC {egc}")))
}

fn spray_completes(c: &Cutout) -> Result<bool> {
    let r = c.realize_full()?;
    let at = |p| r.vertex_of_point[c.point_index(p).unwrap()];
    let square = [at((0, 1)), at((1, 1)), at((1, 0)), at((0, 0))];
    for seed in SpraySeed::seed_patterns(square) {
        // propagation only: any undecided element would leave it Incomplete
        match spray_propagate(&r.map, &seed)?.0 {
            SprayOutcome::Complete(a) if is_etgc(r.map.graph(), &a)? => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

fn criterion_2() -> Outcome {
    let mut all = true;
    let mut notes = Vec::new();
    for j in 1..=6 {
        let o = timed(Duration::from_secs(1), || {
            let base = families::blank(&Cutout::from_grid(OCT_LEFT, Identification::X)?);
            let c = if j == 1 { base } else { extend(&base, j, Axis::X)? };
            Ok(ok(spray_completes(&c)?, ""))
        });
        all &= o.pass;
        let name = if j == 1 { "Q3".to_string() } else { format!("C{} x K2", 4 * j) };
        notes.push(format!("{name} {}{}", if o.pass { "ok" } else { "FAILED" }, o.detail));
    }
    ok(all, notes.join(", "))
}

fn criterion_3() -> Result<Outcome> {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let rep = search::harness_theorem_fo(14, &search::theorem_fo_fixtures()?, &HarnessOptions { jobs, budget: 50_000_000 })?;
    let judged: Vec<_> = rep.entries.iter().filter(|e| e.n % 4 != 0).collect();
    let exhausted = judged.iter().all(|e| e.verdict == Verdict::ExhaustedNone);
    let clean = rep.entries.iter().all(|e| !e.counterexample) && rep.summary == Summary::Consistent;
    Ok(ok(
        exhausted && clean && !judged.is_empty(),
        format!("{} graphs with n not divisible by 4 all exhausted-none: {exhausted}; summary {:?}", judged.len(), rep.summary),
    ))
}

fn criterion_4() -> Result<Outcome> {
    let mut notes = Vec::new();
    let mut all = true;
    for l in [6, 7, 9, 10] {
        let c = Cutout::from_grid(&common::cylinder_grid(l), Identification::X)?;
        let r = c.realize_full()?;
        let at = |p| r.vertex_of_point[c.point_index(p).unwrap()];
        let square = [at((0, 1)), at((1, 1)), at((1, 0)), at((0, 0))];
        let mut conflicts = 0;
        for seed in SpraySeed::seed_patterns(square) {
            conflicts += spray_propagate(&r.map, &seed)?.0.is_conflict() as usize;
        }
        all &= conflicts == 2;
        notes.push(format!("l={l}: {conflicts}/2 conflict"));
    }
    Ok(ok(all, notes.join(", ")))
}

fn criterion_5() -> Result<Outcome> {
    let mut all = true;
    let mut notes = Vec::new();
    for g in 0..=4 {
        let inst = families::gamma(g)?;
        let genus = inst.map.as_ref().map(|m| m.euler_genus()).transpose()?;
        let b = belts(&inst);
        let good = is_etgc(&inst.graph, &inst.assignment)?
            && inst.graph.n() == 16 * g + 8
            && genus == Some(g)
            && !b.is_empty()
            && b.iter().all(|l| l % 4 == 0);
        all &= good;
        notes.push(format!("g={g}: n={} genus={genus:?} ok={good}", inst.graph.n()));
    }
    Ok(ok(all, notes.join(", ")))
}

fn criterion_6() -> Result<Outcome> {
    let mut attainable = true;
    let mut tpc_any = false;
    let mut notes = Vec::new();
    for g in 0..=3 {
        let inst = families::g_odd(g)?;
        let stc = is_perfect_stc(&inst.graph, &inst.assignment)?;
        let tpc = tpc_partition(&inst.graph, &inst.assignment).is_some();
        let reduced = families::g_odd_reduced(&inst)?;
        let tc = is_total_coloring(&inst.graph, &reduced)? && beta_edges(&inst.graph, &reduced).is_empty();
        attainable &= stc && tc;
        tpc_any |= tpc;
        notes.push(format!("g={g}: perfect STC {stc}, reduced TC {tc}, TPC partition {tpc}"));
    }
    let six = belts(&families::g_odd(0)?).contains(&6);
    let fourteen = belts(&families::g_odd(1)?).contains(&14);
    attainable &= six && fourteen;
    notes.push(format!("G_1 6-belt {six}, G_3 14-belt {fourteen}"));
    let mut out = ok(attainable && tpc_any, notes.join(", "));
    if attainable && !tpc_any {
        out.known_unattainable = Some(
            "no cubic graph has two total perfect codes partitioning its vertices (each vertex would need \
             exactly one neighbor in each class, i.e. degree 2)"
                .into(),
        );
    }
    Ok(out)
}

fn criterion_7() -> Result<Outcome> {
    // [q3, extend x2] against the C8 prism
    let steps: Vec<TraceStep> =
        serde_json::from_str(r#"[{"op":"construct","family":"q3"},{"op":"extend","copies":2,"axis":"x"}]"#).unwrap();
    let s = replay(&steps)?;
    let extend_ok = s.graph.canonical_form() == named::prism(8)?.canonical_form();

    let tess = Cutout::from_grid(TESS_LEFT, Identification::Both)?;
    let swapped = exchange_cutout(&tess, TESS_EXCHANGE_SITE)?.realize_full()?;
    let middle = families::octaedro_middle()?;
    let exchange_ok = swapped.map.graph().canonical_form() == middle.graph.canonical_form()
        && is_etgc(swapped.map.graph(), &swapped.assignment)?;

    // oct3: the cutout-level unfolding carries an ETGC and agrees with the
    // graph-level ladder insertion
    let unfolded = families::oct3_unfolded()?;
    let c = Cutout::from_grid(families::OCT3_LEFT, Identification::X)?;
    let r = c.realize_full()?;
    let at = |p| r.vertex_of_point[c.point_index(p).unwrap()];
    let (h, _) = unfold_graph(r.map.graph(), None, [at((2, 0)), at((2, 1)), at((3, 1)), at((3, 0))], &Patch::ladder(3)?)?;
    let oct3_ok = h.canonical_form() == unfolded.graph.canonical_form() && is_etgc(&unfolded.graph, &unfolded.assignment)?;

    // tess right: reached by extension and exchanges (a single unfolding
    // adds 4(l - 1) vertices, never the 16 that separate the two drawings)
    let built = families::tess_right()?;
    let drawn = Cutout::from_grid(families::TESS_RIGHT, Identification::Both)?.realize_full()?;
    let tess_right_ok = built.graph.canonical_form() == drawn.map.graph().canonical_form()
        && is_etgc(drawn.map.graph(), &drawn.assignment)?;

    Ok(ok(
        extend_ok && exchange_ok && oct3_ok && tess_right_ok,
        format!(
            "extend {extend_ok}, tess exchange {exchange_ok}, oct3 unfold {oct3_ok}, tess right via extension and exchanges {tess_right_ok}"
        ),
    ))
}

fn criterion_8() -> Result<Outcome> {
    let mut graphs: Vec<CubicGraph> = vec![named::k4(), named::petersen()];
    for n in [6, 8, 10, 12] {
        graphs.extend(enumerate_cubic_girth4(n, None)?);
    }
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/oracle_counts.json");
    let frozen: BTreeMap<String, serde_json::Value> = serde_json::from_str(&std::fs::read_to_string(path).expect("frozen oracle counts")).unwrap();
    let mut agree = 0;
    for g in &graphs {
        let naive = common::naive_count(g);
        let mut good = true;
        for (mode, labeled) in [(Mode::Etc, naive.etc), (Mode::Etgc, naive.etgc)] {
            if mode == Mode::Etgc && g.girth() != Some(4) {
                continue;
            }
            let v = find_etc(g, mode, &SearchOptions::default())?.verdict;
            good &= (v == Verdict::CertificateFound) == (labeled > 0) && v != Verdict::Timeout;
        }
        let f = &frozen[&graph_id(&g.canonical_form())];
        good &= f["etc"] == naive.etc;
        agree += good as usize;
    }
    Ok(ok(agree == graphs.len(), format!("{agree}/{} fixtures agree with the oracle and the frozen counts", graphs.len())))
}

fn criterion_9() -> Result<Outcome> {
    let fixtures = search::theorem_fo_fixtures()?;
    let run = |jobs| search::harness_theorem_fo(12, &fixtures, &HarnessOptions { jobs, budget: 50_000_000 })?.to_json_lines();
    let a = run(1)?;
    let harness_ok = a == run(4)? && a == run(1)?;
    let toroid = |jobs| {
        search::harness_toroid_conjecture(&search::torus_grid_fixtures(4, 4)?, &HarnessOptions { jobs, budget: 1_000_000 })?
            .to_json_lines()
    };
    let toroid_ok = toroid(1)? == toroid(3)?;
    let doc = |f: &str, p| families::construct(f, p).map(|i| etgc::io::GraphDocument::from_instance(&i).to_json());
    let docs_ok = doc("gamma", 2)?? == doc("gamma", 2)?? && doc("godd", 1)?? == doc("godd", 1)??;
    Ok(ok(harness_ok && toroid_ok && docs_ok, format!("theorem-fo {harness_ok}, toroid grid {toroid_ok}, documents {docs_ok}")))
}

fn main() {
    let results = [
        timed(Duration::from_secs(1), criterion_1),
        criterion_2(),
        timed(Duration::from_secs(600), criterion_3),
        timed(Duration::from_secs(5), criterion_4),
        timed(Duration::from_secs(5), criterion_5),
        timed(Duration::from_secs(5), criterion_6),
        timed(Duration::from_secs(5), criterion_7),
        timed(Duration::from_secs(60), criterion_8),
        timed(Duration::from_secs(60), criterion_9),
    ];
    let mut unexpected = 0;
    for (i, r) in results.iter().enumerate() {
        println!("criterion {}: {} ({})", i + 1, if r.pass { "PASS" } else { "FAIL" }, r.detail);
        match (&r.known_unattainable, r.pass) {
            (_, true) => {}
            (Some(why), false) => println!("  known unattainable: {why}"),
            (None, false) => unexpected += 1,
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed");
        std::process::exit(1);
    }
}
