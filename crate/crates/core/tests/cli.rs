use std::path::PathBuf;
use std::process::{Command, Output};

use etgc::graph::named;
use etgc::io::GraphDocument;

fn etgc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_etgc")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, text: &str) -> String {
    let p = scratch(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn construct_then_verify() {
    let out = scratch("q3.json");
    let path = out.to_str().unwrap();
    assert_eq!(code(&etgc(&["construct", "q3", "--out", path])), 0);
    for check in ["tc", "etc", "vegc", "etgc"] {
        assert_eq!(code(&etgc(&["verify", path, "--check", check])), 0, "{check}");
    }
    assert_eq!(code(&etgc(&["verify", path, "--check", "etc", "--assignment", "partner"])), 0);
    // the two vertex classes of an ETC are not total perfect codes
    assert_eq!(code(&etgc(&["verify", path, "--check", "tpc"])), 1);
}

#[test]
fn odd_family_carries_its_reduction() {
    let out = scratch("godd1.json");
    let path = out.to_str().unwrap();
    assert_eq!(code(&etgc(&["construct", "godd", "1", "--out", path])), 0);
    assert_eq!(code(&etgc(&["verify", path, "--check", "perfect-stc"])), 0);
    assert_eq!(code(&etgc(&["verify", path, "--check", "tc", "--assignment", "reduced"])), 0);
    let doc = GraphDocument::from_json(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert!(doc.metadata.contains_key("reduction_schedule"));
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(code(&etgc(&["construct", "nope"])), 2);
    assert_eq!(code(&etgc(&["construct", "prism", "0"])), 2);
    assert_eq!(code(&etgc(&["verify", "/nonexistent.json", "--check", "etc"])), 2);
    let bad = write("bad.json", "{\"format_version\": 99}");
    assert_eq!(code(&etgc(&["verify", &bad, "--check", "etc"])), 2);
    assert_eq!(code(&etgc(&["search"])), 2);
}

#[test]
fn failing_trace_step_is_named() {
    let trace = write(
        "bad-trace.json",
        r#"[{"op":"construct","family":"q3"},{"op":"exchange","corners":[[0,0],[0,1],[1,1],[1,0]]}]"#,
    );
    let o = etgc(&["apply", &trace]);
    assert_eq!(code(&o), 1);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("step 1 (exchange)"), "{err}");
}

#[test]
fn trace_replay_succeeds() {
    let trace = write("good-trace.json", r#"[{"op":"construct","family":"q3"},{"op":"extend","copies":2,"axis":"x"}]"#);
    let out = scratch("oct2.json");
    assert_eq!(code(&etgc(&["apply", &trace, "--out", out.to_str().unwrap()])), 0);
    let doc = GraphDocument::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc.n, 16);
}

#[test]
fn export_needs_a_drawing_for_svg() {
    let bare = write("bare.json", &GraphDocument::from_graph(&named::q3()).to_json().unwrap());
    assert_eq!(code(&etgc(&["export", &bare, "--format", "dot"])), 0);
    assert_eq!(code(&etgc(&["export", &bare, "--format", "svg"])), 1);
    let drawn = scratch("tess.json");
    assert_eq!(code(&etgc(&["construct", "tess", "--out", drawn.to_str().unwrap()])), 0);
    let o = etgc(&["export", drawn.to_str().unwrap(), "--format", "svg"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("<svg"));
}

#[test]
fn search_reports() {
    let out = scratch("prism2.json");
    let path = out.to_str().unwrap();
    assert_eq!(code(&etgc(&["construct", "prism", "2", "--out", path])), 0);
    let o = etgc(&["search", path, "--mode", "etgc", "--count"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 2);
    let o = etgc(&["search", path, "--mode", "etgc", "--budget", "0"]);
    assert_eq!(code(&o), 1, "a timeout is a failure");
    let o = etgc(&["search", path, "--orthogonal"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn harness_output_is_independent_of_jobs() {
    let run = |jobs: &str| etgc(&["harness", "theorem-fo", "--nmax", "12", "--jobs", jobs]);
    let (a, b, c) = (run("1"), run("4"), run("1"));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    for line in String::from_utf8_lossy(&a.stdout).lines() {
        serde_json::from_str::<serde_json::Value>(line).unwrap();
    }
}

#[test]
fn toroid_grid_candidates_are_reported() {
    let o = etgc(&["harness", "toroid", "--grid", "4x4"]);
    assert_eq!(code(&o), 1);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.lines().any(|l| l.contains("\"counterexample\":true")));
    assert_eq!(code(&etgc(&["harness", "toroid", "--grid", "4x5"])), 2);
    assert_eq!(code(&etgc(&["harness", "toroid"])), 0);
}
