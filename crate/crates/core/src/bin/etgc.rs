use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use etgc::coloring::{
    is_egc, is_etc, is_etgc, is_perfect_stc, is_stc, is_total_coloring, is_vegc, tpc_partition, Mode,
};
use etgc::error::Error;
use etgc::families;
use etgc::graph::SimpleGraph;
use etgc::io::{to_dot, to_svg, GraphDocument, MAIN};
use etgc::ops::{replay, TraceStep};
use etgc::search::{self, HarnessOptions, HarnessReport, SearchOptions, Summary, Verdict};

#[derive(Parser)]
#[command(name = "etgc", version, about = "Efficient total colorings of cubic graphs of girth 4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Tc,
    Etc,
    Vegc,
    Etgc,
    Egc,
    Stc,
    PerfectStc,
    Tpc,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMode {
    Etc,
    Etgc,
}

impl From<CliMode> for Mode {
    fn from(m: CliMode) -> Mode {
        match m {
            CliMode::Etc => Mode::Etc,
            CliMode::Etgc => Mode::Etgc,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum HarnessKind {
    TheoremFo,
    Toroid,
    Alfin,
    Con1,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an assignment of a graph document.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        check: Check,
        /// Assignment to check (default: `main`, or the only one).
        #[arg(long)]
        assignment: Option<String>,
    },
    /// Build a named family instance.
    Construct {
        /// q3, prism, tess, tess-right, oct3, octaedro, gamma, godd, klein
        family: String,
        #[arg(default_value_t = 0)]
        param: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a construction trace (JSON list of steps).
    Apply {
        trace: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive search on a graph document.
    Search {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "etc")]
        mode: CliMode,
        #[arg(long, default_value_t = SearchOptions::default().budget)]
        budget: u64,
        /// Count solutions up to color permutation instead.
        #[arg(long)]
        count: bool,
        /// Search an orthogonal partner (of the document's main assignment
        /// when it has one).
        #[arg(long)]
        orthogonal: bool,
    },
    /// Run a hypothesis harness; JSON lines on stdout, summary on stderr.
    Harness {
        #[arg(value_enum)]
        kind: HarnessKind,
        /// Order bound (default: 14 for theorem-fo, 16 for con1, 40 for alfin).
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = SearchOptions::default().budget)]
        budget: u64,
        /// Genus for the alfin harness.
        #[arg(long, default_value_t = 1)]
        genus: usize,
        /// Add the torus grid drawings `WxH` to the toroid fixtures.
        #[arg(long)]
        grid: Option<String>,
    },
    /// Render a document as DOT or SVG.
    Export {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        assignment: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

// Exit 1: semantic failure. Exit 2: the input could not be used.
enum Failure {
    Semantic(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Document(_) | Error::UnknownFamily(_) => Failure::Input(e.to_string()),
            other => Failure::Semantic(other.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<GraphDocument, Failure> {
    GraphDocument::from_json(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

// A closed pipe (say, output piped into `head`) is not an error.
fn stdout(text: &str) {
    let mut lock = io::stdout().lock();
    let _ = lock.write_all(text.as_bytes()).and_then(|_| {
        if text.ends_with('\n') {
            Ok(())
        } else {
            lock.write_all(b"\n")
        }
    });
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            stdout(text);
            Ok(())
        }
    }
}

fn verify(file: &Path, check: Check, name: Option<&str>) -> Outcome {
    let doc = load(file)?;
    let g = doc.graph()?;
    let a = match name {
        Some(n) => doc.assignment(n)?,
        None => doc.primary_assignment()?,
    };
    let (label, pass) = match check {
        Check::Tc => ("tc", is_total_coloring(&g, a)?),
        Check::Etc => ("etc", is_etc(&g, a)?),
        Check::Vegc => ("vegc", is_vegc(&g, a)?),
        Check::Etgc => ("etgc", is_etgc(&g, a)?),
        Check::Egc => ("egc", is_egc(&SimpleGraph::from(&g), &a.edge_colors()?)?),
        Check::Stc => ("stc", is_stc(&g, a)?),
        Check::PerfectStc => ("perfect-stc", is_perfect_stc(&g, a)?),
        Check::Tpc => ("tpc", tpc_partition(&g, a).is_some()),
    };
    stdout(&json!({ "file": file.display().to_string(), "check": label, "pass": pass }).to_string());
    Ok(pass)
}

fn construct(family: &str, param: usize, out: Option<&Path>) -> Outcome {
    let inst = families::construct(family, param).map_err(|e| Failure::Input(e.to_string()))?;
    let mut doc = GraphDocument::from_instance(&inst);
    if family == "godd" {
        let sched = families::g_odd_schedule_names(param);
        doc.metadata.insert("reduction_schedule".into(), json!(sched));
        let reduced = families::g_odd_reduced(&inst)?;
        doc.assignments.insert("reduced".into(), reduced);
    }
    emit(&doc.to_json()?, out)?;
    Ok(true)
}

fn apply(trace: &Path, out: Option<&Path>) -> Outcome {
    let steps: Vec<TraceStep> = serde_json::from_str(&read(trace)?).map_err(|e| Failure::Input(format!("{}: {e}", trace.display())))?;
    let state = replay(&steps).map_err(|e| Failure::Semantic(e.to_string()))?;
    let mut doc = match &state.map {
        Some(m) => GraphDocument::from_map(m),
        None => GraphDocument::from_graph(&state.graph),
    };
    doc.cutout = state.cutout.map(etgc::io::CutoutBlock::new);
    doc.assignments.insert(MAIN.into(), state.assignment);
    emit(&doc.to_json()?, out)?;
    Ok(true)
}

fn run_search(file: &Path, mode: Mode, budget: u64, count: bool, orthogonal: bool) -> Outcome {
    let doc = load(file)?;
    let g = doc.graph()?;
    if count {
        let r = search::count_etcs_up_to_color_permutation(&g, mode, budget)?;
        stdout(&serde_json::to_string(&r).map_err(|e| Failure::Semantic(e.to_string()))?);
        return Ok(r.exact);
    }
    let r = if orthogonal {
        search::find_orthogonal_pair(&g, doc.assignments.get(MAIN), mode, budget)?
    } else {
        search::find_etc(&g, mode, &SearchOptions { budget, ..SearchOptions::default() })?
    };
    stdout(&serde_json::to_string(&r).map_err(|e| Failure::Semantic(e.to_string()))?);
    eprintln!("{}: {:?} after {} nodes in {:?}", r.graph_id, r.verdict, r.nodes, r.elapsed);
    Ok(r.verdict != Verdict::Timeout)
}

fn harness(kind: HarnessKind, nmax: Option<usize>, jobs: usize, budget: u64, genus: usize, grid: Option<&str>) -> Outcome {
    let opts = HarnessOptions { jobs, budget };
    let nmax = nmax.unwrap_or(match kind {
        HarnessKind::TheoremFo => 14,
        HarnessKind::Con1 => 16,
        _ => 40,
    });
    let report: HarnessReport = match kind {
        HarnessKind::TheoremFo => search::harness_theorem_fo(nmax, &search::theorem_fo_fixtures()?, &opts)?,
        HarnessKind::Toroid => {
            let mut fixtures = search::toroid_fixtures()?;
            if let Some(dims) = grid {
                let parsed = dims.split_once('x').and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)));
                let (w, h) = parsed.ok_or_else(|| Failure::Input(format!("grid {dims}: expected WxH")))?;
                fixtures.extend(search::torus_grid_fixtures(w, h).map_err(|e| Failure::Input(e.to_string()))?);
            }
            search::harness_toroid_conjecture(&fixtures, &opts)?
        }
        HarnessKind::Alfin => search::harness_alfin(genus, nmax, &search::alfin_fixtures(genus)?, &opts)?,
        HarnessKind::Con1 => search::harness_con1_coverage(nmax, &search::con1_reached(nmax)?, &opts)?,
    };
    stdout(&report.to_json_lines()?);
    let counter = report.entries.iter().filter(|e| e.counterexample).count();
    eprintln!(
        "{:?}: {} entries, {} in population, {} counterexample(s); summary {:?}",
        report.hypothesis,
        report.entries.len(),
        report.entries.iter().filter(|e| e.in_population).count(),
        counter,
        report.summary
    );
    if let Some(n) = report.smallest_candidate {
        eprintln!("smallest candidate order (lower-bound exploration, not an answer): {n}");
    }
    Ok(report.summary != Summary::CounterexampleFound)
}

fn export(file: &Path, format: Format, name: Option<&str>, out: Option<&Path>) -> Outcome {
    let doc = load(file)?;
    let a = match name {
        Some(n) => Some(doc.assignment(n)?),
        None => doc.primary_assignment().ok(),
    };
    let text = match format {
        Format::Dot => to_dot(&doc, a)?,
        Format::Svg => to_svg(&doc, a).map_err(|e| Failure::Semantic(e.to_string()))?,
    };
    emit(&text, out)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Verify { file, check, assignment } => verify(&file, check, assignment.as_deref()),
        Command::Construct { family, param, out } => construct(&family, param, out.as_deref()),
        Command::Apply { trace, out } => apply(&trace, out.as_deref()),
        Command::Search { file, mode, budget, count, orthogonal } => run_search(&file, mode.into(), budget, count, orthogonal),
        Command::Harness { kind, nmax, jobs, budget, genus, grid } => harness(kind, nmax, jobs, budget, genus, grid.as_deref()),
        Command::Export { file, format, assignment, out } => export(&file, format, assignment.as_deref(), out.as_deref()),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Semantic(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("input error: {m}");
            ExitCode::from(2)
        }
    }
}
