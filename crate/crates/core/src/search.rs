//! Exact search for ETCs and ETGCs, and the harnesses built on it.
//!
//! A complete assignment is an ETC (or ETGC) exactly when it properly
//! colors the conflict graph with four colors, so the search is a
//! backtracking 4-coloring of that graph with forward checking. Branching
//! follows a fixed order (vertices in BFS order from vertex 0, then their
//! incident edges) and tries colors in increasing order. The node budget
//! counts branching decisions, which keeps reports independent of the
//! machine they ran on.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{is_etc, is_etgc, ConflictGraph, Mode, TotalAssignment};
use crate::error::{Error, Result};
use crate::graph::{enumerate_cubic_girth4, CanonicalForm, CubicGraph};
use crate::maps::{CombinatorialMap, Cutout};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    /// Maximum number of branching nodes before giving up.
    pub budget: u64,
    /// Reject partial assignments with more than `n / 4` vertices of one
    /// color.
    pub cardinality_pruning: bool,
    /// Fix vertex 0 to color 0 and its neighbors to 1, 2, 3.
    pub symmetry_breaking: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: 50_000_000, cardinality_pruning: true, symmetry_breaking: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CertificateFound,
    ExhaustedNone,
    Timeout,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Elements colored because a single value remained.
    pub forced: u64,
    /// Branches closed by an empty domain or the cardinality bound.
    pub dead_ends: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub graph_id: String,
    pub canonical_form: CanonicalForm,
    pub mode: Mode,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<TotalAssignment>,
    /// For orthogonal-pair searches: the assignment the certificate is
    /// orthogonal to.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub base: Option<TotalAssignment>,
    pub nodes: u64,
    pub stats: SearchStats,
    /// Wall-clock time; left out of serialized reports so they stay
    /// byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Stable identifier of a graph: `n` and the graph6 string of its
/// canonical form.
pub fn graph_id(cf: &CanonicalForm) -> String {
    format!("n{}:{}", cf.n, cf.graph6())
}

#[derive(Clone)]
struct State {
    dom: Vec<u8>,
    done: Vec<bool>,
    counts: [usize; 4],
}

struct Solver<'a> {
    cg: &'a ConflictGraph,
    n: usize,
    order: Vec<usize>,
    limit: Option<usize>,
    budget: u64,
    nodes: u64,
    stats: SearchStats,
    timed_out: bool,
}

impl<'a> Solver<'a> {
    fn new(g: &CubicGraph, cg: &'a ConflictGraph, opts: &SearchOptions) -> Self {
        let n = g.n();
        let mut order: Vec<usize> = g.bfs_order(0);
        let mut seen = vec![false; g.m()];
        for v in g.bfs_order(0) {
            for &e in g.incident(v) {
                if !seen[e] {
                    seen[e] = true;
                    order.push(n + e);
                }
            }
        }
        Solver {
            cg,
            n,
            order,
            limit: opts.cardinality_pruning.then_some(n / 4),
            budget: opts.budget,
            nodes: 0,
            stats: SearchStats::default(),
            timed_out: false,
        }
    }

    fn fresh(&mut self, dom: Vec<u8>) -> Option<State> {
        let mut st = State { done: vec![false; dom.len()], dom, counts: [0; 4] };
        if st.dom.contains(&0) {
            return None;
        }
        let singles: Vec<usize> = (0..st.dom.len()).filter(|&x| st.dom[x].count_ones() == 1).collect();
        for &x in &singles {
            if !self.settle(&mut st, x) {
                self.stats.dead_ends += 1;
                return None;
            }
        }
        self.stats.forced += st.done.iter().filter(|&&d| d).count() as u64 - singles.len() as u64;
        Some(st)
    }

    // Marks `x` (whose domain is a single color) as colored and propagates.
    fn settle(&self, st: &mut State, x: usize) -> bool {
        let mut queue = vec![x];
        while let Some(y) = queue.pop() {
            if st.done[y] {
                continue;
            }
            st.done[y] = true;
            let c = st.dom[y].trailing_zeros() as usize;
            if y < self.n {
                st.counts[c] += 1;
                if self.limit.is_some_and(|l| st.counts[c] > l) {
                    return false;
                }
            }
            let bit = 1u8 << c;
            for &z in self.cg.neighbors(y) {
                if st.dom[z] & bit != 0 {
                    st.dom[z] &= !bit;
                    match st.dom[z].count_ones() {
                        0 => return false,
                        1 => queue.push(z),
                        _ => {}
                    }
                }
            }
        }
        true
    }

    // Depth-first enumeration; `visit` returns true to stop. Returns true
    // when stopped by `visit` or by the budget.
    fn run(&mut self, st: State, visit: &mut dyn FnMut(&[u8]) -> bool) -> bool {
        let Some(&x) = self.order.iter().find(|&&x| !st.done[x]) else {
            return visit(&st.dom);
        };
        for c in 0..4u8 {
            let bit = 1u8 << c;
            if st.dom[x] & bit == 0 {
                continue;
            }
            if self.nodes >= self.budget {
                self.timed_out = true;
                return true;
            }
            self.nodes += 1;
            let mut next = st.clone();
            next.dom[x] = bit;
            let before = next.done.iter().filter(|&&d| d).count() as u64;
            if self.settle(&mut next, x) {
                let after = next.done.iter().filter(|&&d| d).count() as u64;
                self.stats.forced += after - before - 1;
                if self.run(next, visit) {
                    return true;
                }
            } else {
                self.stats.dead_ends += 1;
            }
        }
        false
    }
}

fn initial_domains(g: &CubicGraph, cg: &ConflictGraph, symmetry_breaking: bool) -> Vec<u8> {
    let mut dom = vec![0b1111u8; cg.len()];
    if symmetry_breaking && g.n() > 0 {
        dom[0] = 1;
        for (i, &w) in g.neighbors(0).iter().enumerate() {
            dom[w] = 1 << (i + 1);
        }
    }
    dom
}

fn assignment_from(g: &CubicGraph, dom: &[u8]) -> TotalAssignment {
    let color = |d: u8| d.trailing_zeros() as u8;
    TotalAssignment::complete(
        dom[..g.n()].iter().map(|&d| color(d)).collect(),
        dom[g.n()..].iter().map(|&d| color(d)).collect(),
    )
}

fn validator(mode: Mode) -> fn(&CubicGraph, &TotalAssignment) -> Result<bool> {
    match mode {
        Mode::Etc => is_etc,
        Mode::Etgc => is_etgc,
    }
}

fn report(g: &CubicGraph, mode: Mode) -> SearchReport {
    let cf = g.canonical_form();
    SearchReport {
        graph_id: graph_id(&cf),
        canonical_form: cf,
        mode,
        verdict: Verdict::ExhaustedNone,
        certificate: None,
        base: None,
        nodes: 0,
        stats: SearchStats::default(),
        elapsed: Duration::ZERO,
    }
}

fn girth_check(g: &CubicGraph, mode: Mode) -> Result<()> {
    if mode == Mode::Etgc && g.girth() != Some(4) {
        return Err(Error::NotGirth4(g.girth()));
    }
    Ok(())
}

/// Searches for an ETC or ETGC of `g`. The verdict is exact unless the
/// budget runs out, in which case it is `Timeout`.
pub fn find_etc(g: &CubicGraph, mode: Mode, opts: &SearchOptions) -> Result<SearchReport> {
    girth_check(g, mode)?;
    let start = Instant::now();
    let cg = ConflictGraph::new(g, mode)?;
    let mut solver = Solver::new(g, &cg, opts);
    let mut out = report(g, mode);
    let mut found = None;
    if let Some(st) = solver.fresh(initial_domains(g, &cg, opts.symmetry_breaking)) {
        solver.run(st, &mut |dom| {
            found = Some(assignment_from(g, dom));
            true
        });
    }
    out.nodes = solver.nodes;
    out.stats = solver.stats;
    out.verdict = if let Some(a) = found {
        if !validator(mode)(g, &a)? {
            return Err(Error::Precondition("search produced an invalid certificate".into()));
        }
        out.certificate = Some(a);
        Verdict::CertificateFound
    } else if solver.timed_out {
        Verdict::Timeout
    } else {
        Verdict::ExhaustedNone
    };
    out.elapsed = start.elapsed();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub count: u64,
    /// False when the budget ran out; `count` is then a lower bound.
    pub exact: bool,
    pub nodes: u64,
}

/// Counts ETCs (or ETGCs) modulo renaming of the four colors. With the
/// palette of vertex 0's closed neighborhood fixed, each class of 24
/// color-permuted solutions has exactly one representative.
pub fn count_etcs_up_to_color_permutation(g: &CubicGraph, mode: Mode, budget: u64) -> Result<CountReport> {
    count_solutions(g, mode, &SearchOptions { budget, cardinality_pruning: true, symmetry_breaking: true })
}

/// Counts complete solutions under the given options.
pub fn count_solutions(g: &CubicGraph, mode: Mode, opts: &SearchOptions) -> Result<CountReport> {
    girth_check(g, mode)?;
    let cg = ConflictGraph::new(g, mode)?;
    let mut solver = Solver::new(g, &cg, opts);
    let mut count = 0u64;
    if let Some(st) = solver.fresh(initial_domains(g, &cg, opts.symmetry_breaking)) {
        solver.run(st, &mut |_| {
            count += 1;
            false
        });
    }
    Ok(CountReport { count, exact: !solver.timed_out, nodes: solver.nodes })
}

/// Searches for an assignment with the vertex colors of `base` and every
/// edge color different from `base`'s. Without a base, ETCs of `g` are
/// tried in search order until one has a partner.
pub fn find_orthogonal_pair(
    g: &CubicGraph,
    base: Option<&TotalAssignment>,
    mode: Mode,
    budget: u64,
) -> Result<SearchReport> {
    girth_check(g, mode)?;
    let start = Instant::now();
    let cg = ConflictGraph::new(g, mode)?;
    let check = validator(mode);
    let mut out = report(g, mode);
    let opts = SearchOptions { budget, cardinality_pruning: true, symmetry_breaking: true };

    let partner_of = |a: &TotalAssignment, budget: u64| -> Result<(Option<TotalAssignment>, u64, SearchStats, bool)> {
        let mut dom = vec![0b1111u8; cg.len()];
        for v in 0..g.n() {
            dom[v] = 1 << a.vertex(v).ok_or_else(|| Error::Incomplete(format!("vertex {v} unset")))?;
        }
        for e in 0..g.m() {
            dom[g.n() + e] &= !(1 << a.edge(e).ok_or_else(|| Error::Incomplete(format!("edge {e} unset")))?);
        }
        let sub = SearchOptions { budget, symmetry_breaking: false, ..opts };
        let mut solver = Solver::new(g, &cg, &sub);
        let mut found = None;
        if let Some(st) = solver.fresh(dom) {
            solver.run(st, &mut |d| {
                found = Some(assignment_from(g, d));
                true
            });
        }
        Ok((found, solver.nodes, solver.stats, solver.timed_out))
    };

    match base {
        Some(a) => {
            if !check(g, a)? {
                return Err(Error::Precondition("base assignment is not a valid coloring for the mode".into()));
            }
            let (found, nodes, stats, timed_out) = partner_of(a, budget)?;
            out.nodes = nodes;
            out.stats = stats;
            out.base = Some(a.clone());
            out.verdict = match found {
                Some(p) => {
                    out.certificate = Some(p);
                    Verdict::CertificateFound
                }
                None if timed_out => Verdict::Timeout,
                None => Verdict::ExhaustedNone,
            };
        }
        None => {
            let mut solver = Solver::new(g, &cg, &opts);
            let mut any_base = false;
            let mut result: Result<()> = Ok(());
            let mut sub_nodes = 0u64;
            let mut sub_timeout = false;
            if let Some(st) = solver.fresh(initial_domains(g, &cg, true)) {
                let outer_budget = budget;
                solver.run(st, &mut |d| {
                    any_base = true;
                    let a = assignment_from(g, d);
                    let left = outer_budget.saturating_sub(sub_nodes);
                    match partner_of(&a, left) {
                        Ok((Some(p), nodes, _, _)) => {
                            sub_nodes += nodes;
                            out.base = Some(a);
                            out.certificate = Some(p);
                            true
                        }
                        Ok((None, nodes, _, timed_out)) => {
                            sub_nodes += nodes;
                            sub_timeout |= timed_out;
                            sub_timeout
                        }
                        Err(e) => {
                            result = Err(e);
                            true
                        }
                    }
                });
            }
            result?;
            out.nodes = solver.nodes + sub_nodes;
            out.stats = solver.stats;
            out.verdict = if out.certificate.is_some() {
                Verdict::CertificateFound
            } else if solver.timed_out || sub_timeout {
                Verdict::Timeout
            } else if !any_base {
                return Err(Error::Precondition("graph has no coloring for the mode".into()));
            } else {
                Verdict::ExhaustedNone
            };
        }
    }
    if let Some(p) = &out.certificate {
        if !check(g, p)? {
            return Err(Error::Precondition("search produced an invalid partner".into()));
        }
    }
    out.elapsed = start.elapsed();
    Ok(out)
}

// ---------------------------------------------------------------------
// Harnesses

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    TheoremFo,
    ToroidConjecture,
    Con1Closure,
    AlfinMinimality,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Summary {
    Consistent,
    CounterexampleFound,
    /// Some searches hit the budget, or the population was empty.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessEntry {
    pub name: String,
    pub graph_id: String,
    pub n: usize,
    pub verdict: Verdict,
    pub nodes: u64,
    /// Whether the entry belongs to the population the hypothesis speaks
    /// about; entries outside it are reported without being judged.
    pub in_population: bool,
    pub counterexample: bool,
    pub notes: Vec<String>,
    /// Edge list, present for counterexamples so they can be replayed.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edges: Option<Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessReport {
    pub hypothesis: Hypothesis,
    pub population: String,
    pub entries: Vec<HarnessEntry>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub smallest_candidate: Option<usize>,
}

impl HarnessReport {
    fn new(hypothesis: Hypothesis, population: String, entries: Vec<HarnessEntry>) -> Self {
        let summary = if entries.iter().any(|e| e.counterexample) {
            Summary::CounterexampleFound
        } else if entries.iter().any(|e| e.in_population && e.verdict == Verdict::Timeout)
            || !entries.iter().any(|e| e.in_population)
        {
            Summary::Inconclusive
        } else {
            Summary::Consistent
        };
        HarnessReport { hypothesis, population, entries, summary, smallest_candidate: None }
    }

    /// One JSON object per entry followed by the summary object.
    pub fn to_json_lines(&self) -> Result<String> {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&serde_json::to_string(e).map_err(|e| Error::Document(e.to_string()))?);
            out.push('\n');
        }
        let summary = serde_json::json!({
            "hypothesis": self.hypothesis,
            "population": self.population,
            "entries": self.entries.len(),
            "counterexamples": self.entries.iter().filter(|e| e.counterexample).count(),
            "summary": self.summary,
            "smallest_candidate": self.smallest_candidate,
        });
        out.push_str(&summary.to_string());
        out.push('\n');
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HarnessOptions {
    /// Worker threads; verdicts and report order do not depend on it.
    pub jobs: usize,
    pub budget: u64,
}

impl Default for HarnessOptions {
    fn default() -> Self {
        HarnessOptions { jobs: 1, budget: SearchOptions::default().budget }
    }
}

/// A graph with an embedding, used where a hypothesis talks about belts.
#[derive(Debug, Clone)]
pub struct MapFixture {
    pub name: String,
    pub map: CombinatorialMap,
    /// Bicutout drawing, when the map came from one.
    pub cutout: Option<Cutout>,
}

impl MapFixture {
    /// The family's map and drawing, named `family(parameter)`.
    pub fn from_instance(inst: &crate::families::NamedFamilyInstance) -> Option<MapFixture> {
        Some(MapFixture {
            name: format!("{}({})", inst.family, inst.parameter),
            map: inst.map.clone()?,
            cutout: inst.cutout.clone(),
        })
    }
}

fn run_jobs<T, R, F>(jobs: usize, items: &[T], f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    pool.install(|| items.par_iter().map(&f).collect())
}

fn entry(name: String, g: &CubicGraph, r: &SearchReport) -> HarnessEntry {
    HarnessEntry {
        name,
        graph_id: r.graph_id.clone(),
        n: g.n(),
        verdict: r.verdict,
        nodes: r.nodes,
        in_population: true,
        counterexample: false,
        notes: Vec::new(),
        edges: None,
    }
}

/// Checks a report against the validator: a certificate must be a valid
/// coloring of `g` for the report's mode. A report claiming a certificate
/// without one is rejected too.
pub fn certificate_is_valid(g: &CubicGraph, r: &SearchReport) -> Result<bool> {
    match (&r.verdict, &r.certificate) {
        (Verdict::CertificateFound, Some(a)) => validator(r.mode)(g, a).or(Ok(false)),
        (Verdict::CertificateFound, None) => Ok(false),
        _ => Ok(true),
    }
}

/// Judges one theorem-fo search: a graph whose order is not a multiple of
/// four must not have an ETC, and any certificate must validate.
pub fn judge_theorem_fo(g: &CubicGraph, r: &SearchReport) -> Result<HarnessEntry> {
    let mut e = entry(r.graph_id.clone(), g, r);
    e.in_population = g.n() % 4 != 0;
    if !certificate_is_valid(g, r)? {
        e.counterexample = true;
        e.notes.push("validator failure: certificate does not validate".into());
    } else if e.in_population && r.verdict == Verdict::CertificateFound {
        e.counterexample = true;
        e.notes.push("ETC found although |V| is not a multiple of 4".into());
    }
    if e.counterexample {
        e.edges = Some(g.edges().to_vec());
    }
    Ok(e)
}

/// Every enumerated cubic girth-4 graph with `n <= n_max` and `n` not a
/// multiple of 4 is searched for an ETC (without cardinality pruning, so
/// the search does real work); each map fixture with an ETC must have all
/// belt lengths divisible by 4.
pub fn harness_theorem_fo(n_max: usize, fixtures: &[MapFixture], opts: &HarnessOptions) -> Result<HarnessReport> {
    let mut graphs = Vec::new();
    for n in (6..=n_max).step_by(2).filter(|n| n % 4 != 0) {
        graphs.extend(enumerate_cubic_girth4(n, None)?);
    }
    let search = SearchOptions { budget: opts.budget, cardinality_pruning: false, symmetry_breaking: true };
    let mut entries = run_jobs(opts.jobs, &graphs, |g| {
        let r = find_etc(g, Mode::Etc, &search)?;
        judge_theorem_fo(g, &r)
    })?;
    let fixture_entries = run_jobs(opts.jobs, fixtures, |f| {
        let g = f.map.graph();
        let r = find_etc(g, Mode::Etc, &search)?;
        let mut e = judge_theorem_fo(g, &r)?;
        e.name = f.name.clone();
        let bad: Vec<usize> = f.map.trace_belts().iter().map(|b| b.len()).filter(|l| l % 4 != 0).collect();
        if r.verdict == Verdict::CertificateFound {
            e.in_population = true;
            if !bad.is_empty() {
                e.counterexample = true;
                e.notes.push(format!("ETC found with belts of lengths {bad:?}"));
                e.edges = Some(g.edges().to_vec());
            }
        }
        if !bad.is_empty() {
            e.notes.push(format!("belt lengths not divisible by 4: {bad:?}"));
        }
        Ok(e)
    })?;
    entries.extend(fixture_entries);
    let population = format!(
        "connected cubic girth-4 graphs with n <= {n_max} and n not divisible by 4, plus {} map fixtures",
        fixtures.len()
    );
    Ok(HarnessReport::new(Hypothesis::TheoremFo, population, entries))
}

/// Each fixture with a genus-1 map whose belts all have length divisible
/// by 4 and which is toroidally 3-edge-connected is searched for an ETGC; an exhausted
/// search is a counterexample candidate. Other fixtures are searched and
/// reported but not judged.
pub fn harness_toroid_conjecture(fixtures: &[MapFixture], opts: &HarnessOptions) -> Result<HarnessReport> {
    let search = SearchOptions { budget: opts.budget, ..SearchOptions::default() };
    let entries = run_jobs(opts.jobs, fixtures, |f| {
        let g = f.map.graph();
        let belts_ok = f.map.trace_belts().iter().all(|b| b.len() % 4 == 0);
        let t3 = match &f.cutout {
            Some(c) => Some(c.is_toroidally_3_edge_connected()?),
            None => None,
        };
        let genus = f.map.euler_genus()?;
        let mode = if g.girth() == Some(4) { Mode::Etgc } else { Mode::Etc };
        let r = find_etc(g, mode, &search)?;
        let mut e = entry(f.name.clone(), g, &r);
        e.in_population = genus == 1 && belts_ok && t3 == Some(true) && mode == Mode::Etgc;
        e.notes.push(format!("map genus: {genus}"));
        e.notes.push(format!("belts divisible by 4: {belts_ok}"));
        e.notes.push(match t3 {
            Some(b) => format!("toroidally 3-edge-connected: {b}"),
            None => "toroidally 3-edge-connected: unknown (no bicutout)".into(),
        });
        if e.in_population && r.verdict == Verdict::ExhaustedNone {
            e.counterexample = true;
            e.notes.push("counterexample candidate: no ETGC".into());
            e.edges = Some(g.edges().to_vec());
        }
        if !certificate_is_valid(g, &r)? {
            e.counterexample = true;
            e.notes.push("validator failure: certificate does not validate".into());
        }
        Ok(e)
    })?;
    let population = format!("{} toroidal map fixtures", fixtures.len());
    Ok(HarnessReport::new(Hypothesis::ToroidConjecture, population, entries))
}

/// Lower-bound exploration for the smallest girth-4 cubic graph with an
/// ETGC embedded in the orientable surface of genus `genus`. Any supplied
/// map of that genus counts (minimum genus is not computed), so the
/// reported order is a candidate upper bound on the answer, not the
/// answer.
pub fn harness_alfin(genus: usize, n_max: usize, fixtures: &[MapFixture], opts: &HarnessOptions) -> Result<HarnessReport> {
    if !(1..=2).contains(&genus) {
        return Err(Error::Precondition("alfin harness covers genus 1 and 2".into()));
    }
    let search = SearchOptions { budget: opts.budget, ..SearchOptions::default() };
    let mut usable = Vec::new();
    for f in fixtures {
        let g = f.map.graph();
        if f.map.euler_genus()? == genus && g.n() <= n_max && g.girth() == Some(4) {
            usable.push(f);
        }
    }
    let skipped = fixtures.len() - usable.len();
    let entries = run_jobs(opts.jobs, &usable, |f| {
        let g = f.map.graph();
        let r = find_etc(g, Mode::Etgc, &search)?;
        let mut e = entry(f.name.clone(), g, &r);
        e.in_population = true;
        e.notes.push(format!("map genus {genus}"));
        Ok(e)
    })?;
    let population = format!(
        "supplied maps of genus {genus} with n <= {n_max} ({skipped} other fixtures skipped); any genus-{genus} map is admitted (broader than zonogon cutouts); enumerated graphs carry no maps and do not contribute"
    );
    let mut rep = HarnessReport::new(Hypothesis::AlfinMinimality, population, entries);
    rep.smallest_candidate = rep
        .entries
        .iter()
        .filter(|e| e.in_population && e.verdict == Verdict::CertificateFound)
        .map(|e| e.n)
        .min();
    rep.summary = if rep.smallest_candidate.is_some() { Summary::Consistent } else { Summary::Inconclusive };
    Ok(rep)
}

/// Which enumerated graphs with an ETC (`n <= n_max`) are reached by the
/// given constructed graphs. Reached graphs are consistent entries;
/// unreached ones are listed outside the population, never judged.
pub fn harness_con1_coverage(n_max: usize, reached: &[(String, CubicGraph)], opts: &HarnessOptions) -> Result<HarnessReport> {
    let mut graphs = Vec::new();
    for n in (8..=n_max).step_by(4) {
        graphs.extend(enumerate_cubic_girth4(n, None)?);
    }
    let search = SearchOptions { budget: opts.budget, ..SearchOptions::default() };
    let known: Vec<(String, CanonicalForm)> = reached.iter().map(|(s, g)| (s.clone(), g.canonical_form())).collect();
    let entries = run_jobs(opts.jobs, &graphs, |g| {
        let r = find_etc(g, Mode::Etc, &search)?;
        let mut e = entry(r.graph_id.clone(), g, &r);
        let hits: Vec<&str> = known.iter().filter(|(_, cf)| *cf == r.canonical_form).map(|(s, _)| s.as_str()).collect();
        e.in_population = r.verdict == Verdict::CertificateFound && !hits.is_empty();
        match (r.verdict, hits.is_empty()) {
            (Verdict::CertificateFound, false) => e.notes.push(format!("reached by {}", hits.join(", "))),
            (Verdict::CertificateFound, true) => e.notes.push("has an ETC, not reached".into()),
            _ => e.notes.push("no ETC".into()),
        }
        Ok(e)
    })?;
    let population = format!("enumerated cubic girth-4 graphs with n <= {n_max} admitting an ETC");
    Ok(HarnessReport::new(Hypothesis::Con1Closure, population, entries))
}

/// Map fixtures for the theorem-fo harness: the named families with a
/// drawing, including `G_1` whose 6-belts must rule out an ETC.
pub fn theorem_fo_fixtures() -> Result<Vec<MapFixture>> {
    use crate::families as f;
    let insts = [f::q3()?, f::prism(2)?, f::prism(3)?, f::truncated_square_tiling()?, f::oct3_unfolded()?, f::octaedro_middle()?, f::gamma(1)?, f::g_odd(0)?];
    Ok(insts.iter().filter_map(MapFixture::from_instance).collect())
}

/// Toroidal fixtures: the drawn bicutouts, the reconstructed self-amalgam
/// and `Γ_1` (whose zonogon map carries no bicutout drawing).
pub fn toroid_fixtures() -> Result<Vec<MapFixture>> {
    use crate::families as f;
    let insts = [f::truncated_square_tiling()?, f::tess_right()?, f::klein_reconstructed()?, f::gamma(1)?];
    Ok(insts.iter().filter_map(MapFixture::from_instance).collect())
}

/// Every drawing from [`crate::families::torus_grid_cutouts`] that
/// realizes a simple cubic graph, named `grid-WxH-#k`.
pub fn torus_grid_fixtures(w: usize, h: usize) -> Result<Vec<MapFixture>> {
    let mut out = Vec::new();
    for (k, c) in crate::families::torus_grid_cutouts(w, h)?.into_iter().enumerate() {
        // matchings that split the torus grid give disconnected drawings
        if let Some(map) = c.realize().ok().filter(|m| m.euler_genus().is_ok()) {
            out.push(MapFixture { name: format!("grid-{w}x{h}-#{k}"), map, cutout: Some(c) });
        }
    }
    Ok(out)
}

/// Fixtures for the alfin exploration at genus `genus`.
pub fn alfin_fixtures(genus: usize) -> Result<Vec<MapFixture>> {
    use crate::families as f;
    let insts = match genus {
        1 => vec![f::truncated_square_tiling()?, f::tess_right()?, f::gamma(1)?, f::g_odd(1)?],
        2 => vec![f::gamma(2)?, f::g_odd(2)?],
        _ => Vec::new(),
    };
    Ok(insts.iter().filter_map(MapFixture::from_instance).collect())
}

/// Graphs produced by the bundled constructions, for the con1 coverage
/// report.
pub fn con1_reached(n_max: usize) -> Result<Vec<(String, CubicGraph)>> {
    use crate::families as f;
    let mut out = Vec::new();
    let mut j = 1;
    while 8 * j <= n_max {
        out.push((format!("prism({j})"), f::prism(j)?.graph));
        j += 1;
    }
    for inst in [f::truncated_square_tiling()?, f::oct3_unfolded()?, f::octaedro_middle()?, f::gamma(0)?] {
        if inst.graph.n() <= n_max {
            out.push((format!("{}({})", inst.family, inst.parameter), inst.graph));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn k33_has_no_etc() {
        let r = find_etc(&named::k33(), Mode::Etc, &SearchOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::ExhaustedNone);
    }

    #[test]
    fn q3_has_an_etgc() {
        let r = find_etc(&named::q3(), Mode::Etgc, &SearchOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::CertificateFound);
        assert!(is_etgc(&named::q3(), r.certificate.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn budget_gives_timeout() {
        let g = named::prism(12).unwrap();
        let opts = SearchOptions { budget: 1, cardinality_pruning: false, symmetry_breaking: false };
        assert_eq!(find_etc(&g, Mode::Etc, &opts).unwrap().verdict, Verdict::Timeout);
    }

    #[test]
    fn etgc_needs_girth_four() {
        assert!(matches!(find_etc(&named::petersen(), Mode::Etgc, &SearchOptions::default()), Err(Error::NotGirth4(_))));
    }

    #[test]
    fn palette_fixing_divides_by_24() {
        let g = named::prism(8).unwrap();
        let with = count_solutions(&g, Mode::Etc, &SearchOptions::default()).unwrap();
        let without = count_solutions(&g, Mode::Etc, &SearchOptions { symmetry_breaking: false, ..SearchOptions::default() }).unwrap();
        assert!(with.count > 0);
        assert_eq!(without.count, 24 * with.count);
    }

    #[test]
    fn q3_orthogonal_pair() {
        let r = find_orthogonal_pair(&named::q3(), None, Mode::Etc, 1_000_000).unwrap();
        assert_eq!(r.verdict, Verdict::CertificateFound);
        let (a, b) = (r.base.unwrap(), r.certificate.unwrap());
        assert!(crate::coloring::are_orthogonal(&named::q3(), &a, &b).unwrap());
    }

    #[test]
    fn k33_orthogonal_pair_is_an_error() {
        assert!(find_orthogonal_pair(&named::k33(), None, Mode::Etc, 1_000_000).is_err());
    }

    #[test]
    fn fake_certificate_is_flagged() {
        let g = named::k33();
        let mut r = find_etc(&g, Mode::Etc, &SearchOptions::default()).unwrap();
        r.verdict = Verdict::CertificateFound;
        r.certificate = Some(TotalAssignment::complete(vec![0, 1, 2, 3, 0, 1], vec![0; 9]));
        let e = judge_theorem_fo(&g, &r).unwrap();
        assert!(e.counterexample);
        assert!(e.notes[0].starts_with("validator failure"));
    }

    #[test]
    fn theorem_fo_small() {
        let r = harness_theorem_fo(10, &[], &HarnessOptions::default()).unwrap();
        assert_eq!(r.summary, Summary::Consistent);
        assert_eq!(r.entries.len(), 1 + 5);
    }
}
