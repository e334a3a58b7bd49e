//! Forced-coloring propagation from a seeded 4-belt.
//!
//! Rules, applied from a FIFO worklist of freshly colored elements:
//!
//! * R1: a vertex and two of its edges colored force the third edge.
//! * R2: a vertex and two of its neighbors colored force the third
//!   neighbor (closed neighborhoods are rainbow).
//! * R3: along every belt, colors repeat with period four, separately on
//!   vertices and on edges.
//! * R4: a colored element removes its color from every conflicting
//!   element; a single remaining color is forced.
//!
//! R1 and R2 are special cases of R4 but are kept as named rules so the
//! statistics say which inference fired.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::coloring::{is_etgc, Color, ConflictGraph, Element, Mode, TotalAssignment};
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::maps::CombinatorialMap;

/// A 4-belt `(v, b, c, d)` with rainbow vertex colors and the colors of
/// the three edges at `v`: towards `b`, towards `d`, and the remaining one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpraySeed {
    pub belt: [VertexId; 4],
    pub vertex_colors: [Color; 4],
    pub edge_colors_at_v: [Color; 3],
}

impl SpraySeed {
    /// The two seed patterns for a square `a b / d c` with `v = a`.
    pub fn seed_patterns(belt: [VertexId; 4]) -> [SpraySeed; 2] {
        [
            SpraySeed { belt, vertex_colors: [0, 1, 2, 3], edge_colors_at_v: [3, 2, 1] },
            SpraySeed { belt, vertex_colors: [0, 1, 2, 3], edge_colors_at_v: [2, 1, 3] },
        ]
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SprayStats {
    pub seeded: usize,
    pub r1: usize,
    pub r2: usize,
    pub r3: usize,
    pub r4: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SprayOutcome {
    Complete(TotalAssignment),
    /// The first element that was forced to two colors or left without any.
    Conflict { element: Element, rule: String, partial: TotalAssignment },
    /// Propagation stopped with elements still uncolored.
    Incomplete(TotalAssignment),
}

impl SprayOutcome {
    pub fn is_complete(&self) -> bool {
        matches!(self, SprayOutcome::Complete(_))
    }

    pub fn is_conflict(&self) -> bool {
        matches!(self, SprayOutcome::Conflict { .. })
    }
}

struct State<'a> {
    m: &'a CombinatorialMap,
    cg: ConflictGraph,
    dom: Vec<u8>,
    color: Vec<Option<Color>>,
    queue: VecDeque<usize>,
    // for every element: (belt index, position) occurrences
    belt_pos: Vec<Vec<(usize, usize)>>,
    belts: Vec<(Vec<usize>, Vec<usize>)>,
    stats: SprayStats,
}

struct Clash(usize, &'static str);

impl State<'_> {
    fn assign(&mut self, x: usize, c: Color, rule: &'static str) -> std::result::Result<(), Clash> {
        match self.color[x] {
            Some(old) if old == c => return Ok(()),
            Some(_) => return Err(Clash(x, rule)),
            None => {}
        }
        if self.dom[x] & (1 << c) == 0 {
            return Err(Clash(x, rule));
        }
        self.color[x] = Some(c);
        self.dom[x] = 1 << c;
        match rule {
            "seed" => self.stats.seeded += 1,
            "R1" => self.stats.r1 += 1,
            "R2" => self.stats.r2 += 1,
            "R3" => self.stats.r3 += 1,
            _ => self.stats.r4 += 1,
        }
        self.queue.push_back(x);
        Ok(())
    }

    fn run(&mut self) -> std::result::Result<(), Clash> {
        let g = self.m.graph();
        let n = g.n();
        while let Some(x) = self.queue.pop_front() {
            let c = self.color[x].unwrap();
            // R1 and R2 look at every vertex whose star contains x
            let centers: Vec<VertexId> = if x < n {
                std::iter::once(x).chain(g.neighbors(x).iter().copied()).collect()
            } else {
                let (a, b) = g.endpoints(x - n);
                vec![a, b]
            };
            for v in centers {
                if let Some(cv) = self.color[v] {
                    let edges = g.incident(v).map(|e| n + e);
                    if let Some((t, col)) = missing_one(&self.color, &edges, cv) {
                        self.assign(t, col, "R1")?;
                    }
                    let nbrs = *g.neighbors(v);
                    if let Some((t, col)) = missing_one(&self.color, &nbrs, cv) {
                        self.assign(t, col, "R2")?;
                    }
                }
            }
            for i in 0..self.belt_pos[x].len() {
                let (b, p) = self.belt_pos[x][i];
                let seq = if x < n { &self.belts[b].0 } else { &self.belts[b].1 };
                let len = seq.len();
                let targets = [seq[(p + 4) % len], seq[(p + 4 * len - 4) % len]];
                for t in targets {
                    self.assign(t, c, "R3")?;
                }
            }
            for i in 0..self.cg.neighbors(x).len() {
                let y = self.cg.neighbors(x)[i];
                if self.color[y] == Some(c) {
                    return Err(Clash(y, "R4"));
                }
                if self.dom[y] & (1 << c) != 0 {
                    self.dom[y] &= !(1 << c);
                    if self.dom[y] == 0 {
                        return Err(Clash(y, "R4"));
                    }
                    if self.color[y].is_none() && self.dom[y].count_ones() == 1 {
                        self.assign(y, self.dom[y].trailing_zeros() as Color, "R4")?;
                    }
                }
            }
        }
        Ok(())
    }
}

// If `cv` plus three slots hold all four colors but one slot is open,
// return that slot with the missing color.
fn missing_one(color: &[Option<Color>], slots: &[usize; 3], cv: Color) -> Option<(usize, Color)> {
    let open: Vec<usize> = slots.iter().copied().filter(|&s| color[s].is_none()).collect();
    if open.len() != 1 {
        return None;
    }
    let mut used = 1u8 << cv;
    for &s in slots {
        if let Some(c) = color[s] {
            used |= 1 << c;
        }
    }
    (used.count_ones() == 3).then(|| (open[0], (!used & 0xF).trailing_zeros() as Color))
}

pub fn spray_propagate(m: &CombinatorialMap, seed: &SpraySeed) -> Result<(SprayOutcome, SprayStats)> {
    let g = m.graph();
    let n = g.n();
    check_seed(m, seed)?;
    let cg = ConflictGraph::new(g, Mode::Etgc)?;
    let mut belt_pos: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + g.m()];
    let mut belts = Vec::new();
    for (b, belt) in m.trace_belts().into_iter().enumerate() {
        let vs: Vec<usize> = belt.vertices.clone();
        let es: Vec<usize> = belt.edges.iter().map(|&e| n + e).collect();
        for (p, &v) in vs.iter().enumerate() {
            belt_pos[v].push((b, p));
        }
        for (p, &e) in es.iter().enumerate() {
            belt_pos[e].push((b, p));
        }
        belts.push((vs, es));
    }
    let mut st = State {
        m,
        cg,
        dom: vec![0xF; n + g.m()],
        color: vec![None; n + g.m()],
        queue: VecDeque::new(),
        belt_pos,
        belts,
        stats: SprayStats::default(),
    };
    let [v, b, _, d] = seed.belt;
    let third = g
        .neighbors(v)
        .iter()
        .copied()
        .find(|&w| w != b && w != d)
        .expect("cubic vertex has a third neighbor");
    let mut seeds: Vec<(usize, Color)> = seed.belt.iter().zip(seed.vertex_colors).map(|(&x, c)| (x, c)).collect();
    for (w, c) in [b, d, third].into_iter().zip(seed.edge_colors_at_v) {
        seeds.push((n + g.edge_between(v, w).unwrap(), c));
    }
    let mut result = Ok(());
    for (x, c) in seeds {
        result = st.assign(x, c, "seed").and_then(|_| st.run());
        if result.is_err() {
            break;
        }
    }
    let partial = TotalAssignment {
        vertices: st.color[..n].to_vec(),
        edges: st.color[n..].to_vec(),
    };
    let outcome = match result {
        Err(Clash(x, rule)) => SprayOutcome::Conflict { element: st.cg.element(x), rule: rule.to_string(), partial },
        Ok(()) if partial.is_complete() => {
            if !is_etgc(g, &partial)? {
                return Err(Error::Precondition("propagation completed to a non-ETGC".into()));
            }
            SprayOutcome::Complete(partial)
        }
        Ok(()) => SprayOutcome::Incomplete(partial),
    };
    Ok((outcome, st.stats))
}

fn check_seed(m: &CombinatorialMap, seed: &SpraySeed) -> Result<()> {
    let g = m.graph();
    let [v, b, c, d] = seed.belt;
    if seed.belt.iter().any(|&x| x >= g.n()) {
        return Err(Error::Precondition("seed belt vertex out of range".into()));
    }
    let is_face = m.trace_belts().iter().any(|f| f.len() == 4 && f.matches_cycle(&seed.belt));
    if !is_face || !g.has_edge(v, b) || !g.has_edge(b, c) || !g.has_edge(c, d) || !g.has_edge(d, v) {
        return Err(Error::Precondition(format!("{:?} is not a 4-belt of the map", seed.belt)));
    }
    let rainbow = |cs: &[Color]| {
        let mut mask = 0u8;
        cs.iter().all(|&c| c < 4 && (mask & (1 << c) == 0) && {
            mask |= 1 << c;
            true
        })
    };
    let mut star = seed.edge_colors_at_v.to_vec();
    star.push(seed.vertex_colors[0]);
    if !rainbow(&seed.vertex_colors) || !rainbow(&star) {
        return Err(Error::Precondition("seed colors are not rainbow".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{Cutout, Identification};
    use crate::ops::{extend, Axis};

    const OCT_BLANK: &str = "
        * - * - * - * - *
        | | | | |
        * - * - * - * - *";

    fn spray_all(m: &CombinatorialMap) -> Vec<SprayOutcome> {
        let belt = m.trace_belts().into_iter().find(|b| b.len() == 4).unwrap();
        let vs = [belt.vertices[0], belt.vertices[1], belt.vertices[2], belt.vertices[3]];
        SpraySeed::seed_patterns(vs).iter().map(|s| spray_propagate(m, s).unwrap().0).collect()
    }

    #[test]
    fn q3_completes_from_both_patterns() {
        let m = Cutout::from_grid(OCT_BLANK, Identification::X).unwrap().realize().unwrap();
        for out in spray_all(&m) {
            assert!(out.is_complete(), "{out:?}");
        }
    }

    #[test]
    fn prisms_complete() {
        let c = Cutout::from_grid(OCT_BLANK, Identification::X).unwrap();
        for j in 2..=4 {
            let m = extend(&c, j, Axis::X).unwrap().realize().unwrap();
            assert_eq!(m.graph().n(), 8 * j);
            for out in spray_all(&m) {
                assert!(out.is_complete());
            }
        }
    }

    #[test]
    fn prism_with_6_belts_conflicts() {
        // C6 x K2 drawn as a 6 x 1 xcutout: its two hexagons are 6-belts
        let text = "
            * - * - * - * - * - * - *
            | | | | | | |
            * - * - * - * - * - * - *";
        let m = Cutout::from_grid(text, Identification::X).unwrap().realize().unwrap();
        assert!(spray_all(&m).iter().all(SprayOutcome::is_conflict));
    }

    #[test]
    fn seed_must_be_a_face() {
        let m = Cutout::from_grid(OCT_BLANK, Identification::X).unwrap().realize().unwrap();
        let seed = SpraySeed::seed_patterns([0, 1, 2, 3]);
        let bad = spray_propagate(&m, &seed[0]);
        if m.trace_belts().iter().all(|b| !b.matches_cycle(&[0, 1, 2, 3])) {
            assert!(bad.is_err());
        }
    }
}
