//! Replayable construction traces.
//!
//! A trace is a JSON list of steps. The first step produces a colored
//! graph (a named family or a drawn grid); each later step transforms the
//! current state. After every step, a complete assignment must be an ETC,
//! and an ETGC when the graph has girth 4. Failures carry the index of the
//! offending step.

use serde::{Deserialize, Serialize};

use super::{
    amalgam, exchange, exchange_cutout, extend, spray_propagate, unfold, AmalgamSide, Axis, ExchangeSite,
    LadderColors, SprayOutcome, SpraySeed,
};
use crate::coloring::{is_etc, is_etgc, TotalAssignment};
use crate::error::{Error, Result};
use crate::families::{self, blank};
use crate::graph::{CubicGraph, VertexId};
use crate::maps::{CombinatorialMap, Cutout, Identification, Point};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum TraceStep {
    /// A named family instance.
    Construct {
        family: String,
        #[serde(default)]
        param: usize,
    },
    /// A cutout in grid notation.
    Grid { text: String, identification: Identification },
    /// Drop every color of the current drawing.
    Blank,
    Extend { copies: usize, axis: Axis },
    /// Spray from the 4-belt with the given corners, using seed pattern
    /// `pattern` (0 or 1) of the two standard seeds.
    Spray { belt: [Point; 4], pattern: usize },
    /// Exchange at a site given by cutout corners or by vertex ids.
    Exchange {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        corners: Option<[Point; 4]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vertices: Option<[VertexId; 4]>,
    },
    Unfold {
        corner: Point,
        ell: usize,
        ladder: Axis,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        colors: Option<LadderColors>,
    },
    /// Amalgam of the current graph along `cycle` with the result of
    /// `other` along `other_cycle`.
    Amalgam { cycle: Vec<VertexId>, other: Vec<TraceStep>, other_cycle: Vec<VertexId> },
}

impl TraceStep {
    pub fn name(&self) -> &'static str {
        match self {
            TraceStep::Construct { .. } => "construct",
            TraceStep::Grid { .. } => "grid",
            TraceStep::Blank => "blank",
            TraceStep::Extend { .. } => "extend",
            TraceStep::Spray { .. } => "spray",
            TraceStep::Exchange { .. } => "exchange",
            TraceStep::Unfold { .. } => "unfold",
            TraceStep::Amalgam { .. } => "amalgam",
        }
    }
}

/// Result of a replay. `cutout` and `map` are dropped by graph-level steps
/// that have no drawing counterpart.
#[derive(Debug, Clone)]
pub struct TraceState {
    pub graph: CubicGraph,
    pub assignment: TotalAssignment,
    pub cutout: Option<Cutout>,
    pub map: Option<CombinatorialMap>,
}

impl TraceState {
    fn from_cutout(c: Cutout) -> Result<Self> {
        let r = c.realize_full()?;
        Ok(TraceState { graph: r.map.graph().clone(), assignment: r.assignment, map: Some(r.map), cutout: Some(c) })
    }

    fn cutout(&self) -> Result<&Cutout> {
        self.cutout.as_ref().ok_or_else(|| Error::Precondition("step needs a cutout".into()))
    }

    fn check(&self) -> Result<()> {
        if !self.assignment.is_complete() {
            return Ok(());
        }
        if !is_etc(&self.graph, &self.assignment)? {
            return Err(Error::Precondition("coloring is not an ETC".into()));
        }
        if self.graph.girth() == Some(4) && !is_etgc(&self.graph, &self.assignment)? {
            return Err(Error::Precondition("coloring is not an ETGC".into()));
        }
        Ok(())
    }
}

fn apply(state: Option<TraceState>, step: &TraceStep) -> Result<TraceState> {
    let need = |s: Option<TraceState>| s.ok_or_else(|| Error::Precondition("no graph yet".into()));
    match step {
        TraceStep::Construct { family, param } => {
            let inst = families::construct(family, *param)?;
            Ok(TraceState { graph: inst.graph, assignment: inst.assignment, cutout: inst.cutout, map: inst.map })
        }
        TraceStep::Grid { text, identification } => TraceState::from_cutout(Cutout::from_grid(text, *identification)?),
        TraceStep::Blank => {
            let s = need(state)?;
            match &s.cutout {
                Some(c) => TraceState::from_cutout(blank(c)),
                None => Ok(TraceState { assignment: TotalAssignment::empty(&s.graph), ..s }),
            }
        }
        TraceStep::Extend { copies, axis } => TraceState::from_cutout(extend(need(state)?.cutout()?, *copies, *axis)?),
        TraceStep::Spray { belt, pattern } => {
            let s = need(state)?;
            let c = s.cutout()?;
            let r = c.realize_full()?;
            let mut ids = [0; 4];
            for (k, &p) in belt.iter().enumerate() {
                ids[k] = c
                    .point_index(p)
                    .map(|i| r.vertex_of_point[i])
                    .ok_or_else(|| Error::Precondition(format!("no vertex at {p:?}")))?;
            }
            let seeds = SpraySeed::seed_patterns(ids);
            let seed = seeds.get(*pattern).ok_or_else(|| Error::Precondition("pattern must be 0 or 1".into()))?;
            match spray_propagate(&r.map, seed)?.0 {
                SprayOutcome::Complete(a) => {
                    let mut colored = c.clone();
                    for i in 0..c.points.len() {
                        colored.vertex_colors[i] = a.vertex(r.vertex_of_point[i]);
                    }
                    for k in 0..c.polylines.len() {
                        colored.edge_colors[k] = a.edge(r.edge_of_polyline[k]);
                    }
                    TraceState::from_cutout(colored)
                }
                other => Err(Error::Precondition(format!("spray did not complete: {other:?}"))),
            }
        }
        TraceStep::Exchange { corners, vertices } => {
            let s = need(state)?;
            match (corners, vertices) {
                (Some(p), None) => TraceState::from_cutout(exchange_cutout(s.cutout()?, *p)?),
                (None, Some(v)) => {
                    let (graph, assignment) = exchange(&s.graph, &s.assignment, &ExchangeSite { cycle: *v })?;
                    Ok(TraceState { graph, assignment, cutout: None, map: None })
                }
                _ => Err(Error::Precondition("give exactly one of corners and vertices".into())),
            }
        }
        TraceStep::Unfold { corner, ell, ladder, colors } => {
            TraceState::from_cutout(unfold(need(state)?.cutout()?, *corner, *ell, *ladder, colors.as_ref())?)
        }
        TraceStep::Amalgam { cycle, other, other_cycle } => {
            let s = need(state)?;
            let o = replay(other)?;
            let (graph, assignment) = amalgam(
                &AmalgamSide { graph: &s.graph, coloring: &s.assignment, cycle: cycle.clone() },
                &AmalgamSide { graph: &o.graph, coloring: &o.assignment, cycle: other_cycle.clone() },
            )?;
            Ok(TraceState { graph, assignment, cutout: None, map: None })
        }
    }
}

/// Replays `steps` in order, validating after each one.
pub fn replay(steps: &[TraceStep]) -> Result<TraceState> {
    let mut state: Option<TraceState> = None;
    for (index, step) in steps.iter().enumerate() {
        let wrap = |e: Error| Error::Step { index, op: step.name().into(), message: e.to_string() };
        let next = apply(state.take(), step).map_err(wrap)?;
        next.check().map_err(wrap)?;
        state = Some(next);
    }
    state.ok_or_else(|| Error::Precondition("empty trace".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Vec<TraceStep> {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn q3_extended_twice_is_c8_prism() {
        let t = parse(r#"[{"op":"construct","family":"q3"},{"op":"extend","copies":2,"axis":"x"}]"#);
        let s = replay(&t).unwrap();
        let want = crate::graph::named::prism(8).unwrap();
        assert_eq!(s.graph.canonical_form(), want.canonical_form());
    }

    #[test]
    fn blank_then_spray_recolors() {
        let t = parse(
            r#"[{"op":"construct","family":"q3"},{"op":"blank"},
                {"op":"spray","belt":[[0,1],[1,1],[1,0],[0,0]],"pattern":0}]"#,
        );
        let s = replay(&t).unwrap();
        assert!(is_etgc(&s.graph, &s.assignment).unwrap());
    }

    #[test]
    fn bad_exchange_names_its_step() {
        // the two vertical sides of an oct square carry different colors
        let t = parse(r#"[{"op":"construct","family":"q3"},{"op":"exchange","corners":[[0,0],[0,1],[1,1],[1,0]]}]"#);
        match replay(&t) {
            Err(Error::Step { index, op, .. }) => assert_eq!((index, op.as_str()), (1, "exchange")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_family_is_reported() {
        let t = parse(r#"[{"op":"construct","family":"nope"}]"#);
        assert!(matches!(replay(&t), Err(Error::Step { index: 0, .. })));
    }

    #[test]
    fn round_trip() {
        let t = vec![
            TraceStep::Construct { family: "tess".into(), param: 0 },
            TraceStep::Exchange { corners: Some([(0, 4), (1, 4), (1, 3), (0, 3)]), vertices: None },
        ];
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(parse(&s), t);
    }
}
