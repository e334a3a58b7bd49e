//! JSON graph documents and DOT / SVG rendering.
//!
//! A [`GraphDocument`] carries a graph together with whatever belongs to
//! it: a rotation system, the cutout it was drawn on, any number of named
//! assignments, and vertex names. Edge ids are positions in the sorted
//! edge list, so a document's edge list must be sorted.
//!
//! Colors are drawn as 0 = hazel, 1 = red, 2 = blue, 3 = green.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, TotalAssignment};
use crate::error::{Error, Result};
use crate::families::NamedFamilyInstance;
use crate::graph::{CubicGraph, EdgeId, VertexId};
use crate::maps::{CombinatorialMap, Cutout, Identification, RotationSystem};

pub const FORMAT_VERSION: u32 = 1;

/// Name of the assignment a family builder validated.
pub const MAIN: &str = "main";
/// Name of the orthogonal partner, when a family has one.
pub const PARTNER: &str = "partner";

pub const PALETTE: [(&str, &str); 4] = [("hazel", "#8e7618"), ("red", "#d62728"), ("blue", "#1f5fbf"), ("green", "#2ca02c")];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CutoutKind {
    Xcutout,
    Ycutout,
    Bicutout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutoutBlock {
    pub kind: CutoutKind,
    pub cutout: Cutout,
}

impl CutoutBlock {
    pub fn new(cutout: Cutout) -> Self {
        let kind = match cutout.identification {
            Identification::X => CutoutKind::Xcutout,
            Identification::Y => CutoutKind::Ycutout,
            Identification::Both => CutoutKind::Bicutout,
        };
        CutoutBlock { kind, cutout }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub format_version: u32,
    pub n: usize,
    pub edges: Vec<(VertexId, VertexId)>,
    /// Cyclic order of incident edge ids at each vertex.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<[EdgeId; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutout: Option<CutoutBlock>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub assignments: BTreeMap<String, TotalAssignment>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name_table: Option<BTreeMap<String, VertexId>>,
    /// Free-form annotations (family, parameter, notes).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, serde_json::Value>,
}

impl GraphDocument {
    pub fn from_graph(g: &CubicGraph) -> Self {
        GraphDocument {
            format_version: FORMAT_VERSION,
            n: g.n(),
            edges: g.edges().to_vec(),
            rotation: None,
            cutout: None,
            assignments: BTreeMap::new(),
            name_table: None,
            metadata: BTreeMap::new(),
        }
    }

    pub fn from_map(m: &CombinatorialMap) -> Self {
        let mut doc = GraphDocument::from_graph(m.graph());
        doc.rotation = Some(m.rotation().orders().to_vec());
        doc
    }

    pub fn from_instance(inst: &NamedFamilyInstance) -> Self {
        let mut doc = match &inst.map {
            Some(m) => GraphDocument::from_map(m),
            None => GraphDocument::from_graph(&inst.graph),
        };
        doc.cutout = inst.cutout.clone().map(CutoutBlock::new);
        doc.assignments.insert(MAIN.into(), inst.assignment.clone());
        if let Some(p) = &inst.partner {
            doc.assignments.insert(PARTNER.into(), p.clone());
        }
        if !inst.name_table.is_empty() {
            doc.name_table = Some(inst.name_table.clone());
        }
        doc.metadata.insert("family".into(), inst.family.clone().into());
        doc.metadata.insert("parameter".into(), inst.parameter.into());
        if !inst.metadata.is_empty() {
            doc.metadata.insert("notes".into(), inst.metadata.clone().into());
        }
        doc
    }

    pub fn with_assignment(mut self, name: &str, a: TotalAssignment) -> Self {
        self.assignments.insert(name.into(), a);
        self
    }

    /// Checks referential integrity: ids in range, sorted simple edge
    /// list, cubic degrees, colors in `0..4`, assignment shapes, and a
    /// rotation that permutes each vertex's incident edges.
    pub fn validate(&self) -> Result<()> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Document(format!("unsupported format_version {}", self.format_version)));
        }
        let g = self.graph()?;
        let bad_color = |c: &Option<Color>| c.is_some_and(|c| c > 3);
        for (name, a) in &self.assignments {
            if a.vertices.len() != g.n() || a.edges.len() != g.m() {
                return Err(Error::Document(format!("assignment {name} has the wrong shape")));
            }
            if a.vertices.iter().chain(&a.edges).any(bad_color) {
                return Err(Error::Document(format!("assignment {name} uses a color outside 0..4")));
            }
        }
        if let Some(names) = &self.name_table {
            if let Some((k, v)) = names.iter().find(|(_, &v)| v >= g.n()) {
                return Err(Error::Document(format!("name {k} points to missing vertex {v}")));
            }
        }
        if self.rotation.is_some() {
            self.map()?;
        }
        if let Some(block) = &self.cutout {
            let r = block.cutout.realize_full().map_err(|e| Error::Document(format!("cutout: {e}")))?;
            if r.map.graph().edges() != g.edges() {
                return Err(Error::Document("cutout does not realize the listed graph".into()));
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> Result<CubicGraph> {
        if self.edges.iter().any(|&(u, v)| u >= v || v >= self.n) {
            return Err(Error::Document("edges must be pairs (u, v) with u < v < n".into()));
        }
        if self.edges.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Document("edge list must be strictly sorted".into()));
        }
        CubicGraph::new(self.n, self.edges.iter().copied()).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn map(&self) -> Result<Option<CombinatorialMap>> {
        let Some(rot) = &self.rotation else { return Ok(None) };
        let g = self.graph()?;
        let rs = RotationSystem::new(&g, rot.clone()).map_err(|e| Error::Document(e.to_string()))?;
        Ok(Some(CombinatorialMap::new(g, rs).map_err(|e| Error::Document(e.to_string()))?))
    }

    pub fn assignment(&self, name: &str) -> Result<&TotalAssignment> {
        self.assignments.get(name).ok_or_else(|| Error::Document(format!("no assignment named {name}")))
    }

    /// The assignment named `main`, or the only one present.
    pub fn primary_assignment(&self) -> Result<&TotalAssignment> {
        if let Some(a) = self.assignments.get(MAIN) {
            return Ok(a);
        }
        match self.assignments.len() {
            1 => Ok(self.assignments.values().next().unwrap()),
            0 => Err(Error::Document("document has no assignment".into())),
            _ => Err(Error::Document("several assignments and none named main".into())),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDocument = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }
}

fn color_hex(c: Option<Color>) -> &'static str {
    c.map_or("#000000", |c| PALETTE[c as usize].1)
}

/// Graphviz rendering of the graph with the given assignment (if any).
pub fn to_dot(doc: &GraphDocument, assignment: Option<&TotalAssignment>) -> Result<String> {
    let g = doc.graph()?;
    let names: BTreeMap<VertexId, &str> = doc
        .name_table
        .iter()
        .flatten()
        .map(|(k, &v)| (v, k.as_str()))
        .collect();
    let mut out = String::from("graph G {\n  node [shape=circle, style=filled, fontcolor=white];\n");
    for v in 0..g.n() {
        let label = names.get(&v).copied().map_or_else(|| v.to_string(), str::to_string);
        let c = assignment.and_then(|a| a.vertex(v));
        let fill = if c.is_some() { color_hex(c) } else { "#ffffff" };
        let font = if c.is_some() { "white" } else { "black" };
        writeln!(out, "  {v} [label=\"{label}\", fillcolor=\"{fill}\", fontcolor={font}];").unwrap();
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let c = assignment.and_then(|a| a.edge(e));
        writeln!(out, "  {u} -- {v} [color=\"{}\", penwidth=2];", color_hex(c)).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

/// SVG drawing of the document's cutout. Glued sides are dashed. Needs a
/// cutout block.
pub fn to_svg(doc: &GraphDocument, assignment: Option<&TotalAssignment>) -> Result<String> {
    let block = doc.cutout.as_ref().ok_or_else(|| Error::Document("svg export needs cutout placements".into()))?;
    let c = &block.cutout;
    let r = c.realize_full()?;
    const UNIT: i64 = 60;
    const MARGIN: i64 = 30;
    let (w, h) = (c.width * UNIT + 2 * MARGIN, c.height * UNIT + 2 * MARGIN);
    let px = |(x, y): (i64, i64)| (x * UNIT + MARGIN, (c.height - y) * UNIT + MARGIN);
    let mut out = String::new();
    writeln!(out, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">").unwrap();
    writeln!(out, "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>").unwrap();
    let (x0, y0) = px((0, c.height));
    let (x1, y1) = px((c.width, 0));
    let sides = [
        (matches!(c.identification, Identification::X | Identification::Both), [(x0, y0, x0, y1), (x1, y0, x1, y1)]),
        (matches!(c.identification, Identification::Y | Identification::Both), [(x0, y0, x1, y0), (x0, y1, x1, y1)]),
    ];
    for (glued, lines) in sides {
        for (a, b, cc, d) in lines {
            let dash = if glued { " stroke-dasharray=\"6,4\"" } else { "" };
            writeln!(out, "<line x1=\"{a}\" y1=\"{b}\" x2=\"{cc}\" y2=\"{d}\" stroke=\"#999999\" stroke-width=\"1\"{dash}/>").unwrap();
        }
    }
    for (k, pl) in c.polylines.iter().enumerate() {
        let e = r.edge_of_polyline[k];
        let color = color_hex(assignment.and_then(|a| a.edge(e)));
        let pts: Vec<String> = pl.iter().map(|&p| px(p)).map(|(x, y)| format!("{x},{y}")).collect();
        writeln!(out, "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"4\"/>", pts.join(" ")).unwrap();
    }
    for (i, &p) in c.points.iter().enumerate() {
        let v = r.vertex_of_point[i];
        let (x, y) = px(p);
        let fill = match assignment.and_then(|a| a.vertex(v)) {
            Some(col) => PALETTE[col as usize].1,
            None => "#ffffff",
        };
        writeln!(out, "<circle cx=\"{x}\" cy=\"{y}\" r=\"9\" fill=\"{fill}\" stroke=\"black\" stroke-width=\"1\"/>").unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn round_trip_families() {
        for inst in [families::q3().unwrap(), families::truncated_square_tiling().unwrap(), families::gamma(1).unwrap()] {
            let doc = GraphDocument::from_instance(&inst);
            let back = GraphDocument::from_json(&doc.to_json().unwrap()).unwrap();
            assert_eq!(back, doc);
        }
    }

    #[test]
    fn unsorted_edges_rejected() {
        let mut doc = GraphDocument::from_graph(&crate::graph::named::k33());
        doc.edges.swap(0, 1);
        assert!(matches!(doc.graph(), Err(Error::Document(_))));
    }

    #[test]
    fn bad_color_rejected() {
        let g = crate::graph::named::k33();
        let mut a = TotalAssignment::empty(&g);
        a.vertices[0] = Some(7);
        let doc = GraphDocument::from_graph(&g).with_assignment(MAIN, a);
        assert!(doc.validate().is_err());
    }

    #[test]
    fn dot_uses_palette() {
        let inst = families::q3().unwrap();
        let doc = GraphDocument::from_instance(&inst);
        let dot = to_dot(&doc, Some(&inst.assignment)).unwrap();
        for (_, hex) in PALETTE {
            assert!(dot.contains(hex));
        }
        let plain = to_dot(&doc, None).unwrap();
        assert!(!plain.contains(PALETTE[1].1));
    }

    #[test]
    fn svg_needs_placements() {
        let doc = GraphDocument::from_graph(&crate::graph::named::k33());
        assert!(to_svg(&doc, None).is_err());
        let inst = families::truncated_square_tiling().unwrap();
        let svg = to_svg(&GraphDocument::from_instance(&inst), Some(&inst.assignment)).unwrap();
        assert!(svg.contains("stroke-dasharray"));
    }
}
