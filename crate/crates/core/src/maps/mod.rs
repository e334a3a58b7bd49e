//! Combinatorial maps on cubic graphs: rotation systems, belts (faces)
//! and Euler genus, plus the cutout presentations that produce them.

mod cutout;
mod zonogon;

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, VertexId};

pub use cutout::{Cutout, Identification, Point, Realized};
pub use zonogon::ZonogonCutout;

/// A dart is a directed edge: `2 * e` runs from the smaller endpoint of
/// `e` to the larger one, `2 * e + 1` the other way.
pub type Dart = usize;

/// Cyclic order of the three incident edges at every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    order: Vec<[EdgeId; 3]>,
}

impl RotationSystem {
    pub fn new(g: &CubicGraph, order: Vec<[EdgeId; 3]>) -> Result<Self> {
        if order.len() != g.n() {
            return Err(Error::MalformedRotation(format!(
                "{} cyclic orders for {} vertices",
                order.len(),
                g.n()
            )));
        }
        for (v, cyc) in order.iter().enumerate() {
            let mut a = *cyc;
            let mut b = *g.incident(v);
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Err(Error::MalformedRotation(format!(
                    "vertex {v}: {cyc:?} is not a cyclic order of its edges {b:?}"
                )));
            }
        }
        Ok(RotationSystem { order })
    }

    /// Rotation given by the cyclic order of neighbors at each vertex.
    pub fn from_neighbor_orders(g: &CubicGraph, orders: &[[VertexId; 3]]) -> Result<Self> {
        let order = orders
            .iter()
            .enumerate()
            .map(|(v, nb)| {
                let mut cyc = [0; 3];
                for (i, &w) in nb.iter().enumerate() {
                    cyc[i] = g.edge_between(v, w).ok_or_else(|| {
                        Error::MalformedRotation(format!("{v}-{w} is not an edge"))
                    })?;
                }
                Ok(cyc)
            })
            .collect::<Result<Vec<_>>>()?;
        RotationSystem::new(g, order)
    }

    pub fn at(&self, v: VertexId) -> &[EdgeId; 3] {
        &self.order[v]
    }

    pub fn orders(&self) -> &[[EdgeId; 3]] {
        &self.order
    }
}

/// A closed face-boundary walk: `vertices[i]` is followed by `edges[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Belt {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Belt {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// True if the walk visits the same cyclic vertex sequence as `cycle`,
    /// in either direction and from any starting point.
    pub fn matches_cycle(&self, cycle: &[VertexId]) -> bool {
        let n = self.vertices.len();
        if cycle.len() != n {
            return false;
        }
        let rev: Vec<VertexId> = self.vertices.iter().rev().copied().collect();
        [&self.vertices, &rev]
            .iter()
            .any(|seq| (0..n).any(|s| (0..n).all(|i| seq[(s + i) % n] == cycle[i])))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialMap {
    graph: CubicGraph,
    rotation: RotationSystem,
}

impl CombinatorialMap {
    pub fn new(graph: CubicGraph, rotation: RotationSystem) -> Result<Self> {
        RotationSystem::new(&graph, rotation.order.clone())?;
        Ok(CombinatorialMap { graph, rotation })
    }

    pub fn graph(&self) -> &CubicGraph {
        &self.graph
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rotation
    }

    pub fn into_graph(self) -> CubicGraph {
        self.graph
    }

    pub fn tail(&self, d: Dart) -> VertexId {
        let (a, b) = self.graph.endpoints(d / 2);
        if d % 2 == 0 {
            a
        } else {
            b
        }
    }

    pub fn head(&self, d: Dart) -> VertexId {
        self.tail(d ^ 1)
    }

    fn dart_from(&self, e: EdgeId, v: VertexId) -> Dart {
        dart_leaving(&self.graph, e, v)
    }

    /// Next dart around the tail vertex in the rotation.
    pub fn rotate(&self, d: Dart) -> Dart {
        let v = self.tail(d);
        let cyc = self.rotation.at(v);
        let i = cyc.iter().position(|&e| e == d / 2).expect("dart edge at its tail");
        self.dart_from(cyc[(i + 1) % 3], v)
    }

    /// Face successor: rotate the reversed dart at the head.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.rotate(d ^ 1)
    }

    /// All faces; each dart lies on exactly one belt.
    pub fn trace_belts(&self) -> Vec<Belt> {
        let darts = 2 * self.graph.m();
        let mut used = vec![false; darts];
        let mut belts = Vec::new();
        for start in 0..darts {
            if used[start] {
                continue;
            }
            let mut belt = Belt { vertices: Vec::new(), edges: Vec::new() };
            let mut d = start;
            while !used[d] {
                used[d] = true;
                belt.vertices.push(self.tail(d));
                belt.edges.push(d / 2);
                d = self.face_next(d);
            }
            belts.push(belt);
        }
        belts
    }

    /// `(2 - V + E - F) / 2` for the embedding carried by the rotation.
    pub fn euler_genus(&self) -> Result<usize> {
        if !self.graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let (v, e, f) = (self.graph.n() as i64, self.graph.m() as i64, self.trace_belts().len() as i64);
        let twice = 2 - v + e - f;
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::MalformedRotation(format!("odd Euler characteristic {}", v - e + f)));
        }
        Ok((twice / 2) as usize)
    }

    /// Builds the rotation from a set of face boundary cycles given as
    /// vertex sequences in either direction. The faces are oriented
    /// coherently across shared edges; every vertex must lie on at least
    /// one of them. Faces not listed are recovered by tracing.
    pub fn from_face_cycles(graph: CubicGraph, faces: &[Vec<VertexId>]) -> Result<Self> {
        let mut face_darts: Vec<Vec<Dart>> = Vec::with_capacity(faces.len());
        let mut by_edge: HashMap<EdgeId, Vec<(usize, Dart)>> = HashMap::new();
        for (f, cyc) in faces.iter().enumerate() {
            if cyc.len() < 3 {
                return Err(Error::MalformedRotation(format!("face {f} is too short")));
            }
            let mut ds = Vec::with_capacity(cyc.len());
            for i in 0..cyc.len() {
                let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
                let e = graph.edge_between(a, b).ok_or_else(|| {
                    Error::MalformedRotation(format!("face {f}: {a}-{b} is not an edge"))
                })?;
                let d = dart_leaving(&graph, e, a);
                ds.push(d);
                by_edge.entry(e).or_default().push((f, d));
            }
            face_darts.push(ds);
        }
        // orientation sign per face: +1 keeps the listed direction
        let mut sign: Vec<Option<bool>> = vec![None; faces.len()];
        for root in 0..faces.len() {
            if sign[root].is_some() {
                continue;
            }
            sign[root] = Some(true);
            let mut q = VecDeque::from([root]);
            while let Some(f) = q.pop_front() {
                let sf = sign[f].unwrap();
                for &d in &face_darts[f] {
                    let used = if sf { d } else { d ^ 1 };
                    for &(g, dg) in &by_edge[&(d / 2)] {
                        if g == f && dg == d {
                            continue;
                        }
                        // g must run through this edge the other way
                        let want = dg == used ^ 1;
                        match sign[g] {
                            None => {
                                sign[g] = Some(want);
                                q.push_back(g);
                            }
                            Some(s) if s != want => {
                                return Err(Error::MalformedRotation(format!(
                                    "faces {f} and {g} cannot be oriented coherently"
                                )));
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        let mut succ: HashMap<Dart, Dart> = HashMap::new();
        let mut dart_owner: HashMap<Dart, usize> = HashMap::new();
        for (f, ds) in face_darts.iter().enumerate() {
            let oriented: Vec<Dart> = if sign[f].unwrap() {
                ds.clone()
            } else {
                ds.iter().rev().map(|&d| d ^ 1).collect()
            };
            for (i, &d) in oriented.iter().enumerate() {
                if let Some(g) = dart_owner.insert(d, f) {
                    return Err(Error::MalformedRotation(format!(
                        "faces {g} and {f} traverse the same dart"
                    )));
                }
                let next = oriented[(i + 1) % oriented.len()];
                // corner a -> b -> c fixes rotate(b -> a) = b -> c
                let from = d ^ 1;
                if let Some(&old) = succ.get(&from) {
                    if old != next {
                        return Err(Error::MalformedRotation("conflicting corners".into()));
                    }
                }
                succ.insert(from, next);
            }
        }
        let mut order = Vec::with_capacity(graph.n());
        for v in 0..graph.n() {
            let inc = *graph.incident(v);
            let darts = inc.map(|e| dart_leaving(&graph, e, v));
            let Some((i, &d)) = darts.iter().enumerate().find(|(_, d)| succ.contains_key(d)) else {
                return Err(Error::MalformedRotation(format!("vertex {v} lies on no listed face")));
            };
            let j = darts.iter().position(|&x| x == succ[&d]).ok_or_else(|| {
                Error::MalformedRotation(format!("corner at {v} leaves its edges"))
            })?;
            let k = 3 - i - j;
            let cyc = [inc[i], inc[j], inc[k]];
            let cyc_darts = [darts[i], darts[j], darts[k]];
            for p in 0..3 {
                if let Some(&s) = succ.get(&cyc_darts[p]) {
                    if s != cyc_darts[(p + 1) % 3] {
                        return Err(Error::MalformedRotation(format!("corners at vertex {v} disagree")));
                    }
                }
            }
            order.push(cyc);
        }
        let rotation = RotationSystem::new(&graph, order)?;
        CombinatorialMap::new(graph, rotation)
    }
}

pub(crate) fn dart_leaving(g: &CubicGraph, e: EdgeId, v: VertexId) -> Dart {
    if g.endpoints(e).0 == v {
        2 * e
    } else {
        2 * e + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn cube_faces() -> Vec<Vec<VertexId>> {
        // bits: 1 = x, 2 = y, 4 = z
        vec![
            vec![0, 1, 3, 2],
            vec![4, 5, 7, 6],
            vec![0, 1, 5, 4],
            vec![2, 3, 7, 6],
            vec![0, 2, 6, 4],
            vec![1, 3, 7, 5],
        ]
    }

    #[test]
    fn cube_from_faces_is_planar() {
        let m = CombinatorialMap::from_face_cycles(named::q3(), &cube_faces()).unwrap();
        let belts = m.trace_belts();
        assert_eq!(belts.len(), 6);
        assert!(belts.iter().all(|b| b.len() == 4));
        assert_eq!(m.euler_genus().unwrap(), 0);
        for f in cube_faces() {
            assert!(belts.iter().any(|b| b.matches_cycle(&f)));
        }
    }

    #[test]
    fn five_faces_suffice() {
        let faces = cube_faces()[..5].to_vec();
        let m = CombinatorialMap::from_face_cycles(named::q3(), &faces).unwrap();
        assert_eq!(m.trace_belts().len(), 6);
    }

    #[test]
    fn k33_on_the_torus() {
        // K33 embeds on the torus with three hexagons
        let g = named::k33();
        let faces = vec![vec![0, 3, 1, 4, 2, 5], vec![0, 4, 2, 3, 1, 5]];
        let m = CombinatorialMap::from_face_cycles(g, &faces).unwrap();
        let belts = m.trace_belts();
        assert_eq!(belts.iter().map(Belt::len).sum::<usize>(), 18);
        assert_eq!(m.euler_genus().unwrap(), 1);
    }

    #[test]
    fn malformed_rotation_rejected() {
        let g = named::q3();
        let bad = vec![[0, 0, 0]; 8];
        assert!(matches!(RotationSystem::new(&g, bad), Err(Error::MalformedRotation(_))));
        let faces = vec![vec![0, 1, 2, 3]];
        assert!(CombinatorialMap::from_face_cycles(g, &faces).is_err());
    }

    #[test]
    fn dart_conservation_any_rotation() {
        let g = named::petersen();
        let order: Vec<[EdgeId; 3]> = (0..10).map(|v| *g.incident(v)).collect();
        let m = CombinatorialMap::new(g.clone(), RotationSystem::new(&g, order).unwrap()).unwrap();
        assert_eq!(m.trace_belts().iter().map(Belt::len).sum::<usize>(), 30);
        let chi = 10 - 15 + m.trace_belts().len() as i64;
        assert_eq!(chi % 2, 0);
    }
}
