//! Polygon presentations of maps on higher-genus surfaces.
//!
//! The gluing is stored combinatorially: the faces lying inside the
//! polygon as vertex cycles, and for every pair of opposite sides the
//! edges that run through it. Geometry is never needed.

use serde::{Deserialize, Serialize};

use super::CombinatorialMap;
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZonogonCutout {
    /// Number of polygon sides; 0 stands for the sphere.
    pub sides: usize,
    pub faces: Vec<Vec<VertexId>>,
    pub side_pairs: Vec<Vec<EdgeId>>,
}

impl ZonogonCutout {
    pub fn new(g: &CubicGraph, sides: usize, faces: Vec<Vec<VertexId>>, side_pairs: Vec<Vec<EdgeId>>) -> Result<Self> {
        if sides % 2 == 1 {
            return Err(Error::Cutout(format!("a zonogon cannot have {sides} sides")));
        }
        if side_pairs.len() != sides / 2 {
            return Err(Error::Cutout(format!(
                "{} side pairs for a {sides}-gon",
                side_pairs.len()
            )));
        }
        if let Some(&e) = side_pairs.iter().flatten().find(|&&e| e >= g.m()) {
            return Err(Error::Cutout(format!("side pair lists unknown edge {e}")));
        }
        Ok(ZonogonCutout { sides, faces, side_pairs })
    }

    /// Genus of the surface obtained by gluing opposite sides in parallel.
    pub fn surface_genus(&self) -> usize {
        self.sides / 4
    }

    pub fn realize(&self, g: &CubicGraph) -> Result<CombinatorialMap> {
        CombinatorialMap::from_face_cycles(g.clone(), &self.faces)
    }
}
