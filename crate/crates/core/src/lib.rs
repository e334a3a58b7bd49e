//! Efficient total colorings (ETC / ETGC) of cubic graphs of girth 4.
//!
//! The crate builds the named graph families with their colorings,
//! validates every coloring notion involved (total, efficient, girth,
//! semi-total, orthogonal pairs), runs exhaustive searches with
//! constraint propagation, and replays the constructive operations
//! (spray, extension, unfolding, exchange, amalgam) on cutouts and
//! combinatorial maps.

pub mod coloring;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod maps;
pub mod ops;
pub mod search;

pub use coloring::{Color, TotalAssignment, COLORS};
pub use error::{Error, Result};
pub use graph::{CanonicalForm, CubicGraph, EdgeId, VertexId};
pub use maps::{Belt, CombinatorialMap, Cutout, Identification, RotationSystem};
