//! Operations on colored graphs and cutouts.

mod amalgam;
mod exchange;
mod extend;
mod spray;
mod trace;

pub use amalgam::{amalgam, AmalgamSide};
pub use exchange::{exchange, exchange_cutout, exchange_map, ExchangeSite};
pub use extend::{extend, unfold, unfold_graph, Axis, LadderColors, Patch, PatchVertex};
pub use spray::{spray_propagate, SprayOutcome, SpraySeed, SprayStats};
pub use trace::{replay, TraceState, TraceStep};
