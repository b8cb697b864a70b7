//! Solvers, verifiers and hardness reductions for four daily puzzle games:
//! Letter Boxed, Pips, Strands and Tiles.

pub mod io;
pub mod letterboxed;
pub mod outcome;
pub mod pips;
pub mod render;
pub mod source;
pub mod strands;
pub mod tiles;

pub use outcome::{Budget, SearchOutcome, DEFAULT_BUDGET};
