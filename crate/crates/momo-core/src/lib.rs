//! Steady-state evolutionary optimizer for multi-modal multi-objective
//! problems, together with the benchmark problems, reference sets and
//! quality metrics needed to evaluate it.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the CLI
//! live in the companion `momo-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod clustering;
pub mod engine;
pub mod metrics;
pub mod problems;
pub mod ranking;
pub mod rng;
pub mod stats;
pub mod types;
pub mod variation;

pub use engine::{run, GenerationEvent, RunRecord, Snapshot};
pub use problems::{Problem, ProblemId, ReferenceSet};
pub use rng::RandomStream;
pub use types::{
    Archive, Bounds, ClusterTracker, DecisionVector, ObjectiveVector, Population, RunConfig,
    Solution,
};
