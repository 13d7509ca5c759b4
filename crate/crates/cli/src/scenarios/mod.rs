//! Scenario implementations. Each takes a validated [`ExperimentConfig`] and
//! returns the rendered output table; [`run`] dispatches on the scenario tag.

mod known;
mod synth;
mod tune;
mod validate;

pub use synth::fit_base_classifier;

use alphatune::sampling::derive_seed;
use rayon::prelude::*;

use crate::config::{ExperimentConfig, Scenario};
use crate::error::Result;

pub fn run(cfg: &ExperimentConfig) -> Result<String> {
    match cfg.scenario {
        Scenario::KnownSweep => known::run(cfg),
        Scenario::SynthSweep => synth::run(cfg),
        Scenario::DeValidate => validate::run(cfg, validate::Flavor::DeterministicEquivalent),
        Scenario::GeValidate => validate::run(cfg, validate::Flavor::GEstimate),
        Scenario::Tune => tune::run(cfg),
    }
}

/// The per-replication seeds for a block of `reps` replications starting at
/// global replication index `first`. Logged in output comments so any row
/// can be reproduced standalone.
pub(crate) fn replication_seeds(base: u64, first: u64, reps: usize) -> Vec<u64> {
    (0..reps as u64).map(|r| derive_seed(base, first + r)).collect()
}

/// Runs `body` once per seed, in parallel, collecting results in seed order
/// (so aggregation downstream is order-deterministic).
pub(crate) fn map_replications<T: Send>(
    seeds: &[u64],
    body: impl Fn(u64) -> T + Sync,
) -> Vec<T> {
    seeds.par_iter().map(|&s| body(s)).collect()
}
