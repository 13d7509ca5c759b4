//! Experiment driver for the `alphatune` library: reproduces the synthetic
//! sweep/validation experiment families at configurable scale and tunes
//! `alpha` on user CSV data, emitting plot-ready CSV tables.
//!
//! The binary front-end lives in `main.rs`; everything here is callable
//! in-process (the integration tests exercise scenarios both ways).

// parameter guards use `!(x > 0.0)` on purpose: unlike `x <= 0.0` it also
// rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod models;
pub mod output;
pub mod scenarios;

use std::path::Path;

use config::{ExperimentConfig, Overrides, Scenario};
use error::Result;

/// Loads the config for `scenario`, runs it, and returns the rendered table.
pub fn run_scenario(
    scenario: Scenario,
    config_path: Option<&Path>,
    overrides: &Overrides,
) -> Result<String> {
    let cfg = ExperimentConfig::load(scenario, config_path, overrides)?;
    scenarios::run(&cfg)
}
