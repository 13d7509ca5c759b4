//! Consistency validation sweeps: how far the deterministic equivalent
//! (`de-validate`) or the G-estimate (`ge-validate`) sits from the exact
//! per-realization error, across a dimension ladder at fixed `p/n`.

use alphatune::alpha::parameterize;
use alphatune::classifiers::fit_lda;
use alphatune::expected_error::expected_error_exact;
use alphatune::model::{compute_sample_statistics, GaussianClassModel};
use alphatune::rmt::{DeEvaluator, GeEvaluator};
use alphatune::sampling::sample_dataset;

use crate::config::ExperimentConfig;
use crate::error::{CliError, Result};
use crate::models::build_model;
use crate::output::{cell, seed_list, Table};
use crate::scenarios::{map_replications, replication_seeds};

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    DeterministicEquivalent,
    GEstimate,
}

pub fn run(cfg: &ExperimentConfig, flavor: Flavor) -> Result<String> {
    let grid = cfg.alpha_grid()?;
    let mut table = Table::new(
        cfg,
        vec!["p", "n0", "n1", "mean_abs_gap", "max_abs_gap", "reps_ok"],
    );
    table.comment(match flavor {
        Flavor::DeterministicEquivalent => {
            "gap = |exact error - deterministic equivalent|, over replications and alpha grid"
        }
        Flavor::GEstimate => {
            "gap = |g-estimated error - exact error|, over replications and alpha grid"
        }
    });

    for (block, &p) in cfg.p_list.iter().enumerate() {
        let (n0, n1) = cfg.validate_counts(p);
        let model = build_model(cfg.family, p)?;
        // the DE depends only on (model, n0, n1); build it once per p
        let de = match flavor {
            Flavor::DeterministicEquivalent => {
                Some(DeEvaluator::new(&model, n0, n1, cfg.assume_common_cov)?)
            }
            Flavor::GEstimate => None,
        };
        let seeds = replication_seeds(cfg.seed, (block * cfg.reps) as u64, cfg.reps);
        let results = map_replications(&seeds, |seed| {
            replication_gaps(cfg, &model, n0, n1, &grid, de.as_ref(), seed)
        });

        let mut ok = 0usize;
        let mut sum = 0.0_f64;
        let mut count = 0usize;
        let mut max = 0.0_f64;
        let mut failures: Vec<(u64, String)> = Vec::new();
        for (seed, result) in seeds.iter().zip(results) {
            match result {
                Ok(gaps) => {
                    ok += 1;
                    for g in gaps {
                        sum += g;
                        count += 1;
                        if g > max {
                            max = g;
                        }
                    }
                }
                Err(e) => failures.push((*seed, e.to_string())),
            }
        }
        if ok == 0 {
            let (_, last) = failures.last().expect("reps >= 1");
            return Err(CliError::Numerical(alphatune::Error::InvalidParameter(
                format!("all {} replications failed at p = {p}; last error: {last}", cfg.reps),
            )));
        }
        table.comment(format!("rep_seeds_p{p} = {}", seed_list(&seeds)));
        for (seed, message) in &failures {
            table.comment(format!("failed_rep p {p} seed {seed}: {message}"));
        }
        table.row(vec![
            p.to_string(),
            n0.to_string(),
            n1.to_string(),
            cell(sum / count as f64),
            cell(max),
            ok.to_string(),
        ]);
    }
    Ok(table.render())
}

/// One replication: per grid `alpha`, the absolute gap between the
/// realization's exact error and the asymptotic prediction/estimate.
fn replication_gaps(
    cfg: &ExperimentConfig,
    model: &GaussianClassModel,
    n0: usize,
    n1: usize,
    grid: &[f64],
    de: Option<&DeEvaluator>,
    seed: u64,
) -> alphatune::Result<Vec<f64>> {
    let data = sample_dataset(model, n0, n1, seed)?;
    let stats = compute_sample_statistics(&data);
    let w = fit_lda(&stats)?.w;
    let ge = match de {
        Some(_) => None,
        None => Some(GeEvaluator::new(&stats, cfg.assume_common_cov)?),
    };
    let mut gaps = Vec::with_capacity(grid.len());
    for &alpha in grid {
        let realized = parameterize(&w, &stats, alpha)?.realized;
        let exact = expected_error_exact(&realized, model)?;
        let other = match (de, &ge) {
            (Some(de), _) => de.epsilon(alpha)?,
            (None, Some(ge)) => ge.epsilon(alpha)?,
            (None, None) => unreachable!("one flavor is always selected"),
        };
        gaps.push((exact - other).abs());
    }
    Ok(gaps)
}
