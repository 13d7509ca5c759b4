//! Synthetic sweep: replicate (sample training set, fit the base
//! classifier, sweep `alpha` against the exact error under the true model),
//! then report the per-`alpha` mean curve with standard errors.

use alphatune::alpha::{grid_search_alpha, select_alpha_star, AlphaObjective};
use alphatune::classifiers::{
    fit_lda, fit_linear_svm, fit_logistic, fit_nearest_centroid, fit_rlda, fit_rplda,
    LinearDiscriminant, RpLdaConfig,
};
use alphatune::expected_error::expected_error_exact;
use alphatune::model::{compute_sample_statistics, GaussianClassModel, LabeledDataset, SampleStatistics};
use alphatune::sampling::{derive_seed, sample_dataset};

use crate::config::{ClassifierKind, ClassifierSpec, ExperimentConfig};
use crate::error::{CliError, Result};
use crate::models::build_model;
use crate::output::{cell, seed_list, Table};
use crate::scenarios::{map_replications, replication_seeds};

/// Distinguishes the replication's data substreams (0..=2 inside
/// `sample_dataset`) from the projection substreams of `rplda`.
const PROJECTION_SEED_INDEX: u64 = 101;

pub fn run(cfg: &ExperimentConfig) -> Result<String> {
    let model = build_model(cfg.family, cfg.p)?;
    let grid = cfg.alpha_grid()?;
    let seeds = replication_seeds(cfg.seed, 0, cfg.reps);
    let results = map_replications(&seeds, |seed| replication_curve(cfg, &model, &grid, seed));

    let mut sums = vec![0.0_f64; grid.len()];
    let mut sq_sums = vec![0.0_f64; grid.len()];
    let mut ok = 0usize;
    let mut failures: Vec<(u64, String)> = Vec::new();
    for (seed, result) in seeds.iter().zip(results) {
        match result {
            Ok(curve) => {
                ok += 1;
                for (i, v) in curve.iter().enumerate() {
                    sums[i] += v;
                    sq_sums[i] += v * v;
                }
            }
            Err(e) => failures.push((*seed, e.to_string())),
        }
    }
    if ok == 0 {
        let (_, last) = failures.last().expect("reps >= 1");
        return Err(CliError::Numerical(alphatune::Error::InvalidParameter(
            format!("all {} replications failed; last error: {last}", cfg.reps),
        )));
    }

    let mean_curve: Vec<(f64, f64)> = grid
        .iter()
        .zip(&sums)
        .map(|(&a, &s)| (a, s / ok as f64))
        .collect();
    let mut table = Table::new(
        cfg,
        vec!["alpha", "mean_exact_error", "se_exact_error", "reps_ok"],
    );
    table.comment(format!("rep_seeds = {}", seed_list(&seeds)));
    table.comment(format!("failed_reps = {}", failures.len()));
    for (seed, message) in &failures {
        table.comment(format!("failed_rep seed {seed}: {message}"));
    }
    let best = select_alpha_star(&mean_curve);
    table.comment_value("best_alpha", best);
    let at = |alpha: f64| {
        mean_curve
            .iter()
            .find(|(a, _)| *a == alpha)
            .map(|&(_, v)| v)
    };
    let best_error = at(best).expect("best_alpha is a grid point");
    table.comment_value("mean_exact_error_at_best_alpha", best_error);
    if let Some(baseline) = at(1.0) {
        table.comment_value("mean_exact_error_at_alpha1", baseline);
        table.comment_value(
            "relative_decrease_vs_alpha1",
            (baseline - best_error) / baseline,
        );
    }
    for (i, &(alpha, mean)) in mean_curve.iter().enumerate() {
        let se = if ok >= 2 {
            let var = (sq_sums[i] - sums[i] * sums[i] / ok as f64) / (ok as f64 - 1.0);
            (var.max(0.0) / ok as f64).sqrt()
        } else {
            0.0
        };
        table.row(vec![
            cell(alpha),
            cell(mean),
            cell(se),
            ok.to_string(),
        ]);
    }
    Ok(table.render())
}

fn replication_curve(
    cfg: &ExperimentConfig,
    model: &GaussianClassModel,
    grid: &[f64],
    seed: u64,
) -> alphatune::Result<Vec<f64>> {
    let data = sample_dataset(model, cfg.n0, cfg.n1, seed)?;
    let stats = compute_sample_statistics(&data);
    let disc = fit_base_classifier(&cfg.classifier, &data, &stats, Some(model), seed)?;
    let (_, curve) = grid_search_alpha(
        &disc.w,
        &stats,
        grid,
        &AlphaObjective::ExactError(model),
    )?;
    Ok(curve.into_iter().map(|(_, eps)| eps).collect())
}

/// Fits the configured base classifier on one training set. When
/// `spec.tune_native` is set and the true model is available, the native
/// hyperparameter (SVM penalty, ridge gamma, projection dimension) is chosen
/// by exact-error grid search over its published grid first.
pub fn fit_base_classifier(
    spec: &ClassifierSpec,
    data: &LabeledDataset,
    stats: &SampleStatistics,
    model: Option<&GaussianClassModel>,
    rep_seed: u64,
) -> alphatune::Result<LinearDiscriminant> {
    let tune_model = spec.tune_native.then_some(model).flatten();
    match spec.kind {
        ClassifierKind::Lda => fit_lda(stats),
        ClassifierKind::Centroid => fit_nearest_centroid(stats),
        ClassifierKind::Rlda => match tune_model {
            None => fit_rlda(stats, spec.gamma),
            Some(model) => {
                // gamma grid: 1e-4 then 0.1 .. 2.0 in steps of 0.1
                let candidates: Vec<f64> =
                    std::iter::once(1e-4).chain((1..=20).map(|k| k as f64 * 0.1)).collect();
                pick_best(model, candidates, |&gamma| fit_rlda(stats, gamma))
            }
        },
        ClassifierKind::Rplda => {
            let d_max = data.p().min(data.n().saturating_sub(4)).max(1);
            let projection_seed = derive_seed(rep_seed, PROJECTION_SEED_INDEX);
            let fit = |d: usize| {
                fit_rplda(
                    data,
                    &RpLdaConfig {
                        d,
                        m: spec.rp_members,
                        seed: projection_seed,
                    },
                )
            };
            match tune_model {
                None => fit(spec.rp_dim.unwrap_or_else(|| (d_max / 2).max(1)).min(d_max)),
                Some(model) => {
                    // d grid: 2, 4, ... up to min(p, n - 4)
                    let candidates: Vec<usize> = (1..=d_max / 2).map(|k| 2 * k).collect();
                    let candidates = if candidates.is_empty() { vec![1] } else { candidates };
                    pick_best(model, candidates, |&d| fit(d))
                }
            }
        }
        ClassifierKind::Svm => {
            let fit = |penalty: f64| fit_linear_svm(data, penalty, 1e-4, 4000);
            match tune_model {
                None => fit(spec.penalty),
                Some(model) => {
                    // penalty grid: 1e-4, 1e-3, ..., 1e3
                    let candidates: Vec<f64> = (-4..=3).map(|k| 10.0_f64.powi(k)).collect();
                    pick_best(model, candidates, |&c| fit(c))
                }
            }
        }
        ClassifierKind::Logistic => fit_logistic(data, 200, 1e-8),
    }
}

/// Fits every candidate and keeps the one with the lowest exact error under
/// the true model (first wins ties); candidates that fail to fit are skipped
/// unless all of them do.
fn pick_best<T>(
    model: &GaussianClassModel,
    candidates: Vec<T>,
    fit: impl Fn(&T) -> alphatune::Result<LinearDiscriminant>,
) -> alphatune::Result<LinearDiscriminant> {
    let mut best: Option<(f64, LinearDiscriminant)> = None;
    let mut last_err = None;
    for candidate in &candidates {
        match fit(candidate).and_then(|disc| {
            let eps = expected_error_exact(&disc, model)?;
            Ok((eps, disc))
        }) {
            Ok((eps, disc)) => {
                if best.as_ref().is_none_or(|(b, _)| eps < *b) {
                    best = Some((eps, disc));
                }
            }
            Err(e) => last_err = Some(e),
        }
    }
    match best {
        Some((_, disc)) => Ok(disc),
        None => Err(last_err.expect("candidate list is nonempty")),
    }
}
