//! Tuning `alpha` on user-supplied CSV data: sweep the G-estimated error
//! (needs no validation data) and, when a test CSV is given, the empirical
//! test error, then report both optima and the cost of trusting the
//! G-estimator.

use alphatune::alpha::{grid_search_alpha, AlphaObjective};
use alphatune::classifiers::fit_lda;
use alphatune::model::{compute_sample_statistics, LabeledDataset};

use crate::config::{ClassifierKind, ExperimentConfig};
use crate::error::Result;
use crate::output::{cell, cell_probability, Table};
use crate::scenarios::synth::fit_base_classifier;

pub fn run(cfg: &ExperimentConfig) -> Result<String> {
    let train_path = cfg.train_csv.as_deref().expect("validated at config time");
    let train = LabeledDataset::from_csv(train_path)?;
    let stats = compute_sample_statistics(&train);
    let test = match cfg.test_csv.as_deref() {
        Some(path) => Some(LabeledDataset::from_csv(path)?),
        None => None,
    };
    let grid = cfg.alpha_grid()?;

    let disc = if cfg.classifier.kind == ClassifierKind::Lda {
        fit_lda(&stats)?
    } else {
        fit_base_classifier(&cfg.classifier, &train, &stats, None, cfg.seed)?
    };

    // G-estimated curve: defined for the LDA weight vector only.
    let ge = if cfg.classifier.kind == ClassifierKind::Lda {
        Some(grid_search_alpha(
            &disc.w,
            &stats,
            &grid,
            &AlphaObjective::GEstimatedError {
                assume_common_cov: cfg.assume_common_cov,
            },
        )?)
    } else {
        None
    };
    let empirical = match &test {
        Some(test_data) => Some(grid_search_alpha(
            &disc.w,
            &stats,
            &grid,
            &AlphaObjective::EmpiricalError(test_data),
        )?),
        None => None,
    };

    let mut header = vec!["alpha"];
    if ge.is_some() {
        header.push("ge_error");
    }
    if empirical.is_some() {
        header.push("test_error");
    }
    let mut table = Table::new(cfg, header);
    table.comment(format!(
        "train = {} samples ({} + {}), p = {}",
        train.n(),
        train.n0(),
        train.n1(),
        train.p()
    ));
    if let Some(test_data) = &test {
        table.comment(format!("test = {} samples", test_data.n()));
    }

    let value_at = |curve: &[(f64, f64)], alpha: f64| {
        curve
            .iter()
            .find(|(a, _)| *a == alpha)
            .map(|&(_, v)| v)
            .expect("alpha comes from the same grid")
    };
    if let Some((star, curve)) = &ge {
        table.comment_value("alpha_star_ge", *star);
        table.comment_value(
            "ge_error_at_alpha_star",
            value_at(curve, *star).clamp(0.0, 1.0),
        );
        if grid.contains(&1.0) {
            table.comment_value("ge_error_at_alpha1", value_at(curve, 1.0).clamp(0.0, 1.0));
        }
    }
    if let Some((star, curve)) = &empirical {
        table.comment_value("alpha_star_empirical", *star);
        table.comment_value("test_error_at_alpha_star", value_at(curve, *star));
        if grid.contains(&1.0) {
            table.comment_value("test_error_at_alpha1", value_at(curve, 1.0));
        }
        if let Some((ge_star, _)) = &ge {
            let at_ge = value_at(curve, *ge_star);
            table.comment_value("test_error_at_alpha_star_ge", at_ge);
            table.comment_value("empirical_gap_ge_vs_best", at_ge - value_at(curve, *star));
        }
    }

    for (i, &alpha) in grid.iter().enumerate() {
        let mut row = vec![cell(alpha)];
        if let Some((_, curve)) = &ge {
            row.push(cell_probability(curve[i].1));
        }
        if let Some((_, curve)) = &empirical {
            row.push(cell(curve[i].1));
        }
        table.row(row);
    }
    Ok(table.render())
}
