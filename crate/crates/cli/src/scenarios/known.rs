//! Known-means sweep: draw one random unit weight vector, sweep the
//! orthogonal-noise scale `alpha` with the class means and covariance known,
//! and tabulate the exact error next to the closed-form optimum.

use alphatune::alpha::{alpha_discriminant_known_means, alpha_mmse};
use alphatune::expected_error::expected_error_exact;
use alphatune::sampling::{random_unit_vector, substream};

use crate::config::ExperimentConfig;
use crate::error::Result;
use crate::models::build_model;
use crate::output::{cell, Table};

pub fn run(cfg: &ExperimentConfig) -> Result<String> {
    let model = build_model(cfg.family, cfg.p)?;
    let mut rng = substream(cfg.seed, 0);
    let w = random_unit_vector(cfg.p, &mut rng);
    let mmse = alpha_mmse(&w, &model)?;
    let w_dot_mu = w.dot(&model.mean_diff());

    let grid = cfg.alpha_grid()?;
    let nearest = grid
        .iter()
        .copied()
        .min_by(|a, b| {
            (a - mmse)
                .abs()
                .partial_cmp(&(b - mmse).abs())
                .expect("grid values are finite")
        })
        .expect("grid is nonempty");

    let mut table = Table::new(cfg, vec!["alpha", "exact_error", "alpha_mmse"]);
    table.comment_value("alpha_mmse", mmse);
    table.comment_value("w_dot_mu", w_dot_mu);
    table.comment(format!(
        "stationarity = exact error has a {} at alpha_mmse",
        if w_dot_mu >= 0.0 { "minimum" } else { "maximum" }
    ));
    table.comment_value("nearest_grid_alpha_to_mmse", nearest);
    for alpha in grid {
        let disc = alpha_discriminant_known_means(&w, &model, alpha)?;
        let eps = expected_error_exact(&disc, &model)?;
        table.row(vec![cell(alpha), cell(eps), cell(mmse)]);
    }
    Ok(table.render())
}
