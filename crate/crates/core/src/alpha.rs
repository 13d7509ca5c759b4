//! Alpha-parameterized discriminants.
//!
//! Any linear discriminant `w^T x + w0` can be split along the class
//! mean-difference direction `mu` and its orthogonal complement
//! `P_mu = I - mu mu^T / mu^T mu`:
//!
//! ```text
//! w^T x_c = (w^T mu / mu^T mu) mu^T x_c  +  w^T P_mu x_c,      x_c = x - c
//! ```
//!
//! with `c` the midpoint of the class means. Scaling the orthogonal part by
//! a scalar `alpha` yields a one-parameter family of classifiers through `w`
//! (`alpha = 1` recovers `w` itself, `alpha = 0` is the matched filter along
//! `mu`). This module provides the decomposition, the closed-form MMSE-
//! optimal `alpha` when the model is known, the `alpha`-realized discriminant
//! built from sample statistics, and grid search over `alpha` under exact,
//! empirical, or estimated error objectives.

use nalgebra::DVector;

use crate::classifiers::LinearDiscriminant;
use crate::error::{Error, Result};
use crate::expected_error::{empirical_error, expected_error_exact};
use crate::model::{GaussianClassModel, LabeledDataset, SampleStatistics};
use crate::rmt::GeEvaluator;

/// The three pieces of a known-means discriminant decomposition evaluated at
/// one point: a deterministic informative term and two zero-mean noise terms
/// (along `mu` and orthogonal to it). They reassemble to `w^T (x - c)`.
#[derive(Debug, Clone, Copy)]
pub struct DecompositionTerms {
    /// `(-1)^(i+1) w^T mu / 2` for true class `i`: the signal carried by the
    /// discriminant.
    pub informative: f64,
    /// Zero-mean fluctuation along `mu`:
    /// `(w^T mu / mu^T mu) mu^T (x - c - (-1)^(i+1) mu / 2)`.
    pub mu_noise: f64,
    /// Zero-mean fluctuation orthogonal to `mu`: `w^T P_mu (x - c)`.
    pub orthogonal_noise: f64,
}

impl DecompositionTerms {
    /// `informative + mu_noise + orthogonal_noise = w^T (x - c)` exactly.
    pub fn total(&self) -> f64 {
        self.informative + self.mu_noise + self.orthogonal_noise
    }
}

/// Splits `w^T (x - c)` for a point `x` of known true class (0 or 1) under
/// known class means. Requires `mu1 != mu0`.
pub fn decompose_known_means(
    w: &DVector<f64>,
    model: &GaussianClassModel,
    x: &DVector<f64>,
    class: u8,
) -> Result<DecompositionTerms> {
    check_dims(w.len(), model.p(), "weight vector and model dimensions")?;
    check_dims(x.len(), model.p(), "point and model dimensions")?;
    if class > 1 {
        return Err(Error::InvalidParameter(format!(
            "class must be 0 or 1, got {class}"
        )));
    }
    let mu = model.mean_diff();
    let mu_sq = mu.norm_squared();
    if mu_sq == 0.0 {
        return Err(Error::ZeroMeanDifference);
    }
    let sign = if class == 1 { 1.0 } else { -1.0 };
    let x_c = x - model.center();
    let w_mu = w.dot(&mu);
    let ratio = w_mu / mu_sq;
    let informative = sign * 0.5 * w_mu;
    let mu_noise = ratio * (mu.dot(&x_c) - sign * 0.5 * mu_sq);
    // w^T P_mu x_c = w^T x_c - ratio * mu^T x_c
    let orthogonal_noise = w.dot(&x_c) - ratio * mu.dot(&x_c);
    Ok(DecompositionTerms {
        informative,
        mu_noise,
        orthogonal_noise,
    })
}

/// The `alpha` minimizing the mean-square of the total noise
/// `N1 + alpha N2` — equivalently, the scaling of the orthogonal part that
/// minimizes the misclassification probability when `w^T mu > 0` (and
/// maximizes it when `w^T mu < 0`):
///
/// ```text
/// alpha* = -(w^T mu / mu^T mu) * (mu^T Sigma P_mu w) / (w^T P_mu Sigma P_mu w)
/// ```
///
/// Defined for common-covariance models; errors if `w` has no component
/// orthogonal to `mu` (the ratio degenerates to 0/0).
pub fn alpha_mmse(w: &DVector<f64>, model: &GaussianClassModel) -> Result<f64> {
    check_dims(w.len(), model.p(), "weight vector and model dimensions")?;
    if !model.has_common_covariance() {
        return Err(Error::DistinctCovariances("alpha_mmse"));
    }
    let mu = model.mean_diff();
    let mu_sq = mu.norm_squared();
    if mu_sq == 0.0 {
        return Err(Error::ZeroMeanDifference);
    }
    let sigma = &model.sigma0;
    let ratio = w.dot(&mu) / mu_sq;
    // P_mu w, then the two quadratic forms against Sigma
    let p_w = w - &mu * (w.dot(&mu) / mu_sq);
    let sigma_pw = sigma * &p_w;
    let denominator = p_w.dot(&sigma_pw);
    let scale = sigma.norm() * w.norm_squared(); // Frobenius norm as matrix scale
    if denominator <= 1e-14 * scale {
        return Err(Error::WeightAlongMeanDifference);
    }
    let numerator = mu.dot(&sigma_pw);
    Ok(-ratio * numerator / denominator)
}

/// The discriminant realized by scaling the orthogonal part of `w` by
/// `alpha`, with known class means:
/// `w' = (w^T mu / mu^T mu) mu + alpha P_mu w`, `w0' = -w'^T c`.
pub fn alpha_discriminant_known_means(
    w: &DVector<f64>,
    model: &GaussianClassModel,
    alpha: f64,
) -> Result<LinearDiscriminant> {
    check_dims(w.len(), model.p(), "weight vector and model dimensions")?;
    let mu = model.mean_diff();
    let mu_sq = mu.norm_squared();
    if mu_sq == 0.0 {
        return Err(Error::ZeroMeanDifference);
    }
    let proj = &mu * projection_coefficient(w, &mu, mu_sq);
    let orth = w - &proj;
    let w_alpha = &proj + &orth * alpha;
    let w0 = -w_alpha.dot(&model.center());
    LinearDiscriminant::new(w_alpha, w0)
}

/// `w^T mu / mu^T mu`, snapped to exactly zero when the inner product is at
/// rounding level relative to the vector scales — so a weight orthogonal to
/// `mu` realizes the *exactly* zero discriminant at `alpha = 0` (and trips
/// the degeneracy flag) instead of one made of floating-point residue.
fn projection_coefficient(w: &DVector<f64>, mu: &DVector<f64>, mu_sq: f64) -> f64 {
    let dot = w.dot(mu);
    if dot.abs() <= 1e-14 * w.norm() * mu_sq.sqrt() {
        0.0
    } else {
        dot / mu_sq
    }
}

/// [`alpha_discriminant_known_means`] at the MMSE-optimal `alpha`: the best
/// classifier reachable from `w` by tuning the orthogonal scale, given the
/// true model.
pub fn modified_discriminant_known_means(
    w: &DVector<f64>,
    model: &GaussianClassModel,
) -> Result<LinearDiscriminant> {
    let alpha = alpha_mmse(w, model)?;
    alpha_discriminant_known_means(w, model, alpha)
}

/// An `alpha`-realized discriminant built from sample statistics, retaining
/// everything needed to re-realize at other `alpha` values or audit the
/// construction.
#[derive(Debug, Clone)]
pub struct AlphaDiscriminant {
    /// The weight vector being tuned.
    pub base_w: DVector<f64>,
    /// The orthogonal-part scaling that produced `realized`.
    pub alpha: f64,
    /// `mu_hat = mu1_hat - mu0_hat` of the statistics used.
    pub mu_hat_diff: DVector<f64>,
    /// Midpoint of the sample means; the realized intercept is `-w'^T center`.
    pub center: DVector<f64>,
    /// The classifier: `w' = (w^T mu_hat / mu_hat^T mu_hat) mu_hat
    /// + alpha P_mu_hat w`, `w0' = -w'^T center`. No prior-log-ratio term.
    pub realized: LinearDiscriminant,
}

/// Builds the `alpha`-realized discriminant from `w` and sample statistics.
/// At `alpha = 1` the realized weight reproduces `w` (up to the rounding of
/// the orthogonal split); `w` orthogonal to `mu_hat` with `alpha = 0` yields
/// the degenerate zero discriminant, flagged via
/// [`LinearDiscriminant::is_degenerate`] rather than an error.
pub fn parameterize(
    w: &DVector<f64>,
    stats: &SampleStatistics,
    alpha: f64,
) -> Result<AlphaDiscriminant> {
    check_dims(w.len(), stats.p(), "weight vector and statistics dimensions")?;
    if !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "alpha must be finite, got {alpha}"
        )));
    }
    let mu_hat = stats.mean_diff();
    let mu_sq = mu_hat.norm_squared();
    if mu_sq == 0.0 {
        return Err(Error::ZeroMeanDifference);
    }
    let center = stats.center();
    let proj = &mu_hat * projection_coefficient(w, &mu_hat, mu_sq);
    let orth = w - &proj;
    let w_alpha = &proj + &orth * alpha;
    let w0 = -w_alpha.dot(&center);
    let realized = LinearDiscriminant::new(w_alpha, w0)?;
    Ok(AlphaDiscriminant {
        base_w: w.clone(),
        alpha,
        mu_hat_diff: mu_hat,
        center,
        realized,
    })
}

/// An evenly spaced `alpha` grid. Values are snapped to a 1e-9 lattice so
/// decimal grids contain exact decimals (e.g. `1.0` rather than
/// `1.0000000000000002`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaGrid {
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

impl Default for AlphaGrid {
    /// The crate-wide default sweep range: `[-0.5, 2.0]` in steps of 0.005.
    fn default() -> Self {
        Self {
            min: -0.5,
            max: 2.0,
            step: 0.005,
        }
    }
}

impl AlphaGrid {
    pub fn new(min: f64, max: f64, step: f64) -> Result<Self> {
        if !min.is_finite() || !max.is_finite() || !(step > 0.0) || max < min {
            return Err(Error::InvalidParameter(format!(
                "alpha grid needs finite min <= max and step > 0, got [{min}, {max}] step {step}"
            )));
        }
        Ok(Self { min, max, step })
    }

    /// The grid points, inclusive of both ends when they align with the step.
    pub fn values(&self) -> Vec<f64> {
        let count = ((self.max - self.min) / self.step + 1e-9).floor() as usize;
        (0..=count)
            .map(|k| snap(self.min + k as f64 * self.step))
            .collect()
    }
}

fn snap(x: f64) -> f64 {
    (x * 1e9).round() / 1e9
}

/// What to minimize when sweeping `alpha`.
pub enum AlphaObjective<'a> {
    /// Exact misclassification probability under a known model. The
    /// degenerate zero discriminant is scored as the constant-0 classifier:
    /// error `pi1`.
    ExactError(&'a GaussianClassModel),
    /// Misclassification rate on held-out (or training) data.
    EmpiricalError(&'a LabeledDataset),
    /// The G-estimated error built from the statistics alone; only valid
    /// when `w` is the LDA weight vector of those statistics.
    GEstimatedError { assume_common_cov: bool },
}

/// Sweeps `alpha` over `grid`, minimizing `objective`. Returns the chosen
/// `alpha` and the full `(alpha, objective)` curve. Exact ties are broken
/// toward the `alpha` closest to 1, then toward the smaller `alpha`.
pub fn grid_search_alpha(
    w: &DVector<f64>,
    stats: &SampleStatistics,
    grid: &[f64],
    objective: &AlphaObjective<'_>,
) -> Result<(f64, Vec<(f64, f64)>)> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter("alpha grid is empty".to_string()));
    }
    // The G-estimator is a formula in the statistics; it describes the
    // alpha-family through the LDA weight only. Reject silent misuse.
    let ge_eval = match objective {
        AlphaObjective::GEstimatedError { assume_common_cov } => {
            let mu_hat = stats.mean_diff();
            let residual = (&stats.sigma_pooled * w - &mu_hat).norm();
            if residual > 1e-6 * mu_hat.norm() {
                return Err(Error::InvalidParameter(format!(
                    "the G-estimated objective requires the LDA weight vector \
                     pooled^-1 mu_hat (relative residual {:.3e})",
                    residual / mu_hat.norm()
                )));
            }
            Some(GeEvaluator::new(stats, *assume_common_cov)?)
        }
        _ => None,
    };

    let mut curve = Vec::with_capacity(grid.len());
    for &alpha in grid {
        let value = match objective {
            AlphaObjective::ExactError(model) => {
                let ad = parameterize(w, stats, alpha).map_err(|e| at(alpha, e))?;
                if ad.realized.is_degenerate() {
                    model.pi1 // constant-0 classifier misclassifies class 1
                } else {
                    expected_error_exact(&ad.realized, model).map_err(|e| at(alpha, e))?
                }
            }
            AlphaObjective::EmpiricalError(data) => {
                let ad = parameterize(w, stats, alpha).map_err(|e| at(alpha, e))?;
                empirical_error(&ad.realized, data).map_err(|e| at(alpha, e))?
            }
            AlphaObjective::GEstimatedError { .. } => ge_eval
                .as_ref()
                .expect("evaluator built above")
                .epsilon(alpha)
                .map_err(|e| at(alpha, e))?,
        };
        curve.push((alpha, value));
    }
    Ok((select_alpha_star(&curve), curve))
}

fn at(alpha: f64, source: Error) -> Error {
    Error::ObjectiveEvaluation {
        alpha,
        source: Box::new(source),
    }
}

/// The minimizing `alpha` of a `(alpha, value)` curve under the crate's tie
/// rule: strictly smaller value wins; exact ties prefer `alpha` closest to
/// 1, then the smaller `alpha`.
pub fn select_alpha_star(curve: &[(f64, f64)]) -> f64 {
    let mut best = curve[0];
    for &(a, v) in &curve[1..] {
        if v < best.1 {
            best = (a, v);
        } else if v == best.1 {
            let (da, db) = ((a - 1.0).abs(), (best.0 - 1.0).abs());
            if da < db || (da == db && a < best.0) {
                best = (a, v);
            }
        }
    }
    best.0
}

fn check_dims(found: usize, expected: usize, context: &'static str) -> Result<()> {
    if found != expected {
        return Err(Error::DimensionMismatch {
            context,
            expected,
            found,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifiers::fit_lda;
    use crate::linalg::SpdFactor;
    use crate::model::compute_sample_statistics;
    use crate::sampling::{random_unit_vector, sample_dataset, substream};
    use approx::assert_relative_eq;
    use nalgebra::{DMatrix, DVector};

    fn common_model(p: usize) -> GaussianClassModel {
        let mut sigma = DMatrix::zeros(p, p);
        for i in 0..p {
            for j in 0..p {
                sigma[(i, j)] = if i == j { 1.0 } else { 0.3 };
            }
        }
        GaussianClassModel::new(
            DVector::zeros(p),
            DVector::from_fn(p, |i, _| 0.5 + 0.1 * (i % 3) as f64),
            sigma.clone(),
            sigma,
            0.5,
            0.5,
        )
        .unwrap()
    }

    #[test]
    fn decomposition_reassembles_exactly() {
        let model = common_model(7);
        let mut rng = substream(10, 0);
        for class in [0u8, 1u8] {
            for _ in 0..20 {
                let w = random_unit_vector(7, &mut rng) * 3.0;
                let x = random_unit_vector(7, &mut rng) * 5.0;
                let terms = decompose_known_means(&w, &model, &x, class).unwrap();
                let direct = w.dot(&(&x - model.center()));
                assert_relative_eq!(terms.total(), direct, epsilon = 1e-12, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn noise_terms_average_to_zero() {
        // Empirical means of N1 and N2 over fresh draws from either class
        // shrink as 1/sqrt(n); the informative term carries all the signal.
        let model = common_model(5);
        let data = sample_dataset(&model, 20_000, 20_000, 77).unwrap();
        let mut rng = substream(78, 0);
        let w = random_unit_vector(5, &mut rng);
        for class in [0u8, 1u8] {
            let x = data.class(class);
            let mut sum_n1 = 0.0;
            let mut sum_n2 = 0.0;
            for j in 0..x.ncols() {
                let t =
                    decompose_known_means(&w, &model, &x.column(j).clone_owned(), class).unwrap();
                sum_n1 += t.mu_noise;
                sum_n2 += t.orthogonal_noise;
            }
            let n = x.ncols() as f64;
            assert!(sum_n1.abs() / n < 0.05, "mean N1 {}", sum_n1 / n);
            assert!(sum_n2.abs() / n < 0.05, "mean N2 {}", sum_n2 / n);
        }
    }

    #[test]
    fn lda_weight_is_already_optimal() {
        // w = Sigma^-1 mu has alpha_mmse exactly 1: no tuning improves it.
        let model = common_model(5);
        let mu = model.mean_diff();
        let w = SpdFactor::new(&model.sigma0, "sigma").unwrap().solve_vector(&mu).unwrap();
        let alpha = alpha_mmse(&w, &model).unwrap();
        assert_relative_eq!(alpha, 1.0, epsilon = 1e-10);
    }

    #[test]
    fn alpha_mmse_is_scale_invariant() {
        let model = common_model(6);
        let mut rng = substream(4, 0);
        let w = random_unit_vector(6, &mut rng);
        let base = alpha_mmse(&w, &model).unwrap();
        for scale in [0.01, 3.0, -2.0] {
            let scaled = &w * scale;
            assert_relative_eq!(alpha_mmse(&scaled, &model).unwrap(), base, epsilon = 1e-10);
        }
    }

    #[test]
    fn alpha_mmse_rejects_weight_along_mu() {
        let model = common_model(4);
        let w = model.mean_diff() * 2.5; // no orthogonal component
        assert!(matches!(
            alpha_mmse(&w, &model),
            Err(Error::WeightAlongMeanDifference)
        ));
    }

    #[test]
    fn alpha_mmse_requires_common_covariance() {
        let p = 3;
        let model = GaussianClassModel::new(
            DVector::zeros(p),
            DVector::from_element(p, 1.0),
            DMatrix::identity(p, p),
            DMatrix::identity(p, p) * 2.0,
            0.5,
            0.5,
        )
        .unwrap();
        let w = DVector::from_vec(vec![1.0, 1.0, 0.0]);
        assert!(matches!(
            alpha_mmse(&w, &model),
            Err(Error::DistinctCovariances(_))
        ));
    }

    #[test]
    fn grid_minimum_sits_at_alpha_mmse() {
        // Small-scale version of the stationarity property: the exact-error
        // curve over a fine grid attains its minimum within one step of the
        // closed-form alpha when w^T mu > 0.
        let model = common_model(12);
        let mu = model.mean_diff();
        let mut rng = substream(2024, 0);
        let mut w = random_unit_vector(12, &mut rng);
        if w.dot(&mu) < 0.0 {
            w = -w;
        }
        let alpha_star = alpha_mmse(&w, &model).unwrap();
        let mut best = (f64::NAN, f64::INFINITY);
        let mut a = -2.0;
        while a <= 3.0 {
            let disc = alpha_discriminant_known_means(&w, &model, a).unwrap();
            let eps = expected_error_exact(&disc, &model).unwrap();
            if eps < best.1 {
                best = (a, eps);
            }
            a += 0.002;
        }
        assert!(
            (best.0 - alpha_star).abs() <= 0.002 + 1e-9,
            "grid argmin {} vs closed form {alpha_star}",
            best.0
        );
    }

    #[test]
    fn modified_discriminant_equals_alpha_mmse_realization() {
        let model = common_model(8);
        let mut rng = substream(31, 0);
        let w = random_unit_vector(8, &mut rng);
        let alpha = alpha_mmse(&w, &model).unwrap();
        let a = modified_discriminant_known_means(&w, &model).unwrap();
        let b = alpha_discriminant_known_means(&w, &model, alpha).unwrap();
        assert_eq!(a.w, b.w);
        assert_eq!(a.w0, b.w0);
    }

    #[test]
    fn parameterize_identity_at_alpha_one() {
        let model = common_model(9);
        let data = sample_dataset(&model, 50, 40, 12).unwrap();
        let stats = compute_sample_statistics(&data);
        let mut rng = substream(13, 0);
        let w = random_unit_vector(9, &mut rng) * 2.0;
        let ad = parameterize(&w, &stats, 1.0).unwrap();
        let rel = (&ad.realized.w - &w).norm() / w.norm();
        assert!(rel <= 1e-12, "relative deviation {rel:e}");
        // realized intercept centers at the sample midpoint, no prior term
        assert_relative_eq!(
            ad.realized.w0,
            -ad.realized.w.dot(&stats.center()),
            epsilon = 1e-12
        );
    }

    #[test]
    fn parameterize_alpha_zero_is_matched_filter() {
        let model = common_model(5);
        let data = sample_dataset(&model, 30, 30, 3).unwrap();
        let stats = compute_sample_statistics(&data);
        let mu_hat = stats.mean_diff();
        let mut rng = substream(5, 0);
        let w = random_unit_vector(5, &mut rng);
        let ad = parameterize(&w, &stats, 0.0).unwrap();
        // realized.w is collinear with mu_hat
        let cos = ad.realized.w.dot(&mu_hat).abs() / (ad.realized.w.norm() * mu_hat.norm());
        assert_relative_eq!(cos, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn orthogonal_weight_at_alpha_zero_degenerates() {
        let stats = {
            let model = common_model(4);
            let data = sample_dataset(&model, 25, 25, 1).unwrap();
            compute_sample_statistics(&data)
        };
        let mu_hat = stats.mean_diff();
        // build w exactly orthogonal to mu_hat
        let mut w = DVector::from_vec(vec![1.0, 0.0, 0.0, 0.0]);
        w -= &mu_hat * (w.dot(&mu_hat) / mu_hat.norm_squared());
        let ad = parameterize(&w, &stats, 0.0).unwrap();
        assert!(ad.realized.is_degenerate());
    }

    #[test]
    fn default_grid_shape() {
        let grid = AlphaGrid::default().values();
        assert_eq!(grid.len(), 501);
        assert_eq!(grid[0], -0.5);
        assert_eq!(*grid.last().unwrap(), 2.0);
        assert!(grid.contains(&1.0), "grid must contain alpha = 1 exactly");
        assert!(grid.contains(&0.25));
    }

    #[test]
    fn grid_search_curve_matches_naive_loop() {
        let model = common_model(6);
        let data = sample_dataset(&model, 40, 40, 2718).unwrap();
        let stats = compute_sample_statistics(&data);
        let lda = fit_lda(&stats).unwrap();
        let grid = AlphaGrid::new(-0.5, 2.0, 0.05).unwrap().values();
        let (_, curve) =
            grid_search_alpha(&lda.w, &stats, &grid, &AlphaObjective::EmpiricalError(&data))
                .unwrap();
        for (k, &(alpha, value)) in curve.iter().enumerate() {
            assert_eq!(alpha, grid[k]);
            let ad = parameterize(&lda.w, &stats, alpha).unwrap();
            let direct = empirical_error(&ad.realized, &data).unwrap();
            assert_eq!(value, direct);
        }
    }

    #[test]
    fn exact_objective_matches_known_means_search() {
        // With idealized statistics (sample moments replaced by the truth),
        // the grid search over the exact objective lands within one step of
        // the closed-form alpha_mmse.
        let model = common_model(10);
        let stats = SampleStatistics::idealized(&model, 100, 100).unwrap();
        let mu = model.mean_diff();
        let mut rng = substream(99, 0);
        let mut w = random_unit_vector(10, &mut rng);
        if w.dot(&mu) < 0.0 {
            w = -w;
        }
        let alpha_star = alpha_mmse(&w, &model).unwrap();
        let grid = AlphaGrid::default().values();
        let (chosen, _) =
            grid_search_alpha(&w, &stats, &grid, &AlphaObjective::ExactError(&model)).unwrap();
        assert!(
            (chosen - alpha_star).abs() <= 0.005 + 1e-9,
            "chosen {chosen} vs closed form {alpha_star}"
        );
    }

    #[test]
    fn ties_prefer_alpha_nearest_one_then_smaller() {
        assert_eq!(select_alpha_star(&[(0.9, 0.5), (1.0, 0.5), (1.1, 0.5)]), 1.0);
        assert_eq!(select_alpha_star(&[(0.8, 0.5), (0.9, 0.5)]), 0.9);
        assert_eq!(select_alpha_star(&[(0.9, 0.5), (1.1, 0.5)]), 0.9);
        assert_eq!(select_alpha_star(&[(0.9, 0.5), (1.1, 0.4)]), 1.1);
    }

    #[test]
    fn ge_objective_rejects_non_lda_weight() {
        let model = common_model(5);
        let data = sample_dataset(&model, 60, 60, 6).unwrap();
        let stats = compute_sample_statistics(&data);
        let w = DVector::from_element(5, 1.0);
        let grid = [0.5, 1.0];
        let err = grid_search_alpha(
            &w,
            &stats,
            &grid,
            &AlphaObjective::GEstimatedError {
                assume_common_cov: true,
            },
        )
        .unwrap_err();
        assert!(err.to_string().contains("LDA weight vector"), "got: {err}");
    }

    #[test]
    fn degenerate_point_scored_as_constant_classifier() {
        // w orthogonal to mu_hat: at alpha = 0 the realized discriminant is
        // zero; the exact objective scores it as pi1 instead of failing.
        let model = common_model(4);
        let data = sample_dataset(&model, 25, 25, 1).unwrap();
        let stats = compute_sample_statistics(&data);
        let mu_hat = stats.mean_diff();
        let mut w = DVector::from_vec(vec![1.0, 0.0, 0.0, 0.0]);
        w -= &mu_hat * (w.dot(&mu_hat) / mu_hat.norm_squared());
        let grid = [0.0];
        let (_, curve) =
            grid_search_alpha(&w, &stats, &grid, &AlphaObjective::ExactError(&model)).unwrap();
        assert_eq!(curve[0].1, model.pi1);
    }
}
