//! Binary linear classifiers: a shared discriminant type and fitters for
//! LDA, nearest centroid, ridge-regularized LDA, random-projection ensemble
//! LDA, logistic regression, and a linear soft-margin SVM.
//!
//! All fitters produce a [`LinearDiscriminant`] classifying via
//! `1{w^T x + w0 > 0}` (ties go to class 0), so every classifier can be fed
//! into the same alpha-tuning machinery.

mod logistic;
mod svm;

pub use logistic::fit_logistic;
pub use svm::fit_linear_svm;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::linalg::SpdFactor;
use crate::model::{compute_sample_statistics, LabeledDataset, SampleStatistics};
use crate::sampling::{standard_normal_matrix, substream};

/// A hyperplane classifier `x -> 1{w^T x + w0 > 0}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearDiscriminant {
    pub w: DVector<f64>,
    pub w0: f64,
}

impl LinearDiscriminant {
    /// Checked construction: rejects non-finite entries.
    pub fn new(w: DVector<f64>, w0: f64) -> Result<Self> {
        if !w0.is_finite() || w.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(
                "discriminant entries must be finite".to_string(),
            ));
        }
        Ok(Self { w, w0 })
    }

    /// The raw discriminant value `w^T x + w0`.
    pub fn score(&self, x: &DVector<f64>) -> f64 {
        self.w.dot(x) + self.w0
    }

    /// Class decision: `1` iff `w^T x + w0 > 0` (strict, so the zero
    /// discriminant constantly answers `0`).
    pub fn classify(&self, x: &DVector<f64>) -> u8 {
        u8::from(self.score(x) > 0.0)
    }

    /// A weight vector that is identically zero carries no direction; callers
    /// that tune or score such a discriminant treat it as the constant-0
    /// classifier rather than an error.
    pub fn is_degenerate(&self) -> bool {
        self.w.iter().all(|&v| v == 0.0)
    }

    pub fn p(&self) -> usize {
        self.w.len()
    }
}

/// Fisher LDA on sample statistics: `w = pooled^-1 mu_hat`,
/// `w0 = -w^T c + ln(pi1_hat / pi0_hat)` with `c` the midpoint of the class
/// means. Fails with a remedial hint when the pooled covariance cannot be
/// factorized (e.g. p >= n - 2).
pub fn fit_lda(stats: &SampleStatistics) -> Result<LinearDiscriminant> {
    let factor = SpdFactor::new(&stats.sigma_pooled, "pooled sample covariance")
        .map_err(|_| Error::PooledCovarianceSingular)?;
    let w = factor.solve_vector(&stats.mean_diff())?;
    let w0 = -w.dot(&stats.center()) + (stats.pi1_hat / stats.pi0_hat).ln();
    LinearDiscriminant::new(w, w0)
}

/// Nearest-centroid rule: `w = mu_hat`, `w0 = -mu_hat^T c`. No prior term —
/// the rule compares Euclidean distances to the two centroids. Coinciding
/// centroids produce the zero discriminant (see
/// [`LinearDiscriminant::is_degenerate`]) rather than an error.
pub fn fit_nearest_centroid(stats: &SampleStatistics) -> Result<LinearDiscriminant> {
    let w = stats.mean_diff();
    let w0 = -w.dot(&stats.center());
    LinearDiscriminant::new(w, w0)
}

/// Ridge-regularized LDA: `w = (pooled + gamma I)^-1 mu_hat`, same intercept
/// convention as [`fit_lda`]. Requires `gamma > 0`.
pub fn fit_rlda(stats: &SampleStatistics, gamma: f64) -> Result<LinearDiscriminant> {
    if !(gamma > 0.0) || !gamma.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "ridge parameter must be positive and finite, got {gamma}"
        )));
    }
    let p = stats.p();
    let mut regularized = stats.sigma_pooled.clone();
    for i in 0..p {
        regularized[(i, i)] += gamma;
    }
    let w = SpdFactor::new(&regularized, "ridge-regularized covariance")?
        .solve_vector(&stats.mean_diff())?;
    let w0 = -w.dot(&stats.center()) + (stats.pi1_hat / stats.pi0_hat).ln();
    LinearDiscriminant::new(w, w0)
}

/// Configuration for the random-projection LDA ensemble.
#[derive(Debug, Clone, Copy)]
pub struct RpLdaConfig {
    /// Projected dimension, `1 <= d <= min(p, n - 4)`.
    pub d: usize,
    /// Ensemble size (number of independent projections averaged).
    pub m: usize,
    /// Seed for the projection matrices; projection `i` draws from substream
    /// `i`, so the ensemble is reproducible and order-stable.
    pub seed: u64,
}

/// Random-projection ensemble LDA:
/// `w = (1/M) sum_i R_i^T (R_i pooled R_i^T)^-1 R_i mu_hat` with `R_i` a
/// `d x p` matrix of i.i.d. standard normals. Works in regimes where the
/// pooled covariance itself is singular (p >= n). If one projected
/// covariance fails to factorize the projection is redrawn once before
/// giving up.
pub fn fit_rplda(data: &LabeledDataset, config: &RpLdaConfig) -> Result<LinearDiscriminant> {
    let stats = compute_sample_statistics(data);
    let p = stats.p();
    let n = stats.n();
    let d_max = p.min(n.saturating_sub(4));
    if config.d == 0 || config.d > d_max {
        return Err(Error::InvalidParameter(format!(
            "projected dimension d = {} outside [1, {d_max}] for p = {p}, n = {n}",
            config.d
        )));
    }
    if config.m == 0 {
        return Err(Error::InvalidParameter(
            "ensemble size m must be at least 1".to_string(),
        ));
    }
    let mu_hat = stats.mean_diff();
    let mut w = DVector::zeros(p);
    for i in 0..config.m {
        let mut rng = substream(config.seed, i as u64);
        w += match single_projection(&stats.sigma_pooled, &mu_hat, config.d, &mut rng) {
            Ok(v) => v,
            // One redraw from the same substream; a second failure is an
            // error (the projected covariance is genuinely losing rank).
            Err(_) => single_projection(&stats.sigma_pooled, &mu_hat, config.d, &mut rng)?,
        };
    }
    w /= config.m as f64;
    let w0 = -w.dot(&stats.center()) + (stats.pi1_hat / stats.pi0_hat).ln();
    LinearDiscriminant::new(w, w0)
}

/// One ensemble member: `R^T (R pooled R^T)^-1 R mu_hat`.
fn single_projection(
    pooled: &DMatrix<f64>,
    mu_hat: &DVector<f64>,
    d: usize,
    rng: &mut rand_chacha::ChaCha12Rng,
) -> Result<DVector<f64>> {
    let p = pooled.nrows();
    let r = standard_normal_matrix(d, p, rng);
    let mut projected = &r * pooled * r.transpose();
    crate::linalg::symmetrize(&mut projected);
    let factor = SpdFactor::new(&projected, "projected pooled covariance")?;
    let y = factor.solve_vector(&(&r * mu_hat))?;
    Ok(r.transpose() * y)
}
