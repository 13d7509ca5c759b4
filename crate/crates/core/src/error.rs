//! Error type shared by every module in the crate.

use crate::classifiers::LinearDiscriminant;

/// Everything that can go wrong across the crate, from shape mismatches to
/// solver non-convergence. Numerical failures carry enough context (matrix
/// role, iteration counts, residuals) to be actionable without a debugger.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Two inputs that must agree in dimension do not.
    #[error("dimension mismatch: {context} (expected {expected}, found {found})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    /// A parameter failed validation (priors, grid bounds, counts, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A matrix that must be symmetric positive definite is not. `role`
    /// names the matrix so the message says *which* one broke.
    #[error("{role} is singular or indefinite (Cholesky pivot below threshold)")]
    NotPositiveDefinite { role: String },

    /// Pooled sample covariance cannot be factorized, so plain LDA is
    /// unavailable. Distinct from the generic SPD failure so the message can
    /// point at the remedies.
    #[error(
        "pooled sample covariance is singular or indefinite (p >= n - 2?); \
         consider ridge regularization (fit_rlda) or random projections (fit_rplda)"
    )]
    PooledCovarianceSingular,

    /// The class means coincide, so the mean-difference direction (and with
    /// it the whole decomposition) is undefined.
    #[error("class mean difference is zero; the discriminant decomposition is undefined")]
    ZeroMeanDifference,

    /// The weight vector has no component orthogonal to the mean difference,
    /// so the tuning ratio divides by (numerically) zero.
    #[error("weight vector lies in the mean-difference direction; alpha_mmse is undefined")]
    WeightAlongMeanDifference,

    /// An operation that assumes a single common covariance was called on a
    /// model whose class covariances differ.
    #[error("{0} requires a common class covariance, but sigma0 != sigma1")]
    DistinctCovariances(&'static str),

    /// Exact error of the zero discriminant is requested; the Gaussian error
    /// formula divides by sigma = 0.
    #[error("weight vector is identically zero; the exact error formula is undefined")]
    ZeroWeightVector,

    /// A conditional variance came out non-positive.
    #[error("non-positive variance ({value:.3e}) for class {class}; moments are unusable")]
    NonPositiveVariance { class: u8, value: f64 },

    /// Iteratively reweighted least squares did not converge (typically
    /// separable data driving the weights to infinity). Carries the last
    /// iterate so callers can inspect or reuse it.
    #[error(
        "logistic regression did not converge in {iterations} iterations \
         (last step norm {step_norm:.3e}); data may be separable"
    )]
    LogisticNonConvergence {
        iterations: usize,
        step_norm: f64,
        last: Box<LinearDiscriminant>,
    },

    /// Dual coordinate descent hit its iteration cap before reaching the
    /// requested KKT tolerance.
    #[error(
        "SVM solver hit the iteration cap ({iterations} passes) with duality gap {duality_gap:.3e}"
    )]
    SvmIterationCap { iterations: usize, duality_gap: f64 },

    /// The two-trace fixed point stalled before reaching tolerance.
    #[error(
        "fixed-point iteration did not reach tolerance in {iterations} iterations \
         (residual {residual:.3e})"
    )]
    FixedPointNonConvergence { iterations: usize, residual: f64 },

    /// The sample-trace correction lambda_i = t/(1-t) is undefined because
    /// t = tr(Sigma_hat_i Sigma_hat^-1)/(n-2) reached 1.
    #[error(
        "trace correction undefined for class {class}: tr ratio {ratio:.6} >= 1 \
         (p too close to n)"
    )]
    TraceCorrectionUndefined { class: u8, ratio: f64 },

    /// Estimators requiring p < n - 2 were asked for a growth regime where
    /// that fails.
    #[error("estimator requires p < n - 2, got p = {p}, n = {n}")]
    GrowthRegimeUnsupported { p: usize, n: usize },

    /// A CSV row failed to parse; `line` is 1-based.
    #[error("malformed CSV at line {line}: {message}")]
    CsvFormat { line: usize, message: String },

    /// Objective evaluation failed at a specific grid point.
    #[error("objective evaluation failed at alpha = {alpha}: {source}")]
    ObjectiveEvaluation {
        alpha: f64,
        #[source]
        source: Box<Error>,
    },

    /// Underlying I/O failure (dataset loading and saving).
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
