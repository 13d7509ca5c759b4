//! Weight-vector tuning for binary linear classifiers between two Gaussian
//! classes.
//!
//! Any linear discriminant `w^T x + w_0` splits, relative to the difference
//! of the class means, into an informative component along that difference
//! and a noise component orthogonal to it. Scaling the orthogonal component
//! by a single factor `alpha` yields a one-parameter family of classifiers
//! that contains the original at `alpha = 1`; tuning `alpha` trades the two
//! components against each other and can only improve the misclassification
//! probability.
//!
//! The crate provides:
//!
//! * [`alpha`] — the decomposition itself, the mean-square-optimal shrinkage
//!   factor for known models, the sample-level reparameterization of a fitted
//!   discriminant, and grid search over `alpha` under exact, empirical, or
//!   estimated objectives;
//! * [`classifiers`] — reference fits that produce [`LinearDiscriminant`]s:
//!   LDA (plus ridge-regularized and random-projection ensemble variants for
//!   singular regimes), nearest centroid, logistic regression, and a linear
//!   support-vector machine;
//! * [`expected_error`] — exact Gaussian misclassification probabilities and
//!   the conditional discriminant moments they come from;
//! * [`rmt`] — deterministic equivalents of those moments in the
//!   proportional growth regime (`p` comparable to `n`), and G-estimators
//!   that tune `alpha` consistently from sample statistics alone;
//! * [`model`], [`sampling`] — two-class Gaussian models, datasets, sample
//!   statistics, and reproducible samplers;
//! * [`linalg`] — the small set of dense symmetric-positive-definite
//!   helpers everything else leans on.

// parameter guards use `!(x > 0.0)` on purpose: unlike `x <= 0.0` it also
// rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod alpha;
pub mod classifiers;
pub mod error;
pub mod expected_error;
pub mod linalg;
pub mod model;
pub mod rmt;
pub mod sampling;

pub use alpha::{
    alpha_discriminant_known_means, alpha_mmse, grid_search_alpha,
    modified_discriminant_known_means, parameterize, select_alpha_star, AlphaDiscriminant,
    AlphaGrid, AlphaObjective,
};
pub use classifiers::{
    fit_lda, fit_linear_svm, fit_logistic, fit_nearest_centroid, fit_rlda, fit_rplda,
    LinearDiscriminant, RpLdaConfig,
};
pub use error::{Error, Result};
pub use expected_error::{
    empirical_error, expected_error_exact, normal_cdf, MomentFlavor, MomentQuadruple,
};
pub use model::{
    compute_sample_statistics, GaussianClassModel, LabeledDataset, SampleStatistics,
};
pub use rmt::{
    build_de_context, de_misclassification, ge_misclassification, solve_fixed_point,
    tune_alpha_via_ge, DeEvaluator, DeterministicEquivalentContext, FixedPointSolution,
    GEstimatorContext, GeEvaluator,
};
pub use sampling::{sample_dataset, sample_mixture, substream};
