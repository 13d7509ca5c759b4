//! Exact misclassification probability of a linear discriminant under a
//! two-class Gaussian model, plus the conditional-moment view of the same
//! quantity and an empirical counterpart.
//!
//! For `beta, beta0` and classes `N(mu_i, sigma_i)` with priors `pi_i`, the
//! expected misclassification probability of `1{beta^T x + beta0 > 0}` is
//!
//! ```text
//! eps = pi0 * Phi( (beta^T mu0 + beta0) / sqrt(beta^T sigma0 beta) )
//!     + pi1 * Phi( -(beta^T mu1 + beta0) / sqrt(beta^T sigma1 beta) )
//! ```
//!
//! which this module also exposes through the quadruple
//! `(m_0, m_1, sigma_0^2, sigma_1^2)` of conditional means and variances, so
//! exact, asymptotic, and estimated flavors of the same moments all flow
//! through one `error_from_moments` bottleneck.

use nalgebra::DVector;

use crate::alpha::AlphaDiscriminant;
use crate::classifiers::LinearDiscriminant;
use crate::error::{Error, Result};
use crate::model::{GaussianClassModel, LabeledDataset, SampleStatistics};

/// Standard normal CDF, computed through the complementary error function
/// for accuracy deep in the tails: `Phi(x) = erfc(-x / sqrt(2)) / 2`.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x * std::f64::consts::FRAC_1_SQRT_2)
}

/// Which pipeline produced a set of conditional moments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentFlavor {
    /// Exact moments under a known Gaussian model.
    Exact,
    /// Asymptotic deterministic equivalents (functions of the true model).
    DeterministicEquivalent,
    /// Consistent estimates built from sample statistics alone.
    GEstimate,
}

/// Conditional discriminant moments `(m_0, m_1, sigma_0^2, sigma_1^2)`
/// tagged with their provenance so mixed-flavor comparisons are explicit.
#[derive(Debug, Clone, Copy)]
pub struct MomentQuadruple {
    pub m0: f64,
    pub m1: f64,
    pub s0_sq: f64,
    pub s1_sq: f64,
    pub flavor: MomentFlavor,
}

/// Misclassification probability from conditional moments:
/// `pi0 Phi(m0 / s0) + pi1 Phi(-m1 / s1)`. Errors on non-positive variances.
pub fn error_from_moments(moments: &MomentQuadruple, pi0: f64, pi1: f64) -> Result<f64> {
    for (class, s_sq) in [(0u8, moments.s0_sq), (1u8, moments.s1_sq)] {
        if !(s_sq > 0.0) || !s_sq.is_finite() {
            return Err(Error::NonPositiveVariance {
                class,
                value: s_sq,
            });
        }
    }
    Ok(pi0 * normal_cdf(moments.m0 / moments.s0_sq.sqrt())
        + pi1 * normal_cdf(-moments.m1 / moments.s1_sq.sqrt()))
}

/// Exact expected misclassification probability of `disc` under `model`.
/// The zero weight vector is rejected ([`Error::ZeroWeightVector`]); callers
/// that want to score it as the constant-0 classifier should do so
/// explicitly (its error is `pi1`).
pub fn expected_error_exact(disc: &LinearDiscriminant, model: &GaussianClassModel) -> Result<f64> {
    if disc.p() != model.p() {
        return Err(Error::DimensionMismatch {
            context: "discriminant and model dimensions",
            expected: model.p(),
            found: disc.p(),
        });
    }
    if disc.is_degenerate() {
        return Err(Error::ZeroWeightVector);
    }
    let moments = moments_of(disc, model)?;
    error_from_moments(&moments, model.pi0, model.pi1)
}

/// The exact conditional moments of an arbitrary discriminant under `model`.
fn moments_of(disc: &LinearDiscriminant, model: &GaussianClassModel) -> Result<MomentQuadruple> {
    let m0 = disc.w.dot(&model.mu0) + disc.w0;
    let m1 = disc.w.dot(&model.mu1) + disc.w0;
    let s0_sq = quadratic_form(&model.sigma0, &disc.w);
    let s1_sq = quadratic_form(&model.sigma1, &disc.w);
    Ok(MomentQuadruple {
        m0,
        m1,
        s0_sq,
        s1_sq,
        flavor: MomentFlavor::Exact,
    })
}

fn quadratic_form(sigma: &nalgebra::DMatrix<f64>, v: &DVector<f64>) -> f64 {
    (sigma * v).dot(v)
}

/// Exact conditional moments of the alpha-parameterized LDA discriminant,
/// derived from the row-vector form
/// `v^T = rho mu_hat^T + alpha mu_hat^T pooled^-1 P_mu_hat` (equivalently
/// `v = (1 - alpha) rho mu_hat + alpha pooled^-1 mu_hat`), where
/// `rho = mu_hat^T pooled^-1 mu_hat / mu_hat^T mu_hat`.
///
/// Precondition: `alpha_disc` was built from the LDA weight vector
/// `pooled^-1 mu_hat` of the same `stats` (checked to 1e-6 relative).
pub fn conditional_moments_exact(
    alpha_disc: &AlphaDiscriminant,
    stats: &SampleStatistics,
    model: &GaussianClassModel,
) -> Result<MomentQuadruple> {
    if stats.p() != model.p() {
        return Err(Error::DimensionMismatch {
            context: "statistics and model dimensions",
            expected: model.p(),
            found: stats.p(),
        });
    }
    let mu_hat = stats.mean_diff();
    // verify the precondition instead of silently producing wrong moments
    let residual = (&stats.sigma_pooled * &alpha_disc.base_w - &mu_hat).norm();
    if residual > 1e-6 * mu_hat.norm() {
        return Err(Error::InvalidParameter(format!(
            "conditional_moments_exact requires the LDA base weight \
             pooled^-1 mu_hat (relative residual {:.3e})",
            residual / mu_hat.norm()
        )));
    }
    let mu_hat_sq = mu_hat.norm_squared();
    if mu_hat_sq == 0.0 {
        return Err(Error::ZeroMeanDifference);
    }
    let rho = alpha_disc.base_w.dot(&mu_hat) / mu_hat_sq;
    let alpha = alpha_disc.alpha;
    let v = &mu_hat * ((1.0 - alpha) * rho) + &alpha_disc.base_w * alpha;
    let center = stats.center();
    let m0 = v.dot(&(&model.mu0 - &center));
    let m1 = v.dot(&(&model.mu1 - &center));
    let s0_sq = quadratic_form(&model.sigma0, &v);
    let s1_sq = quadratic_form(&model.sigma1, &v);
    Ok(MomentQuadruple {
        m0,
        m1,
        s0_sq,
        s1_sq,
        flavor: MomentFlavor::Exact,
    })
}

/// Fraction of `data` misclassified by `disc`.
pub fn empirical_error(disc: &LinearDiscriminant, data: &LabeledDataset) -> Result<f64> {
    if disc.p() != data.p() {
        return Err(Error::DimensionMismatch {
            context: "discriminant and dataset dimensions",
            expected: data.p(),
            found: disc.p(),
        });
    }
    let mut wrong = 0usize;
    for label in [0u8, 1u8] {
        let x = data.class(label);
        for j in 0..x.ncols() {
            let score = disc.w.dot(&x.column(j)) + disc.w0;
            let predicted = u8::from(score > 0.0);
            if predicted != label {
                wrong += 1;
            }
        }
    }
    Ok(wrong as f64 / data.n() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha::parameterize;
    use crate::classifiers::{fit_lda, fit_nearest_centroid};
    use crate::model::compute_sample_statistics;
    use crate::sampling::{sample_dataset, sample_mixture};
    use approx::assert_relative_eq;
    use nalgebra::{DMatrix, DVector};

    fn symmetric_model() -> GaussianClassModel {
        GaussianClassModel::new(
            DVector::from_vec(vec![-1.0, 0.0]),
            DVector::from_vec(vec![1.0, 0.0]),
            DMatrix::identity(2, 2),
            DMatrix::identity(2, 2),
            0.5,
            0.5,
        )
        .unwrap()
    }

    #[test]
    fn phi_reference_values() {
        assert_relative_eq!(normal_cdf(0.0), 0.5, epsilon = 1e-15);
        // classical table values, accurate to all shown digits
        assert_relative_eq!(normal_cdf(1.0), 0.841344746068543, epsilon = 1e-12);
        assert_relative_eq!(normal_cdf(-1.0), 0.158655253931457, epsilon = 1e-12);
        assert_relative_eq!(normal_cdf(2.0), 0.977249868051821, epsilon = 1e-12);
        // deep tail: Phi(-8) = 6.22096...e-16; erfc keeps relative accuracy
        assert_relative_eq!(normal_cdf(-8.0), 6.22096057427178e-16, max_relative = 1e-10);
        // complement identity
        for x in [-3.0, -0.7, 0.0, 0.2, 1.9, 4.0] {
            assert_relative_eq!(normal_cdf(x) + normal_cdf(-x), 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn hand_computed_symmetric_error() {
        // beta = (2, 0), beta0 = 0 on the symmetric model: both class terms
        // are Phi(-1), so eps = Phi(-1).
        let model = symmetric_model();
        let disc = LinearDiscriminant::new(DVector::from_vec(vec![2.0, 0.0]), 0.0).unwrap();
        let eps = expected_error_exact(&disc, &model).unwrap();
        assert_relative_eq!(eps, 0.158655253931457, epsilon = 1e-12);
    }

    #[test]
    fn scale_invariance_of_exact_error() {
        let model = symmetric_model();
        let disc = LinearDiscriminant::new(DVector::from_vec(vec![0.7, -0.3]), 0.4).unwrap();
        let scaled =
            LinearDiscriminant::new(disc.w.clone() * 137.0, disc.w0 * 137.0).unwrap();
        let a = expected_error_exact(&disc, &model).unwrap();
        let b = expected_error_exact(&scaled, &model).unwrap();
        assert_relative_eq!(a, b, epsilon = 1e-12);
    }

    #[test]
    fn zero_weight_is_rejected() {
        let model = symmetric_model();
        let disc = LinearDiscriminant::new(DVector::zeros(2), 0.3).unwrap();
        assert!(matches!(
            expected_error_exact(&disc, &model),
            Err(Error::ZeroWeightVector)
        ));
    }

    #[test]
    fn error_from_moments_rejects_bad_variance() {
        let m = MomentQuadruple {
            m0: -1.0,
            m1: 1.0,
            s0_sq: 0.0,
            s1_sq: 1.0,
            flavor: MomentFlavor::Exact,
        };
        assert!(matches!(
            error_from_moments(&m, 0.5, 0.5),
            Err(Error::NonPositiveVariance { class: 0, .. })
        ));
    }

    #[test]
    fn monte_carlo_agrees_with_formula() {
        // An intentionally lopsided discriminant and unequal priors; the MC
        // estimate must land within 3 binomial standard deviations.
        let model = GaussianClassModel::new(
            DVector::from_vec(vec![-0.5, 0.3, 0.0]),
            DVector::from_vec(vec![0.8, -0.1, 0.6]),
            DMatrix::from_row_slice(
                3,
                3,
                &[1.0, 0.2, 0.0, 0.2, 1.5, -0.3, 0.0, -0.3, 0.8],
            ),
            DMatrix::from_row_slice(
                3,
                3,
                &[1.2, -0.1, 0.1, -0.1, 0.9, 0.2, 0.1, 0.2, 1.1],
            ),
            0.35,
            0.65,
        )
        .unwrap();
        let disc =
            LinearDiscriminant::new(DVector::from_vec(vec![0.9, -0.4, 0.5]), -0.2).unwrap();
        let eps = expected_error_exact(&disc, &model).unwrap();

        let n = 1_000_000usize;
        let (labels, x) = sample_mixture(&model, n, 271828).unwrap();
        let mut wrong = 0usize;
        for (j, &label) in labels.iter().enumerate() {
            let predicted = u8::from(disc.w.dot(&x.column(j)) + disc.w0 > 0.0);
            if predicted != label {
                wrong += 1;
            }
        }
        let mc = wrong as f64 / n as f64;
        let sigma = (eps * (1.0 - eps) / n as f64).sqrt();
        assert!(
            (mc - eps).abs() <= 3.0 * sigma,
            "MC {mc} vs exact {eps} (3 sigma = {})",
            3.0 * sigma
        );
    }

    #[test]
    fn moment_route_matches_direct_route_for_alpha_lda() {
        // The two code paths (realized discriminant -> error formula, vs
        // rho-based row vector -> moments) must agree to near machine
        // precision across alpha.
        let p = 12;
        let model = GaussianClassModel::new(
            DVector::zeros(p),
            DVector::from_fn(p, |i, _| 0.3 + 0.05 * i as f64),
            DMatrix::from_fn(p, p, |i, j| if i == j { 1.0 } else { 0.25 }),
            DMatrix::from_fn(p, p, |i, j| if i == j { 1.0 } else { 0.25 }),
            0.5,
            0.5,
        )
        .unwrap();
        let data = sample_dataset(&model, 60, 45, 321).unwrap();
        let stats = compute_sample_statistics(&data);
        let lda = fit_lda(&stats).unwrap();
        for alpha in [-0.5, -0.1, 0.0, 0.33, 1.0, 1.7] {
            let ad = parameterize(&lda.w, &stats, alpha).unwrap();
            let eps_direct = expected_error_exact(&ad.realized, &model).unwrap();
            let m = conditional_moments_exact(&ad, &stats, &model).unwrap();
            let eps_moments = error_from_moments(&m, model.pi0, model.pi1).unwrap();
            assert_relative_eq!(eps_direct, eps_moments, epsilon = 1e-12);
        }
    }

    #[test]
    fn alpha_zero_moments_match_scaled_centroid() {
        let p = 6;
        let model = GaussianClassModel::new(
            DVector::zeros(p),
            DVector::from_element(p, 0.7),
            DMatrix::identity(p, p),
            DMatrix::identity(p, p),
            0.5,
            0.5,
        )
        .unwrap();
        let data = sample_dataset(&model, 50, 50, 88).unwrap();
        let stats = compute_sample_statistics(&data);
        let lda = fit_lda(&stats).unwrap();
        let ad = parameterize(&lda.w, &stats, 0.0).unwrap();
        let m = conditional_moments_exact(&ad, &stats, &model).unwrap();

        // nearest centroid (w = mu_hat) scaled by rho gives the same moments
        let centroid = fit_nearest_centroid(&stats).unwrap();
        let mu_hat = stats.mean_diff();
        let rho = lda.w.dot(&mu_hat) / mu_hat.norm_squared();
        let scaled = LinearDiscriminant::new(centroid.w.clone() * rho, centroid.w0 * rho).unwrap();
        let m0_direct = scaled.w.dot(&model.mu0) + scaled.w0;
        let s0_direct = (&model.sigma0 * &scaled.w).dot(&scaled.w);
        assert_relative_eq!(m.m0, m0_direct, epsilon = 1e-10);
        assert_relative_eq!(m.s0_sq, s0_direct, epsilon = 1e-10);
    }

    #[test]
    fn conditional_moments_reject_non_lda_weight() {
        let p = 4;
        let model = GaussianClassModel::new(
            DVector::zeros(p),
            DVector::from_element(p, 1.0),
            DMatrix::identity(p, p),
            DMatrix::identity(p, p),
            0.5,
            0.5,
        )
        .unwrap();
        let data = sample_dataset(&model, 30, 30, 5).unwrap();
        let stats = compute_sample_statistics(&data);
        let not_lda = DVector::from_fn(p, |i, _| (i + 1) as f64);
        let ad = parameterize(&not_lda, &stats, 0.5).unwrap();
        assert!(conditional_moments_exact(&ad, &stats, &model).is_err());
    }

    #[test]
    fn empirical_error_counts_exactly() {
        // 1-D: class 0 at {0, 2}, class 1 at {4, 6}; threshold 3 separates,
        // threshold 5 misclassifies one class-1 point.
        let data = LabeledDataset::new(
            DMatrix::from_row_slice(1, 2, &[0.0, 2.0]),
            DMatrix::from_row_slice(1, 2, &[4.0, 6.0]),
        )
        .unwrap();
        let separating =
            LinearDiscriminant::new(DVector::from_vec(vec![1.0]), -3.0).unwrap();
        assert_eq!(empirical_error(&separating, &data).unwrap(), 0.0);
        let shifted = LinearDiscriminant::new(DVector::from_vec(vec![1.0]), -5.0).unwrap();
        assert_relative_eq!(empirical_error(&shifted, &data).unwrap(), 0.25);
        // boundary point scores exactly zero -> class 0 (strict inequality)
        let boundary = LinearDiscriminant::new(DVector::from_vec(vec![1.0]), -4.0).unwrap();
        assert_relative_eq!(empirical_error(&boundary, &data).unwrap(), 0.25);
    }
}
