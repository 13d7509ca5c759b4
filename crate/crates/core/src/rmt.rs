//! Asymptotic (random-matrix) analysis of alpha-parameterized LDA.
//!
//! In the growth regime where `p` and `n0, n1` diverge at comparable rates,
//! the conditional discriminant moments of alpha-parameterized LDA converge
//! to deterministic equivalents: functions of the true model only. This
//! module computes
//!
//! * the two-trace fixed point `(delta_t, nu_t)` behind the resolvent
//!   equivalent `Q_bar` of the inverse pooled sample covariance,
//! * the deterministic-equivalent moments and misclassification probability
//!   (general distinct-covariance form, plus the common-covariance closed
//!   form where the fixed point collapses to `p / (n - 2 - p)`),
//! * G-estimators: consistent plug-in estimates of the same moments built
//!   from *sample* statistics alone, enabling tuning of `alpha` without a
//!   validation set.

use nalgebra::{DMatrix, Matrix2};

use crate::alpha::select_alpha_star;
use crate::error::{Error, Result};
use crate::expected_error::{error_from_moments, MomentFlavor, MomentQuadruple};
use crate::linalg::{trace_product, SpdFactor};
use crate::model::{GaussianClassModel, SampleStatistics};

/// Solution of the coupled trace equations
/// `delta_t = tr(Sigma0 B^-1)/(n-2)`, `nu_t = tr(Sigma1 B^-1)/(n-2)` with
/// `B = ((n0-1)/(n-2)) Sigma0/(1+delta_t) + ((n1-1)/(n-2)) Sigma1/(1+nu_t)`.
#[derive(Debug, Clone, Copy)]
pub struct FixedPointSolution {
    pub delta_tilde: f64,
    pub nu_tilde: f64,
    pub iterations: usize,
    /// Max relative residual of the two trace equations at exit.
    pub residual: f64,
}

/// Iterates the two trace equations from `(1, 1)` until the max relative
/// residual drops to `tol`. Converges (linearly, at rate ~`p/(n-2)`) iff
/// `p < n - 2`; otherwise the iteration diverges and the iteration cap
/// produces [`Error::FixedPointNonConvergence`].
pub fn solve_fixed_point(
    sigma0: &DMatrix<f64>,
    sigma1: &DMatrix<f64>,
    n0: usize,
    n1: usize,
    tol: f64,
    max_iter: usize,
) -> Result<FixedPointSolution> {
    if sigma0.shape() != sigma1.shape() || sigma0.nrows() != sigma0.ncols() {
        return Err(Error::DimensionMismatch {
            context: "fixed point needs square covariances of equal size",
            expected: sigma0.nrows(),
            found: sigma1.nrows(),
        });
    }
    if n0 < 2 || n1 < 2 {
        return Err(Error::InvalidParameter(format!(
            "fixed point needs n_i >= 2, got n0 = {n0}, n1 = {n1}"
        )));
    }
    if !(tol > 0.0) || max_iter == 0 {
        return Err(Error::InvalidParameter(format!(
            "fixed point needs tol > 0 and max_iter >= 1, got ({tol}, {max_iter})"
        )));
    }
    let nm2 = (n0 + n1) as f64 - 2.0;
    let c0 = (n0 as f64 - 1.0) / nm2;
    let c1 = (n1 as f64 - 1.0) / nm2;

    let mut delta = 1.0_f64;
    let mut nu = 1.0_f64;
    let mut residual = f64::INFINITY;
    for iter in 1..=max_iter {
        let b = sigma0 * (c0 / (1.0 + delta)) + sigma1 * (c1 / (1.0 + nu));
        let factor = SpdFactor::new(&b, "fixed-point bracket matrix")?;
        let next_delta = factor.solve_matrix(sigma0)?.trace() / nm2;
        let next_nu = factor.solve_matrix(sigma1)?.trace() / nm2;
        residual = rel_gap(next_delta, delta).max(rel_gap(next_nu, nu));
        delta = next_delta;
        nu = next_nu;
        if residual <= tol {
            return Ok(FixedPointSolution {
                delta_tilde: delta,
                nu_tilde: nu,
                iterations: iter,
                residual,
            });
        }
    }
    Err(Error::FixedPointNonConvergence {
        iterations: max_iter,
        residual,
    })
}

fn rel_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

/// All matrix-valued deterministic-equivalent building blocks for one
/// `(model, n0, n1)` configuration.
#[derive(Debug, Clone)]
pub struct DeterministicEquivalentContext {
    /// Resolvent equivalent `Q_bar = B(delta_t, nu_t)^-1` of the inverse
    /// pooled sample covariance.
    pub q_bar: DMatrix<f64>,
    /// Second-order trace coupling matrix (2x2, class-indexed).
    pub omega: Matrix2<f64>,
    /// `R_ij = ((n_i - 1)/(n_j - 1)) [(I - omega)^-1 omega]_ij` — written
    /// here with 0-based indices; the classical 1-based display maps class
    /// `i` to row/column `i + 1`.
    pub r: Matrix2<f64>,
    /// `A_i = Sigma_i Q_bar`.
    pub a0: DMatrix<f64>,
    pub a1: DMatrix<f64>,
    /// `Q_tilde_i = Q_bar (A_i + R[0,i] A_0 + R[1,i] A_1)`: the equivalent of
    /// `Sigma_hat^-1 Sigma_i Sigma_hat^-1` up to the trace couplings.
    pub q_tilde0: DMatrix<f64>,
    pub q_tilde1: DMatrix<f64>,
    /// Deterministic equivalent of `rho = mu_hat^T pooled^-1 mu_hat / mu_hat^T mu_hat`.
    pub kappa: f64,
    /// Common-covariance spectral scalar `eta` (None when the class
    /// covariances differ).
    pub eta: Option<f64>,
    /// `tau = 1 / (1 - p/(n-2))`, the common-covariance value of
    /// `1 + delta_t`.
    pub tau: f64,
}

/// Builds every deterministic-equivalent block from a solved fixed point.
/// Requires `p < n - 2` and spectral radius of `omega` below one (both fail
/// exactly when the growth regime is unusable).
pub fn build_de_context(
    model: &GaussianClassModel,
    n0: usize,
    n1: usize,
    fp: &FixedPointSolution,
) -> Result<DeterministicEquivalentContext> {
    let p = model.p();
    let n = n0 + n1;
    if p + 2 >= n {
        return Err(Error::GrowthRegimeUnsupported { p, n });
    }
    let nm2 = n as f64 - 2.0;
    let c0 = (n0 as f64 - 1.0) / nm2;
    let c1 = (n1 as f64 - 1.0) / nm2;
    let b = &model.sigma0 * (c0 / (1.0 + fp.delta_tilde))
        + &model.sigma1 * (c1 / (1.0 + fp.nu_tilde));
    let q_bar = SpdFactor::new(&b, "fixed-point bracket matrix")?.inverse();
    let a0 = &model.sigma0 * &q_bar;
    let a1 = &model.sigma1 * &q_bar;

    // omega[(i, j)] = c_j / (1 + d_i)^2 * tr(Sigma_i Q_bar Sigma_j Q_bar) / (n-2)
    let d = [fp.delta_tilde, fp.nu_tilde];
    let c = [c0, c1];
    let a = [&a0, &a1];
    let mut omega = Matrix2::zeros();
    for i in 0..2 {
        for j in 0..2 {
            omega[(i, j)] =
                c[j] / (1.0 + d[i]).powi(2) * trace_product(a[i], a[j]) / nm2;
        }
    }
    let radius = spectral_radius_2x2(&omega);
    if radius >= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "trace-coupling series diverges: spectral radius of omega is {radius:.6} >= 1 \
             (p too close to n)"
        )));
    }
    let m = (Matrix2::identity() - omega)
        .try_inverse()
        .expect("I - omega invertible when spectral radius < 1")
        * omega;
    let counts = [n0 as f64 - 1.0, n1 as f64 - 1.0];
    let mut r = Matrix2::zeros();
    for i in 0..2 {
        for j in 0..2 {
            r[(i, j)] = counts[i] / counts[j] * m[(i, j)];
        }
    }
    let q_tilde0 = &q_bar * (&a0 + &a0 * r[(0, 0)] + &a1 * r[(1, 0)]);
    let q_tilde1 = &q_bar * (&a1 + &a0 * r[(0, 1)] + &a1 * r[(1, 1)]);

    let mu = model.mean_diff();
    let kappa = ((&q_bar * &mu).dot(&mu) + a0.trace() / n0 as f64 + a1.trace() / n1 as f64)
        / (mu.norm_squared()
            + model.sigma0.trace() / n0 as f64
            + model.sigma1.trace() / n1 as f64);
    let tau = 1.0 / (1.0 - p as f64 / nm2);
    let eta = if model.has_common_covariance() {
        let inv_mu = SpdFactor::new(&model.sigma0, "common covariance")?.solve_vector(&mu)?;
        let num = tau * (inv_mu.dot(&mu) + p as f64 / n0 as f64 + p as f64 / n1 as f64);
        let den = mu.norm_squared()
            + (1.0 / n0 as f64 + 1.0 / n1 as f64) * model.sigma0.trace();
        Some(num / den)
    } else {
        None
    };

    Ok(DeterministicEquivalentContext {
        q_bar,
        omega,
        r,
        a0,
        a1,
        q_tilde0,
        q_tilde1,
        kappa,
        eta,
        tau,
    })
}

fn spectral_radius_2x2(m: &Matrix2<f64>) -> f64 {
    let tr = m[(0, 0)] + m[(1, 1)];
    let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
    let disc = tr * tr - 4.0 * det;
    if disc >= 0.0 {
        let s = disc.sqrt();
        ((tr + s) / 2.0).abs().max(((tr - s) / 2.0).abs())
    } else {
        det.abs().sqrt() // complex pair with modulus sqrt(det)
    }
}

/// Per-alpha evaluator of the deterministic-equivalent moments. All matrix
/// work happens at construction; each alpha costs a handful of scalar
/// operations, so full grid sweeps are cheap.
#[derive(Debug, Clone)]
pub struct DeEvaluator {
    pi0: f64,
    pi1: f64,
    kind: DeKind,
}

#[derive(Debug, Clone)]
enum DeKind {
    /// General-form blocks for distinct class covariances.
    Distinct {
        kappa: f64,
        mu_sq: f64,
        mu_qbar_mu: f64,
        /// `(tr Sigma0/n0 - tr Sigma1/n1) / 2` and the `A_i` analogue.
        dm: f64,
        dq: f64,
        /// Per-class quadratic blocks: sigma_i^2(alpha) =
        /// (1-a)^2 k^2 v[i] + 2a(1-a) k w[i] + a^2 u[i].
        v: [f64; 2],
        w: [f64; 2],
        u: [f64; 2],
    },
    /// Closed-form blocks for one shared covariance.
    Common {
        eta: f64,
        tau: f64,
        mu_sq: f64,
        mu_inv_mu: f64,
        tr_sigma: f64,
        tr_sigma_sq: f64,
        mu_sigma_mu: f64,
        p: f64,
        n0: f64,
        n1: f64,
    },
}

impl DeEvaluator {
    /// Builds the evaluator; `assume_common_cov` selects the closed-form
    /// common-covariance path (the model must then actually have one) and
    /// skips the fixed-point machinery entirely.
    pub fn new(
        model: &GaussianClassModel,
        n0: usize,
        n1: usize,
        assume_common_cov: bool,
    ) -> Result<Self> {
        let p = model.p();
        let n = n0 + n1;
        if p + 2 >= n {
            return Err(Error::GrowthRegimeUnsupported { p, n });
        }
        if assume_common_cov {
            if !model.has_common_covariance() {
                return Err(Error::DistinctCovariances(
                    "the common-covariance deterministic equivalent",
                ));
            }
            let mu = model.mean_diff();
            let sigma = &model.sigma0;
            let inv_mu = SpdFactor::new(sigma, "common covariance")?.solve_vector(&mu)?;
            let nm2 = n as f64 - 2.0;
            let tau = 1.0 / (1.0 - p as f64 / nm2);
            let mu_sq = mu.norm_squared();
            let mu_inv_mu = inv_mu.dot(&mu);
            let tr_sigma = sigma.trace();
            let tr_sigma_sq = sigma.iter().map(|v| v * v).sum::<f64>();
            let mu_sigma_mu = (sigma * &mu).dot(&mu);
            let eta = tau * (mu_inv_mu + p as f64 / n0 as f64 + p as f64 / n1 as f64)
                / (mu_sq + (1.0 / n0 as f64 + 1.0 / n1 as f64) * tr_sigma);
            Ok(Self {
                pi0: model.pi0,
                pi1: model.pi1,
                kind: DeKind::Common {
                    eta,
                    tau,
                    mu_sq,
                    mu_inv_mu,
                    tr_sigma,
                    tr_sigma_sq,
                    mu_sigma_mu,
                    p: p as f64,
                    n0: n0 as f64,
                    n1: n1 as f64,
                },
            })
        } else {
            let fp = solve_fixed_point(&model.sigma0, &model.sigma1, n0, n1, 1e-12, 2000)?;
            let ctx = build_de_context(model, n0, n1, &fp)?;
            Ok(Self::from_context(model, n0, n1, &ctx))
        }
    }

    /// Distinct-covariance blocks from a prebuilt context.
    pub fn from_context(
        model: &GaussianClassModel,
        n0: usize,
        n1: usize,
        ctx: &DeterministicEquivalentContext,
    ) -> Self {
        let mu = model.mean_diff();
        let n0f = n0 as f64;
        let n1f = n1 as f64;
        let sig = [&model.sigma0, &model.sigma1];
        let a = [&ctx.a0, &ctx.a1];
        let qt = [&ctx.q_tilde0, &ctx.q_tilde1];
        let mut v = [0.0; 2];
        let mut w = [0.0; 2];
        let mut u = [0.0; 2];
        for i in 0..2 {
            v[i] = (sig[i] * &mu).dot(&mu)
                + trace_product(sig[0], sig[i]) / n0f
                + trace_product(sig[1], sig[i]) / n1f;
            w[i] = (a[i] * &mu).dot(&mu)
                + trace_product(sig[i], a[0]) / n0f
                + trace_product(sig[i], a[1]) / n1f;
            u[i] = (qt[i] * &mu).dot(&mu)
                + trace_product(sig[0], qt[i]) / n0f
                + trace_product(sig[1], qt[i]) / n1f;
        }
        let dm = 0.5 * (model.sigma0.trace() / n0f - model.sigma1.trace() / n1f);
        let dq = 0.5 * (ctx.a0.trace() / n0f - ctx.a1.trace() / n1f);
        Self {
            pi0: model.pi0,
            pi1: model.pi1,
            kind: DeKind::Distinct {
                kappa: ctx.kappa,
                mu_sq: mu.norm_squared(),
                mu_qbar_mu: (&ctx.q_bar * &mu).dot(&mu),
                dm,
                dq,
                v,
                w,
                u,
            },
        }
    }

    /// Deterministic-equivalent conditional moments at `alpha`.
    pub fn moments(&self, alpha: f64) -> MomentQuadruple {
        let a = alpha;
        match &self.kind {
            DeKind::Distinct {
                kappa,
                mu_sq,
                mu_qbar_mu,
                dm,
                dq,
                v,
                w,
                u,
            } => {
                let mean = |sign: f64| {
                    (1.0 - a) * kappa * (sign * 0.5 * mu_sq + dm)
                        + a * (sign * 0.5 * mu_qbar_mu + dq)
                };
                let var = |i: usize| {
                    (1.0 - a).powi(2) * kappa * kappa * v[i]
                        + 2.0 * a * (1.0 - a) * kappa * w[i]
                        + a * a * u[i]
                };
                MomentQuadruple {
                    m0: mean(-1.0),
                    m1: mean(1.0),
                    s0_sq: var(0),
                    s1_sq: var(1),
                    flavor: MomentFlavor::DeterministicEquivalent,
                }
            }
            DeKind::Common {
                eta,
                tau,
                mu_sq,
                mu_inv_mu,
                tr_sigma,
                tr_sigma_sq,
                mu_sigma_mu,
                p,
                n0,
                n1,
            } => {
                let mean = |sign: f64| {
                    (1.0 - a) * eta * (sign * 0.5 * mu_sq + 0.5 * (1.0 / n0 - 1.0 / n1) * tr_sigma)
                        + a * 0.5 * tau * (sign * mu_inv_mu + p / n0 - p / n1)
                };
                let s_sq = (1.0 - a).powi(2)
                    * eta
                    * eta
                    * (mu_sigma_mu + (1.0 / n0 + 1.0 / n1) * tr_sigma_sq)
                    + a * a * tau.powi(3) * (mu_inv_mu + p / n0 + p / n1)
                    + 2.0 * a * (1.0 - a) * tau * eta * (mu_sq + (1.0 / n0 + 1.0 / n1) * tr_sigma);
                MomentQuadruple {
                    m0: mean(-1.0),
                    m1: mean(1.0),
                    s0_sq: s_sq,
                    s1_sq: s_sq,
                    flavor: MomentFlavor::DeterministicEquivalent,
                }
            }
        }
    }

    /// Deterministic-equivalent misclassification probability at `alpha`.
    pub fn epsilon(&self, alpha: f64) -> Result<f64> {
        error_from_moments(&self.moments(alpha), self.pi0, self.pi1)
    }
}

/// One-shot deterministic equivalent: moments and misclassification
/// probability of alpha-parameterized LDA at a single `alpha`. Sweeps should
/// construct a [`DeEvaluator`] once instead.
pub fn de_misclassification(
    model: &GaussianClassModel,
    n0: usize,
    n1: usize,
    alpha: f64,
    assume_common_cov: bool,
) -> Result<(MomentQuadruple, f64)> {
    let eval = DeEvaluator::new(model, n0, n1, assume_common_cov)?;
    let moments = eval.moments(alpha);
    let eps = eval.epsilon(alpha)?;
    Ok((moments, eps))
}

/// The scalar estimates underlying a G-estimator evaluation.
#[derive(Debug, Clone, Copy)]
pub struct GEstimatorContext {
    /// `rho = mu_hat^T pooled^-1 mu_hat / mu_hat^T mu_hat`.
    pub rho: f64,
    /// `lambda_i = t_i / (1 - t_i)` with
    /// `t_i = tr(Sigma_hat_i pooled^-1)/(n-2)`.
    pub lambda0: f64,
    pub lambda1: f64,
    /// `tau_hat = 1 / (1 - p/(n-2))`.
    pub tau_hat: f64,
}

/// Per-alpha evaluator of the G-estimated moments, built from sample
/// statistics alone. As with [`DeEvaluator`], construction does all matrix
/// work; each alpha is then O(1).
#[derive(Debug, Clone)]
pub struct GeEvaluator {
    context: GEstimatorContext,
    pi0_hat: f64,
    pi1_hat: f64,
    assume_common_cov: bool,
    n0: f64,
    n1: f64,
    nm2: f64,
    p: f64,
    mu_sq: f64,
    mu_inv_mu: f64,
    /// Common path: `mu_hat^T pooled mu_hat` and `tr(pooled)`.
    mu_pooled_mu: f64,
    tr_pooled: f64,
    /// Distinct path, per class: `tr(Sigma_hat_i)`,
    /// `mu_hat^T Sigma_hat_i mu_hat`, `mu_hat^T Sigma_hat_i u`,
    /// `u^T Sigma_hat_i u` with `u = pooled^-1 mu_hat`.
    tr_i: [f64; 2],
    g1: [f64; 2],
    g2: [f64; 2],
    g3: [f64; 2],
}

impl GeEvaluator {
    pub fn new(stats: &SampleStatistics, assume_common_cov: bool) -> Result<Self> {
        let p = stats.p();
        let n = stats.n();
        if p + 2 >= n {
            return Err(Error::GrowthRegimeUnsupported { p, n });
        }
        let nm2 = n as f64 - 2.0;
        let factor = SpdFactor::new(&stats.sigma_pooled, "pooled sample covariance")
            .map_err(|_| Error::PooledCovarianceSingular)?;
        let mu_hat = stats.mean_diff();
        let mu_sq = mu_hat.norm_squared();
        if mu_sq == 0.0 {
            return Err(Error::ZeroMeanDifference);
        }
        let u = factor.solve_vector(&mu_hat)?;
        let mu_inv_mu = u.dot(&mu_hat);
        let rho = mu_inv_mu / mu_sq;
        let tau_hat = 1.0 / (1.0 - p as f64 / nm2);

        let mut lambda = [0.0; 2];
        let mut tr_i = [0.0; 2];
        let mut g1 = [0.0; 2];
        let mut g2 = [0.0; 2];
        let mut g3 = [0.0; 2];
        for (i, sigma_i) in [&stats.sigma0_hat, &stats.sigma1_hat].into_iter().enumerate() {
            let t = factor.solve_matrix(sigma_i)?.trace() / nm2;
            if !(t < 1.0) {
                return Err(Error::TraceCorrectionUndefined {
                    class: i as u8,
                    ratio: t,
                });
            }
            lambda[i] = t / (1.0 - t);
            tr_i[i] = sigma_i.trace();
            let si_mu = sigma_i * &mu_hat;
            g1[i] = si_mu.dot(&mu_hat);
            g2[i] = si_mu.dot(&u);
            g3[i] = (sigma_i * &u).dot(&u);
        }

        Ok(Self {
            context: GEstimatorContext {
                rho,
                lambda0: lambda[0],
                lambda1: lambda[1],
                tau_hat,
            },
            pi0_hat: stats.pi0_hat,
            pi1_hat: stats.pi1_hat,
            assume_common_cov,
            n0: stats.n0 as f64,
            n1: stats.n1 as f64,
            nm2,
            p: p as f64,
            mu_sq,
            mu_inv_mu,
            mu_pooled_mu: (&stats.sigma_pooled * &mu_hat).dot(&mu_hat),
            tr_pooled: stats.sigma_pooled.trace(),
            tr_i,
            g1,
            g2,
            g3,
        })
    }

    pub fn context(&self) -> &GEstimatorContext {
        &self.context
    }

    /// G-estimated conditional moments at `alpha`.
    pub fn moments(&self, alpha: f64) -> MomentQuadruple {
        let a = alpha;
        let rho = self.context.rho;
        let (m0, m1, s0_sq, s1_sq);
        if self.assume_common_cov {
            let tau = self.context.tau_hat;
            let mean = |sign: f64, n_i: f64| {
                sign * (0.5 * self.mu_inv_mu + rho * (a - 1.0) * self.tr_pooled / n_i
                    - a * tau * self.p / n_i)
            };
            m0 = mean(-1.0, self.n0);
            m1 = mean(1.0, self.n1);
            let s_sq = rho * rho * (1.0 - a).powi(2) * self.mu_pooled_mu
                + a * a * tau * tau * self.mu_inv_mu
                + 2.0 * a * rho * (1.0 - a) * tau * self.mu_sq;
            s0_sq = s_sq;
            s1_sq = s_sq;
        } else {
            let lambda = [self.context.lambda0, self.context.lambda1];
            let n_i = [self.n0, self.n1];
            let mut m = [0.0; 2];
            let mut s = [0.0; 2];
            for i in 0..2 {
                let sign = if i == 0 { -1.0 } else { 1.0 };
                m[i] = sign
                    * ((1.0 - a) * rho * (0.5 * self.mu_sq - self.tr_i[i] / n_i[i])
                        + a * (0.5 * self.mu_inv_mu - self.nm2 / n_i[i] * lambda[i]));
                s[i] = (1.0 - a).powi(2) * rho * rho * self.g1[i]
                    + 2.0 * a * (1.0 - a) * rho * (1.0 + lambda[i]) * self.g2[i]
                    + a * a * (1.0 + lambda[i]).powi(2) * self.g3[i];
            }
            m0 = m[0];
            m1 = m[1];
            s0_sq = s[0];
            s1_sq = s[1];
        }
        MomentQuadruple {
            m0,
            m1,
            s0_sq,
            s1_sq,
            flavor: MomentFlavor::GEstimate,
        }
    }

    /// G-estimated misclassification probability at `alpha`, weighted by the
    /// empirical priors.
    pub fn epsilon(&self, alpha: f64) -> Result<f64> {
        error_from_moments(&self.moments(alpha), self.pi0_hat, self.pi1_hat)
    }
}

/// One-shot G-estimate of the alpha-parameterized LDA moments and error.
/// Sweeps should construct a [`GeEvaluator`] once instead.
pub fn ge_misclassification(
    stats: &SampleStatistics,
    alpha: f64,
    assume_common_cov: bool,
) -> Result<(MomentQuadruple, f64)> {
    let eval = GeEvaluator::new(stats, assume_common_cov)?;
    let moments = eval.moments(alpha);
    let eps = eval.epsilon(alpha)?;
    Ok((moments, eps))
}

/// Tunes `alpha` by minimizing the G-estimated error over `grid` — no model
/// knowledge, no validation data. Ties follow the crate rule (closest to 1,
/// then smaller). Returns the winner and the full curve.
pub fn tune_alpha_via_ge(
    stats: &SampleStatistics,
    grid: &[f64],
    assume_common_cov: bool,
) -> Result<(f64, Vec<(f64, f64)>)> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter("alpha grid is empty".to_string()));
    }
    let eval = GeEvaluator::new(stats, assume_common_cov)?;
    let mut curve = Vec::with_capacity(grid.len());
    for &alpha in grid {
        let eps = eval.epsilon(alpha).map_err(|e| Error::ObjectiveEvaluation {
            alpha,
            source: Box::new(e),
        })?;
        curve.push((alpha, eps));
    }
    Ok((select_alpha_star(&curve), curve))
}
