//! Logistic regression via iteratively reweighted least squares.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::model::LabeledDataset;

use super::LinearDiscriminant;

/// Tikhonov jitter added to the IRLS Hessian so near-separable data cannot
/// make the Newton system singular.
const HESSIAN_JITTER: f64 = 1e-8;

/// Fits `P(y = 1 | x) = sigmoid(w^T x + w0)` by Newton / IRLS on the
/// log-likelihood. Converges when the max-norm of the Newton step drops to
/// `tol`; exceeding `max_iter` returns
/// [`Error::LogisticNonConvergence`] carrying the last iterate (separable
/// data drives the weights to infinity, which presents as non-convergence).
pub fn fit_logistic(
    data: &LabeledDataset,
    max_iter: usize,
    tol: f64,
) -> Result<LinearDiscriminant> {
    if max_iter == 0 || !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "logistic fit needs max_iter >= 1 and tol > 0, got ({max_iter}, {tol})"
        )));
    }
    let p = data.p();
    let n = data.n();
    // Augmented design: column j is [x_j; 1], label y_j in {0, 1}.
    let mut design = DMatrix::zeros(p + 1, n);
    let mut y = DVector::zeros(n);
    for (offset, label) in [(0, 0u8), (data.n0(), 1u8)] {
        let x = data.class(label);
        for j in 0..x.ncols() {
            design
                .view_mut((0, offset + j), (p, 1))
                .copy_from(&x.column(j));
            design[(p, offset + j)] = 1.0;
            y[offset + j] = f64::from(label);
        }
    }

    let mut theta = DVector::zeros(p + 1);
    let mut step_norm = f64::INFINITY;
    for iter in 0..max_iter {
        // probabilities and weights at the current iterate
        let eta = design.transpose() * &theta;
        let prob = eta.map(sigmoid);
        let weights = prob.map(|q| q * (1.0 - q));
        // H = X W X^T + jitter*I, g = X (y - p)
        let mut weighted = design.clone();
        for (j, mut col) in weighted.column_iter_mut().enumerate() {
            col *= weights[j];
        }
        let mut hessian = &weighted * design.transpose();
        for i in 0..=p {
            hessian[(i, i)] += HESSIAN_JITTER;
        }
        let gradient = &design * (&y - &prob);
        let step = hessian
            .cholesky()
            .ok_or_else(|| nonconvergence(&theta, p, iter, step_norm))?
            .solve(&gradient);
        theta += &step;
        if theta.iter().any(|v| !v.is_finite()) {
            return Err(nonconvergence(&theta.map(zero_non_finite), p, iter, step_norm));
        }
        step_norm = step.amax();
        if step_norm <= tol {
            let w = theta.rows(0, p).clone_owned();
            return LinearDiscriminant::new(w, theta[p]);
        }
    }
    Err(nonconvergence(&theta, p, max_iter, step_norm))
}

fn nonconvergence(theta: &DVector<f64>, p: usize, iterations: usize, step_norm: f64) -> Error {
    let last = LinearDiscriminant {
        w: theta.rows(0, p).clone_owned(),
        w0: theta[p],
    };
    Error::LogisticNonConvergence {
        iterations,
        step_norm,
        last: Box::new(last),
    }
}

fn zero_non_finite(v: f64) -> f64 {
    if v.is_finite() {
        v
    } else {
        0.0
    }
}

fn sigmoid(t: f64) -> f64 {
    if t >= 0.0 {
        1.0 / (1.0 + (-t).exp())
    } else {
        let e = t.exp();
        e / (1.0 + e)
    }
}
