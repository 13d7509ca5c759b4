//! Linear soft-margin SVM trained by dual coordinate descent.
//!
//! Objective (primal): `(1/2)(||w||^2 + w0^2) + C * sum_i hinge_i` with
//! `hinge_i = max(0, 1 - y_i (w^T x_i + w0))` and `y_i in {-1, +1}`. The bias
//! enters through feature augmentation, the standard choice for this solver
//! family; the box constraint on each dual variable is the per-point penalty
//! `C`.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::model::LabeledDataset;
use crate::sampling::substream;

use super::LinearDiscriminant;

/// Fixed seed for coordinate-order shuffling; training is deterministic for
/// identical inputs.
const SHUFFLE_SEED: u64 = 0x5eed_5eed;

/// Fits the soft-margin linear SVM. `penalty` is the per-point box constraint
/// `C > 0`; optimization stops when the largest projected-gradient KKT
/// violation over a full pass drops to `tol`, and errors with the current
/// duality gap if `max_iter` passes are exhausted first.
pub fn fit_linear_svm(
    data: &LabeledDataset,
    penalty: f64,
    tol: f64,
    max_iter: usize,
) -> Result<LinearDiscriminant> {
    if !(penalty > 0.0) || !penalty.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "SVM penalty must be positive and finite, got {penalty}"
        )));
    }
    if max_iter == 0 || !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "SVM fit needs max_iter >= 1 and tol > 0, got ({max_iter}, {tol})"
        )));
    }
    let p = data.p();
    let n = data.n();
    // Augmented points z_i = [x_i; 1] with labels y_i = -1 (class 0), +1.
    let mut points: Vec<DVector<f64>> = Vec::with_capacity(n);
    let mut labels: Vec<f64> = Vec::with_capacity(n);
    for (sign, x) in [(-1.0, data.x0()), (1.0, data.x1())] {
        for j in 0..x.ncols() {
            let mut z = DVector::zeros(p + 1);
            z.rows_mut(0, p).copy_from(&x.column(j));
            z[p] = 1.0;
            points.push(z);
            labels.push(sign);
        }
    }
    let sq_norms: Vec<f64> = points.iter().map(|z| z.norm_squared()).collect();

    let mut alpha = vec![0.0_f64; n];
    let mut w_aug: DVector<f64> = DVector::zeros(p + 1);
    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = substream(SHUFFLE_SEED, 0);

    for _pass in 0..max_iter {
        shuffle(&mut order, &mut rng);
        let mut worst_violation = 0.0_f64;
        for &i in &order {
            // gradient of the dual objective in coordinate i
            let g = labels[i] * w_aug.dot(&points[i]) - 1.0;
            // projected gradient respecting the box [0, C]
            let pg = if alpha[i] <= 0.0 {
                g.min(0.0)
            } else if alpha[i] >= penalty {
                g.max(0.0)
            } else {
                g
            };
            worst_violation = worst_violation.max(pg.abs());
            if pg != 0.0 {
                let old = alpha[i];
                let new = (old - g / sq_norms[i]).clamp(0.0, penalty);
                if new != old {
                    alpha[i] = new;
                    w_aug.axpy((new - old) * labels[i], &points[i], 1.0);
                }
            }
        }
        if worst_violation <= tol {
            let w = w_aug.rows(0, p).clone_owned();
            return LinearDiscriminant::new(w, w_aug[p]);
        }
    }
    Err(Error::SvmIterationCap {
        iterations: max_iter,
        duality_gap: duality_gap(&points, &labels, &alpha, &w_aug, penalty),
    })
}

/// `primal(w) - dual(alpha)`; vanishes at the optimum, so it is the natural
/// progress diagnostic when the solver is cut off.
fn duality_gap(
    points: &[DVector<f64>],
    labels: &[f64],
    alpha: &[f64],
    w_aug: &DVector<f64>,
    penalty: f64,
) -> f64 {
    let reg = 0.5 * w_aug.norm_squared();
    let hinge: f64 = points
        .iter()
        .zip(labels)
        .map(|(z, &y)| (1.0 - y * w_aug.dot(z)).max(0.0))
        .sum();
    let primal = reg + penalty * hinge;
    let dual = alpha.iter().sum::<f64>() - reg;
    primal - dual
}

/// Fisher–Yates with our own generator (`rand::seq` would work too, but the
/// loop is three lines and keeps the dependency surface of this module to
/// the substream helper).
fn shuffle(order: &mut [usize], rng: &mut rand_chacha::ChaCha12Rng) {
    use rand::Rng;
    for i in (1..order.len()).rev() {
        let j = rng.random_range(0..=i);
        order.swap(i, j);
    }
}
