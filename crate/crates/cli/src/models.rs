//! The synthetic two-class Gaussian families used by the experiment
//! scenarios, parameterized only by the dimension `p`.
//!
//! `common` and `distinct` share the mean pair
//! `mu0 = p^(-1/4) [1 ... 1 (ceil(sqrt(p)) ones), 0 ..., 2, 2]`, `mu1 = 0`,
//! which concentrates class separation on a sqrt(p)-sized block plus two
//! strong coordinates; the covariance is a rank-one spike plus identity,
//! `(10/p) 1 1^T + 0.1 I`. The `distinct` family replaces the class-0
//! covariance with the Toeplitz matrix `0.9^|i-j|`. Priors are 1/2 each.

use alphatune::GaussianClassModel;
use nalgebra::{DMatrix, DVector};

use crate::config::Family;
use crate::error::{CliError, Result};

/// Builds the model of `family` at dimension `p`.
pub fn build_model(family: Family, p: usize) -> Result<GaussianClassModel> {
    let model = match family {
        Family::Common => {
            GaussianClassModel::with_common_covariance(block_mean(p)?, DVector::zeros(p), spiked_covariance(p), 0.5, 0.5)
        }
        Family::Distinct => GaussianClassModel::new(
            block_mean(p)?,
            DVector::zeros(p),
            toeplitz_covariance(p),
            spiked_covariance(p),
            0.5,
            0.5,
        ),
        Family::Isotropic => GaussianClassModel::with_common_covariance(
            DVector::zeros(p),
            DVector::from_element(p, 2.0 / (p as f64).sqrt()),
            DMatrix::identity(p, p),
            0.5,
            0.5,
        ),
    };
    model.map_err(CliError::from)
}

/// `p^(-1/4) [1_ceil(sqrt(p)) ; 0 ; 2 ; 2]`.
fn block_mean(p: usize) -> Result<DVector<f64>> {
    let ones = (p as f64).sqrt().ceil() as usize;
    if ones + 2 > p {
        return Err(CliError::Config(format!(
            "the synthetic mean layout needs p >= 4, got p = {p}"
        )));
    }
    let scale = 1.0 / (p as f64).powf(0.25);
    Ok(DVector::from_fn(p, |i, _| {
        if i < ones {
            scale
        } else if i >= p - 2 {
            2.0 * scale
        } else {
            0.0
        }
    }))
}

/// `(10/p) 1 1^T + 0.1 I`.
fn spiked_covariance(p: usize) -> DMatrix<f64> {
    let spike = 10.0 / p as f64;
    DMatrix::from_fn(p, p, |i, j| spike + if i == j { 0.1 } else { 0.0 })
}

/// `[Sigma]_ij = 0.9^|i-j|`.
fn toeplitz_covariance(p: usize) -> DMatrix<f64> {
    DMatrix::from_fn(p, p, |i, j| 0.9_f64.powi((i as i32 - j as i32).abs()))
}
