//! Symmetric positive-definite linear algebra helpers.
//!
//! Everything downstream that inverts a covariance goes through [`SpdFactor`]
//! so that failures name the matrix that broke and near-singular matrices are
//! rejected by an explicit pivot threshold instead of silently producing junk.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Relative pivot threshold: a Cholesky pivot at or below
/// `PIVOT_RTOL * max(diag)` is treated as singular.
pub const PIVOT_RTOL: f64 = 1e-12;

/// Absolute-relative tolerance used when checking matrix symmetry.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// A Cholesky factorization of a symmetric positive-definite matrix, tagged
/// with the role the matrix plays (e.g. `"pooled sample covariance"`) so that
/// error messages stay meaningful far from the call site.
pub struct SpdFactor {
    chol: nalgebra::Cholesky<f64, nalgebra::Dyn>,
    dim: usize,
}

impl SpdFactor {
    /// Factorizes `a`, validating squareness, symmetry, and positive
    /// definiteness (smallest pivot > `PIVOT_RTOL * max(diag)`).
    pub fn new(a: &DMatrix<f64>, role: &str) -> Result<Self> {
        if a.nrows() != a.ncols() {
            return Err(Error::DimensionMismatch {
                context: "SPD factorization requires a square matrix",
                expected: a.nrows(),
                found: a.ncols(),
            });
        }
        if !is_symmetric(a, SYMMETRY_TOL) {
            return Err(Error::InvalidParameter(format!(
                "{role} is not symmetric to within {SYMMETRY_TOL:e}"
            )));
        }
        let max_diag = a.diagonal().iter().fold(0.0_f64, |m, &d| m.max(d.abs()));
        let chol = nalgebra::Cholesky::new(a.clone()).ok_or_else(|| Error::NotPositiveDefinite {
            role: role.to_string(),
        })?;
        // nalgebra accepts any factorization whose pivots stay positive; we
        // additionally reject pivots that are positive but negligible.
        let min_pivot = chol
            .l_dirty()
            .diagonal()
            .iter()
            .fold(f64::INFINITY, |m, &l| m.min(l * l));
        if !(min_pivot > PIVOT_RTOL * max_diag) {
            return Err(Error::NotPositiveDefinite {
                role: role.to_string(),
            });
        }
        Ok(Self {
            chol,
            dim: a.nrows(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Solves `A x = b` for a single right-hand side.
    pub fn solve_vector(&self, b: &DVector<f64>) -> Result<DVector<f64>> {
        if b.len() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "SPD solve right-hand side",
                expected: self.dim,
                found: b.len(),
            });
        }
        Ok(self.chol.solve(b))
    }

    /// Solves `A X = B` for a matrix right-hand side.
    pub fn solve_matrix(&self, b: &DMatrix<f64>) -> Result<DMatrix<f64>> {
        if b.nrows() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "SPD solve right-hand side rows",
                expected: self.dim,
                found: b.nrows(),
            });
        }
        Ok(self.chol.solve(b))
    }

    /// The explicit inverse. Prefer the solve methods when a product with the
    /// inverse is all that is needed.
    pub fn inverse(&self) -> DMatrix<f64> {
        self.chol.inverse()
    }

    /// Lower-triangular factor `L` with `A = L L^T` (used for Gaussian
    /// sampling).
    pub fn lower(&self) -> DMatrix<f64> {
        self.chol.l()
    }
}

/// One-shot `A x = b` for symmetric positive-definite `A`; `role` names the
/// matrix in any error.
pub fn spd_solve(a: &DMatrix<f64>, b: &DVector<f64>, role: &str) -> Result<DVector<f64>> {
    SpdFactor::new(a, role)?.solve_vector(b)
}

/// `max_ij |a_ij - a_ji| <= tol * max(1, max_ij |a_ij|)`.
pub fn is_symmetric(a: &DMatrix<f64>, tol: f64) -> bool {
    if a.nrows() != a.ncols() {
        return false;
    }
    let scale = a.iter().fold(1.0_f64, |m, &v| m.max(v.abs()));
    for i in 0..a.nrows() {
        for j in (i + 1)..a.ncols() {
            if (a[(i, j)] - a[(j, i)]).abs() > tol * scale {
                return false;
            }
        }
    }
    true
}

/// Replaces `a` by its symmetric part `(A + A^T)/2`. Covariance assembly uses
/// this to keep matrix products from drifting off symmetry by rounding.
pub fn symmetrize(a: &mut DMatrix<f64>) {
    for i in 0..a.nrows() {
        for j in (i + 1)..a.ncols() {
            let v = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = v;
            a[(j, i)] = v;
        }
    }
}

/// Maximum absolute entrywise difference, relative to the larger of the two
/// matrices' scales (used for "are these covariances equal" checks).
pub fn relative_max_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    debug_assert_eq!(a.shape(), b.shape());
    let scale = a
        .iter()
        .chain(b.iter())
        .fold(1.0_f64, |m, &v| m.max(v.abs()));
    let mut max = 0.0_f64;
    for (x, y) in a.iter().zip(b.iter()) {
        max = max.max((x - y).abs());
    }
    max / scale
}

/// `tr(A B)` without forming the product (both matrices square, same size).
pub fn trace_product(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    debug_assert_eq!(a.shape(), b.shape());
    let n = a.nrows();
    let mut t = 0.0;
    for i in 0..n {
        for j in 0..n {
            t += a[(i, j)] * b[(j, i)];
        }
    }
    t
}
