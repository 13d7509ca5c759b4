//! Population model, labeled data, and first/second-moment sample statistics
//! for the two-class Gaussian setting.
//!
//! Conventions used throughout the crate:
//! * class labels are `0` and `1`;
//! * the mean-difference direction is `mu = mu1 - mu0`;
//! * the midpoint `c = (mu0 + mu1) / 2` centers every discriminant;
//! * data matrices are `p x n_i` with one sample per column.

use std::io::{BufRead, BufReader, Write as _};
use std::path::Path;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::linalg::{self, SpdFactor};

/// Maximum relative entrywise difference under which two class covariances
/// are treated as equal.
pub const COMMON_COV_TOL: f64 = 1e-10;

/// A two-class Gaussian mixture: class `i` is `N(mu_i, sigma_i)` with prior
/// `pi_i`. Validated on construction: matching dimensions, symmetric positive
/// definite covariances, priors in `(0, 1)` summing to one.
#[derive(Debug, Clone)]
pub struct GaussianClassModel {
    pub mu0: DVector<f64>,
    pub mu1: DVector<f64>,
    pub sigma0: DMatrix<f64>,
    pub sigma1: DMatrix<f64>,
    pub pi0: f64,
    pub pi1: f64,
}

impl GaussianClassModel {
    pub fn new(
        mu0: DVector<f64>,
        mu1: DVector<f64>,
        sigma0: DMatrix<f64>,
        sigma1: DMatrix<f64>,
        pi0: f64,
        pi1: f64,
    ) -> Result<Self> {
        let p = mu0.len();
        for len in [
            mu1.len(),
            sigma0.nrows(),
            sigma0.ncols(),
            sigma1.nrows(),
            sigma1.ncols(),
        ] {
            if len != p {
                return Err(Error::DimensionMismatch {
                    context: "model dimensions must agree with mu0",
                    expected: p,
                    found: len,
                });
            }
        }
        validate_priors(pi0, pi1)?;
        // Positive definiteness is part of the type's contract; validate now
        // so samplers and error formulas can rely on it.
        SpdFactor::new(&sigma0, "class-0 covariance")?;
        SpdFactor::new(&sigma1, "class-1 covariance")?;
        Ok(Self {
            mu0,
            mu1,
            sigma0,
            sigma1,
            pi0,
            pi1,
        })
    }

    /// A model with one covariance shared by both classes.
    pub fn with_common_covariance(
        mu0: DVector<f64>,
        mu1: DVector<f64>,
        sigma: DMatrix<f64>,
        pi0: f64,
        pi1: f64,
    ) -> Result<Self> {
        Self::new(mu0, mu1, sigma.clone(), sigma, pi0, pi1)
    }

    pub fn p(&self) -> usize {
        self.mu0.len()
    }

    /// `mu = mu1 - mu0`.
    pub fn mean_diff(&self) -> DVector<f64> {
        &self.mu1 - &self.mu0
    }

    /// Midpoint `(mu0 + mu1) / 2`.
    pub fn center(&self) -> DVector<f64> {
        (&self.mu0 + &self.mu1) * 0.5
    }

    /// Whether the two class covariances agree to within [`COMMON_COV_TOL`].
    pub fn has_common_covariance(&self) -> bool {
        linalg::relative_max_diff(&self.sigma0, &self.sigma1) <= COMMON_COV_TOL
    }
}

fn validate_priors(pi0: f64, pi1: f64) -> Result<()> {
    if !(pi0 > 0.0 && pi0 < 1.0 && pi1 > 0.0 && pi1 < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "priors must lie strictly inside (0, 1), got ({pi0}, {pi1})"
        )));
    }
    if (pi0 + pi1 - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidParameter(format!(
            "priors must sum to 1, got {pi0} + {pi1} = {}",
            pi0 + pi1
        )));
    }
    Ok(())
}

/// Labeled training data: `x_i` holds the class-`i` samples as columns.
/// Both classes must be present with at least two samples each (sample
/// covariances need `n_i - 1 >= 1`).
#[derive(Debug, Clone)]
pub struct LabeledDataset {
    x0: DMatrix<f64>,
    x1: DMatrix<f64>,
}

impl LabeledDataset {
    pub fn new(x0: DMatrix<f64>, x1: DMatrix<f64>) -> Result<Self> {
        if x0.nrows() != x1.nrows() {
            return Err(Error::DimensionMismatch {
                context: "both classes must share the feature dimension",
                expected: x0.nrows(),
                found: x1.nrows(),
            });
        }
        if x0.ncols() < 2 || x1.ncols() < 2 {
            return Err(Error::InvalidParameter(format!(
                "each class needs at least 2 samples, got n0 = {}, n1 = {}",
                x0.ncols(),
                x1.ncols()
            )));
        }
        Ok(Self { x0, x1 })
    }

    pub fn x0(&self) -> &DMatrix<f64> {
        &self.x0
    }

    pub fn x1(&self) -> &DMatrix<f64> {
        &self.x1
    }

    pub fn class(&self, label: u8) -> &DMatrix<f64> {
        if label == 0 {
            &self.x0
        } else {
            &self.x1
        }
    }

    pub fn p(&self) -> usize {
        self.x0.nrows()
    }

    pub fn n0(&self) -> usize {
        self.x0.ncols()
    }

    pub fn n1(&self) -> usize {
        self.x1.ncols()
    }

    pub fn n(&self) -> usize {
        self.n0() + self.n1()
    }

    /// Loads `label,feature_1,...,feature_p` rows. The label column must be
    /// `0` or `1`; a header row is skipped when its first cell is not
    /// numeric. Rows may appear in any label order.
    pub fn from_csv(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::from_csv_reader(BufReader::new(file))
    }

    /// CSV parsing core, usable with any reader (tests feed in-memory data).
    pub fn from_csv_reader<R: BufRead>(reader: R) -> Result<Self> {
        let mut cols0: Vec<DVector<f64>> = Vec::new();
        let mut cols1: Vec<DVector<f64>> = Vec::new();
        let mut p: Option<usize> = None;
        let mut seen_row = false;

        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let first_row = !seen_row;
            seen_row = true;
            let mut fields = trimmed.split(',').map(str::trim);
            let first = fields.next().unwrap_or("");
            let label: i64 = match first.parse() {
                Ok(v) => v,
                Err(_) => {
                    // Non-numeric first cell: a header is only allowed as the
                    // first non-empty row.
                    if first_row {
                        continue;
                    }
                    return Err(Error::CsvFormat {
                        line: lineno,
                        message: format!("label column is not an integer: {first:?}"),
                    });
                }
            };
            if label != 0 && label != 1 {
                return Err(Error::CsvFormat {
                    line: lineno,
                    message: format!("label must be 0 or 1, got {label}"),
                });
            }
            let mut features = Vec::new();
            for field in fields {
                let value: f64 = field.parse().map_err(|_| Error::CsvFormat {
                    line: lineno,
                    message: format!("feature value is not numeric: {field:?}"),
                })?;
                features.push(value);
            }
            if features.is_empty() {
                return Err(Error::CsvFormat {
                    line: lineno,
                    message: "row has a label but no features".to_string(),
                });
            }
            match p {
                None => p = Some(features.len()),
                Some(expect) if features.len() != expect => {
                    return Err(Error::CsvFormat {
                        line: lineno,
                        message: format!(
                            "row has {} features, expected {expect}",
                            features.len()
                        ),
                    });
                }
                _ => {}
            }
            let col = DVector::from_vec(features);
            if label == 0 {
                cols0.push(col);
            } else {
                cols1.push(col);
            }
        }

        let p = p.ok_or_else(|| Error::CsvFormat {
            line: 0,
            message: "no data rows found".to_string(),
        })?;
        if cols0.len() < 2 || cols1.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "dataset must contain both labels with at least 2 samples each \
                 (got {} of label 0, {} of label 1)",
                cols0.len(),
                cols1.len()
            )));
        }
        let x0 = DMatrix::from_columns(&cols0);
        let x1 = DMatrix::from_columns(&cols1);
        debug_assert_eq!(x0.nrows(), p);
        Self::new(x0, x1)
    }

    /// Writes the dataset back out in the same CSV format (class-0 rows
    /// first). Round-trips with [`LabeledDataset::from_csv`].
    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
        for (label, x) in [(0, &self.x0), (1, &self.x1)] {
            for j in 0..x.ncols() {
                write!(out, "{label}")?;
                for i in 0..x.nrows() {
                    write!(out, ",{}", x[(i, j)])?;
                }
                writeln!(out)?;
            }
        }
        out.flush()?;
        Ok(())
    }
}

/// First and second sample moments of a labeled dataset: per-class means and
/// unbiased covariances, the pooled covariance, and empirical priors.
#[derive(Debug, Clone)]
pub struct SampleStatistics {
    pub mu0_hat: DVector<f64>,
    pub mu1_hat: DVector<f64>,
    pub sigma0_hat: DMatrix<f64>,
    pub sigma1_hat: DMatrix<f64>,
    /// `((n0-1) sigma0_hat + (n1-1) sigma1_hat) / (n - 2)`.
    pub sigma_pooled: DMatrix<f64>,
    pub n0: usize,
    pub n1: usize,
    pub pi0_hat: f64,
    pub pi1_hat: f64,
}

impl SampleStatistics {
    /// Validated construction from explicit moments; `sigma_pooled` is
    /// recomputed from the class covariances so the pooling identity holds by
    /// construction.
    pub fn new(
        mu0_hat: DVector<f64>,
        mu1_hat: DVector<f64>,
        sigma0_hat: DMatrix<f64>,
        sigma1_hat: DMatrix<f64>,
        n0: usize,
        n1: usize,
    ) -> Result<Self> {
        let p = mu0_hat.len();
        if mu1_hat.len() != p || sigma0_hat.nrows() != p || sigma1_hat.nrows() != p {
            return Err(Error::DimensionMismatch {
                context: "sample statistics dimensions must agree",
                expected: p,
                found: mu1_hat.len().max(sigma0_hat.nrows()).max(sigma1_hat.nrows()),
            });
        }
        if n0 < 2 || n1 < 2 {
            return Err(Error::InvalidParameter(format!(
                "sample statistics need n_i >= 2, got n0 = {n0}, n1 = {n1}"
            )));
        }
        for (s, name) in [(&sigma0_hat, "sigma0_hat"), (&sigma1_hat, "sigma1_hat")] {
            if s.nrows() != s.ncols() || !linalg::is_symmetric(s, linalg::SYMMETRY_TOL) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be square and symmetric"
                )));
            }
        }
        let n = n0 + n1;
        let sigma_pooled = (&sigma0_hat * (n0 as f64 - 1.0) + &sigma1_hat * (n1 as f64 - 1.0))
            / (n as f64 - 2.0);
        Ok(Self {
            mu0_hat,
            mu1_hat,
            sigma0_hat,
            sigma1_hat,
            sigma_pooled,
            n0,
            n1,
            pi0_hat: n0 as f64 / n as f64,
            pi1_hat: n1 as f64 / n as f64,
        })
    }

    /// Statistics with the sample moments replaced by the population values:
    /// `mu_hat_i = mu_i`, `sigma_hat_i = sigma_i`. Useful for studying the
    /// known-statistics limit of estimators that consume sample moments.
    pub fn idealized(model: &GaussianClassModel, n0: usize, n1: usize) -> Result<Self> {
        Self::new(
            model.mu0.clone(),
            model.mu1.clone(),
            model.sigma0.clone(),
            model.sigma1.clone(),
            n0,
            n1,
        )
    }

    pub fn p(&self) -> usize {
        self.mu0_hat.len()
    }

    pub fn n(&self) -> usize {
        self.n0 + self.n1
    }

    /// `mu_hat = mu1_hat - mu0_hat`.
    pub fn mean_diff(&self) -> DVector<f64> {
        &self.mu1_hat - &self.mu0_hat
    }

    /// Midpoint `(mu0_hat + mu1_hat) / 2`.
    pub fn center(&self) -> DVector<f64> {
        (&self.mu0_hat + &self.mu1_hat) * 0.5
    }
}

/// Per-class means, unbiased covariances, pooled covariance, and empirical
/// priors of `data`.
pub fn compute_sample_statistics(data: &LabeledDataset) -> SampleStatistics {
    let (mu0, s0) = class_moments(data.x0());
    let (mu1, s1) = class_moments(data.x1());
    SampleStatistics::new(mu0, mu1, s0, s1, data.n0(), data.n1())
        .expect("moments of a valid dataset are valid statistics")
}

fn class_moments(x: &DMatrix<f64>) -> (DVector<f64>, DMatrix<f64>) {
    let n = x.ncols() as f64;
    let mean = x.column_mean();
    let mut centered = x.clone();
    for mut col in centered.column_iter_mut() {
        col -= &mean;
    }
    let mut cov = (&centered * centered.transpose()) / (n - 1.0);
    // The product is symmetric in exact arithmetic; enforce it bitwise.
    linalg::symmetrize(&mut cov);
    (mean, cov)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn one_d_dataset() -> LabeledDataset {
        // Class 0: {0, 2}; class 1: {4, 6}.
        LabeledDataset::new(
            DMatrix::from_row_slice(1, 2, &[0.0, 2.0]),
            DMatrix::from_row_slice(1, 2, &[4.0, 6.0]),
        )
        .unwrap()
    }

    #[test]
    fn hand_computed_one_dimensional_moments() {
        let stats = compute_sample_statistics(&one_d_dataset());
        assert_relative_eq!(stats.mu0_hat[0], 1.0, epsilon = 1e-15);
        assert_relative_eq!(stats.mu1_hat[0], 5.0, epsilon = 1e-15);
        assert_relative_eq!(stats.sigma0_hat[(0, 0)], 2.0, epsilon = 1e-15);
        assert_relative_eq!(stats.sigma1_hat[(0, 0)], 2.0, epsilon = 1e-15);
        assert_relative_eq!(stats.sigma_pooled[(0, 0)], 2.0, epsilon = 1e-15);
        assert_relative_eq!(stats.pi0_hat, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn identical_columns_give_zero_covariance() {
        let x0 = DMatrix::from_fn(3, 4, |i, _| i as f64);
        let x1 = DMatrix::from_fn(3, 4, |i, _| i as f64 + 1.0);
        let stats = compute_sample_statistics(&LabeledDataset::new(x0, x1).unwrap());
        assert_eq!(stats.sigma0_hat.iter().fold(0.0_f64, |m, v| m.max(v.abs())), 0.0);
    }

    #[test]
    fn pooled_identity_holds() {
        let stats = compute_sample_statistics(&one_d_dataset());
        let n0 = stats.n0 as f64;
        let n1 = stats.n1 as f64;
        let expect = (&stats.sigma0_hat * (n0 - 1.0) + &stats.sigma1_hat * (n1 - 1.0))
            / (n0 + n1 - 2.0);
        assert_relative_eq!(stats.sigma_pooled, expect, epsilon = 1e-12);
    }

    #[test]
    fn model_rejects_zero_covariance() {
        let p = 3;
        let err = GaussianClassModel::new(
            DVector::zeros(p),
            DVector::from_element(p, 1.0),
            DMatrix::zeros(p, p),
            DMatrix::identity(p, p),
            0.5,
            0.5,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotPositiveDefinite { .. }));
    }

    #[test]
    fn model_rejects_bad_priors() {
        let p = 2;
        let make = |pi0: f64, pi1: f64| {
            GaussianClassModel::new(
                DVector::zeros(p),
                DVector::from_element(p, 1.0),
                DMatrix::identity(p, p),
                DMatrix::identity(p, p),
                pi0,
                pi1,
            )
        };
        assert!(make(0.7, 0.4).is_err());
        assert!(make(1.0, 0.0).is_err());
        assert!(make(0.5, 0.5).is_ok());
    }

    #[test]
    fn csv_roundtrip_with_header_and_order() {
        let text = "label,f1,f2\n1,0.5,1.5\n0,1.0,2.0\n0,3.0,4.0\n1,2.5,3.5\n";
        let data = LabeledDataset::from_csv_reader(text.as_bytes()).unwrap();
        assert_eq!(data.p(), 2);
        assert_eq!(data.n0(), 2);
        assert_eq!(data.n1(), 2);
        assert_eq!(data.x0()[(0, 0)], 1.0);
        assert_eq!(data.x1()[(1, 1)], 3.5);
    }

    #[test]
    fn csv_header_only_allowed_on_the_first_row() {
        // A label-last file (every first cell is a float) must fail on row 2
        // with a label diagnostic, not be skipped as a run of headers.
        let text = "f1,f2,label\n0.5,1.5,1\n1.0,2.0,0\n";
        let err = LabeledDataset::from_csv_reader(text.as_bytes()).unwrap_err();
        match err {
            Error::CsvFormat { line, message } => {
                assert_eq!(line, 2);
                assert!(message.contains("label column"), "got: {message}");
            }
            other => panic!("expected CsvFormat, got {other:?}"),
        }
    }

    #[test]
    fn csv_reports_line_numbers() {
        let text = "0,1.0,2.0\n0,2.0,3.0\n1,oops,1.0\n1,4.0,5.0\n";
        let err = LabeledDataset::from_csv_reader(text.as_bytes()).unwrap_err();
        match err {
            Error::CsvFormat { line, .. } => assert_eq!(line, 3),
            other => panic!("expected CsvFormat, got {other:?}"),
        }
    }

    #[test]
    fn csv_rejects_ragged_rows() {
        let text = "0,1.0,2.0\n0,2.0\n1,1.0,2.0\n1,0.0,1.0\n";
        let err = LabeledDataset::from_csv_reader(text.as_bytes()).unwrap_err();
        match err {
            Error::CsvFormat { line, .. } => assert_eq!(line, 2),
            other => panic!("expected CsvFormat, got {other:?}"),
        }
    }

    #[test]
    fn csv_rejects_single_class() {
        let text = "0,1.0\n0,2.0\n0,3.0\n";
        assert!(LabeledDataset::from_csv_reader(text.as_bytes()).is_err());
    }

    #[test]
    fn csv_file_roundtrip() {
        let dir = std::env::temp_dir().join("alphatune-model-tests");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("roundtrip.csv");
        let data = one_d_dataset();
        data.write_csv(&path).unwrap();
        let back = LabeledDataset::from_csv(&path).unwrap();
        assert_eq!(back.x0(), data.x0());
        assert_eq!(back.x1(), data.x1());
        std::fs::remove_file(&path).ok();
    }
}
