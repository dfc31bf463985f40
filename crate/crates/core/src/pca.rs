//! Covariance-based principal component analysis.
//!
//! Data matrices are `m x n`: variables are rows, samples are columns. A
//! fit runs mean -> centering -> sample covariance `B B^T / (n - 1)` ->
//! symmetric eigendecomposition. Projection always acts on mean-centred
//! data and reconstruction adds the mean back, so a full-rank round trip
//! returns the input.

use crate::error::{Error, Result};
use crate::linalg::{symmetric_eigen, Matrix};

/// Negative eigenvalues no further below zero than this (relative to
/// `max(1, ||S||_F)`) are rounding noise and get clamped to zero.
pub const NEGATIVE_EIGENVALUE_TOLERANCE: f64 = 1e-10;

/// Row means of `x`.
pub fn mean_vector(x: &Matrix) -> Vec<f64> {
    let n = x.cols() as f64;
    (0..x.rows())
        .map(|i| x.row(i).iter().sum::<f64>() / n)
        .collect()
}

/// Subtracts `mu[i]` from every entry of row `i`.
pub fn center(x: &Matrix, mu: &[f64]) -> Result<Matrix> {
    if mu.len() != x.rows() {
        return Err(Error::shape(
            "center",
            format!("mean has {} entries, data has {} rows", mu.len(), x.rows()),
        ));
    }
    let data = (0..x.rows())
        .flat_map(|i| x.row(i).iter().map(move |v| v - mu[i]))
        .collect();
    Matrix::new(x.rows(), x.cols(), data)
}

/// Sample covariance `B B^T / (n - 1)` of already centred data `b`.
pub fn covariance(b: &Matrix) -> Result<Matrix> {
    let (m, n) = b.shape();
    if n < 2 {
        return Err(Error::InsufficientSamples { needed: 2, got: n });
    }
    let divisor = (n - 1) as f64;
    let mut s = Matrix::zeros(m, m);
    for i in 0..m {
        for k in i..m {
            let dot: f64 = b.row(i).iter().zip(b.row(k)).map(|(p, q)| p * q).sum();
            let value = dot / divisor;
            s.set(i, k, value);
            s.set(k, i, value);
        }
    }
    if s.as_slice().iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("covariance"));
    }
    Ok(s)
}

/// A fitted PCA model: mean, ordered components and their variances.
#[derive(Debug, Clone, PartialEq)]
pub struct PcaModel {
    mean: Vec<f64>,
    components: Matrix,
    eigenvalues: Vec<f64>,
    total_variance: f64,
    sample_count: usize,
}

impl PcaModel {
    /// Fits a model to `x` (`m` variables by `n >= 2` samples).
    pub fn fit(x: &Matrix) -> Result<Self> {
        let mean = mean_vector(x);
        let b = center(x, &mean)?;
        let s = covariance(&b)?;
        let floor = -NEGATIVE_EIGENVALUE_TOLERANCE * s.frobenius_norm().max(1.0);
        let (mut eigenvalues, components) = symmetric_eigen(&s)?.into_parts();
        for value in &mut eigenvalues {
            if *value < 0.0 {
                if *value < floor {
                    return Err(Error::NegativeEigenvalue { value: *value });
                }
                *value = 0.0;
            }
        }
        Ok(Self {
            mean,
            components,
            eigenvalues,
            total_variance: s.trace(),
            sample_count: x.cols(),
        })
    }

    pub fn mean(&self) -> &[f64] {
        &self.mean
    }

    /// `m x m` matrix whose columns are the principal directions.
    pub fn components(&self) -> &Matrix {
        &self.components
    }

    /// The `k`-th principal direction (zero based).
    pub fn component(&self, k: usize) -> Vec<f64> {
        self.components.column(k)
    }

    /// Variances along each component, non-increasing.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// `trace(S)`, the total variance of the training data.
    pub fn total_variance(&self) -> f64 {
        self.total_variance
    }

    pub fn sample_count(&self) -> usize {
        self.sample_count
    }

    pub fn variable_count(&self) -> usize {
        self.mean.len()
    }

    fn check_rank(&self, r: usize) -> Result<()> {
        let m = self.variable_count();
        if r == 0 || r > m {
            return Err(Error::range("r", r, 1, m));
        }
        Ok(())
    }

    /// Scores of `x` on the first `r` components: `P_r^T (x - mu 1^T)`.
    pub fn project(&self, x: &Matrix, r: usize) -> Result<Scores> {
        self.check_rank(r)?;
        if x.rows() != self.variable_count() {
            return Err(Error::shape(
                "project",
                format!(
                    "model has {} variables, data has {} rows",
                    self.variable_count(),
                    x.rows()
                ),
            ));
        }
        let centered = center(x, &self.mean)?;
        let basis_t = self.components.leading_columns(r)?.transpose();
        Ok(Scores {
            coords: basis_t.matmul(&centered)?,
        })
    }

    /// Maps scores back to data space: `P_r Y + mu 1^T`.
    pub fn reconstruct(&self, scores: &Scores) -> Result<Matrix> {
        let r = scores.component_count();
        if r > self.variable_count() {
            return Err(Error::shape(
                "reconstruct",
                format!(
                    "scores have {r} components, model has {} variables",
                    self.variable_count()
                ),
            ));
        }
        let basis = self.components.leading_columns(r)?;
        let centered = basis.matmul(&scores.coords)?;
        let n = centered.cols();
        let data = (0..centered.rows())
            .flat_map(|i| centered.row(i).iter().map(move |v| v + self.mean[i]))
            .collect();
        Matrix::new(self.variable_count(), n, data)
    }

    /// Fraction of total variance carried by the first `r` components.
    pub fn spectral_ratio(&self, r: usize) -> Result<f64> {
        self.check_rank(r)?;
        if self.total_variance <= 0.0 {
            return Err(Error::UndefinedRatio);
        }
        let kept: f64 = self.eigenvalues[..r].iter().sum();
        Ok((kept / self.total_variance).clamp(0.0, 1.0))
    }
}

/// Free-function form of [`PcaModel::fit`].
pub fn fit(x: &Matrix) -> Result<PcaModel> {
    PcaModel::fit(x)
}

/// Sample coordinates in the leading principal directions.
///
/// `coords` is `r x n`: one row per component, one column per sample.
#[derive(Debug, Clone, PartialEq)]
pub struct Scores {
    coords: Matrix,
}

impl Scores {
    /// Wraps externally produced coordinates (for example reloaded from disk).
    pub fn new(coords: Matrix) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &Matrix {
        &self.coords
    }

    pub fn into_coords(self) -> Matrix {
        self.coords
    }

    pub fn component_count(&self) -> usize {
        self.coords.rows()
    }

    pub fn sample_count(&self) -> usize {
        self.coords.cols()
    }
}
