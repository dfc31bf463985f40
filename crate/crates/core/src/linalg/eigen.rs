//! Symmetric eigendecomposition by cyclic Jacobi rotations.
//!
//! Each rotation zeroes one off-diagonal pair of the working copy of `S`
//! while the product of all rotations accumulates into `V`, so at
//! convergence `S = V diag(lambda) V^T`. Sweeps visit every `(p, q)` pair
//! with `p < q` in row order.
//!
//! Eigenvalues are returned in non-increasing order. Each eigenvector is
//! normalised so that its largest-magnitude entry is positive (the earliest
//! one on exact ties). Inside a repeated eigenvalue's eigenspace the
//! individual vectors depend on the rotation sequence; only the spanned
//! subspace is meaningful there.

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Relative asymmetry accepted (and silently symmetrised away).
pub const SYMMETRY_TOLERANCE: f64 = 1e-9;
/// Stop once `off(S) <= CONVERGENCE_TOLERANCE * ||S||_F`.
pub const CONVERGENCE_TOLERANCE: f64 = 1e-12;
/// Full sweeps allowed before reporting non-convergence.
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues (non-increasing) and the orthonormal eigenvector matrix whose
/// `k`-th column belongs to `values[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    values: Vec<f64>,
    vectors: Matrix,
}

impl EigenDecomposition {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn vectors(&self) -> &Matrix {
        &self.vectors
    }

    /// Order of the decomposed matrix.
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// The `k`-th eigenvector (zero based).
    pub fn vector(&self, k: usize) -> Vec<f64> {
        self.vectors.column(k)
    }

    pub(crate) fn into_parts(self) -> (Vec<f64>, Matrix) {
        (self.values, self.vectors)
    }

    /// Partial spectral sum `sum_{k<r} lambda_k v_k v_k^T`.
    ///
    /// With `r` equal to the order this rebuilds the source matrix.
    pub fn reconstruct(&self, r: usize) -> Result<Matrix> {
        let m = self.dim();
        if r == 0 || r > m {
            return Err(Error::range("r", r, 1, m));
        }
        let mut data = vec![0.0; m * m];
        for k in 0..r {
            let lambda = self.values[k];
            let v = self.vector(k);
            for i in 0..m {
                let scaled = lambda * v[i];
                for j in 0..m {
                    data[i * m + j] += scaled * v[j];
                }
            }
        }
        Matrix::new(m, m, data)
    }
}

/// Free-function form of [`EigenDecomposition::reconstruct`].
pub fn spectral_reconstruct(eig: &EigenDecomposition, r: usize) -> Result<Matrix> {
    eig.reconstruct(r)
}

/// Eigendecomposition of a real symmetric matrix.
pub fn symmetric_eigen(s: &Matrix) -> Result<EigenDecomposition> {
    if !s.is_square() {
        return Err(Error::shape(
            "symmetric_eigen",
            format!("matrix must be square, got {}x{}", s.rows(), s.cols()),
        ));
    }
    let n = s.rows();
    let norm = s.frobenius_norm();
    let deviation = s.max_asymmetry().unwrap_or(0.0);
    let tolerance = SYMMETRY_TOLERANCE * norm.max(1.0);
    if deviation > tolerance {
        return Err(Error::Asymmetric {
            deviation,
            tolerance,
        });
    }

    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = 0.5 * (s.get(i, j) + s.get(j, i));
        }
    }
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let target = CONVERGENCE_TOLERANCE * norm;
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                residual: off,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable: equal eigenvalues keep their diagonal order
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));

    let values: Vec<f64> = order.iter().map(|&k| a[k * n + k]).collect();
    let mut vectors = Matrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let column: Vec<f64> = (0..n).map(|i| v[i * n + src]).collect();
        let sign = sign_of_dominant(&column);
        for (i, x) in column.into_iter().enumerate() {
            vectors.set(i, dst, sign * x);
        }
    }
    if values.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite("symmetric_eigen"));
    }
    Ok(EigenDecomposition { values, vectors })
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            sum += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * sum).sqrt()
}

/// Applies the rotation in the `(p, q)` plane that annihilates `a[p][q]`.
fn rotate(a: &mut [f64], v: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    // smaller root of t^2 + 2 theta t - 1 = 0
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_rp = c * arp - s * arq;
        let new_rq = s * arp + c * arq;
        a[r * n + p] = new_rp;
        a[p * n + r] = new_rp;
        a[r * n + q] = new_rq;
        a[q * n + r] = new_rq;
    }
    for r in 0..n {
        let vrp = v[r * n + p];
        let vrq = v[r * n + q];
        v[r * n + p] = c * vrp - s * vrq;
        v[r * n + q] = s * vrp + c * vrq;
    }
}

/// `1.0` or `-1.0`: the sign that makes the largest-magnitude entry
/// positive, earliest index winning ties.
fn sign_of_dominant(column: &[f64]) -> f64 {
    let mut best = 0usize;
    for (i, x) in column.iter().enumerate() {
        if x.abs() > column[best].abs() {
            best = i;
        }
    }
    if column[best] < 0.0 {
        -1.0
    } else {
        1.0
    }
}
