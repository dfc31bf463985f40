//! Dense matrix kernels and the symmetric eigensolver.

mod eigen;
mod matrix;

pub use eigen::{
    spectral_reconstruct, symmetric_eigen, EigenDecomposition, CONVERGENCE_TOLERANCE, MAX_SWEEPS,
    SYMMETRY_TOLERANCE,
};
pub use matrix::Matrix;

/// Free-function form of [`Matrix::matmul`].
pub fn matmul(a: &Matrix, b: &Matrix) -> crate::Result<Matrix> {
    a.matmul(b)
}

/// Free-function form of [`Matrix::transpose`].
pub fn transpose(a: &Matrix) -> Matrix {
    a.transpose()
}
