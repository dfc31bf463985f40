//! Deterministic workloads shared by the criterion benches.

use pcakit::io::GaussianStream;
use pcakit::Matrix;

/// `rows x cols` matrix of standard normals.
pub fn gaussian_matrix(rows: usize, cols: usize, seed: u64) -> Matrix {
    let mut g = GaussianStream::new(seed);
    Matrix::new(
        rows,
        cols,
        (0..rows * cols).map(|_| g.next_normal()).collect(),
    )
    .expect("finite normals")
}

/// Symmetric `n x n` matrix `(A + A^T) / 2` with Gaussian `A`.
pub fn symmetric_matrix(n: usize, seed: u64) -> Matrix {
    let a = gaussian_matrix(n, n, seed);
    let data = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            0.5 * (a.get(i, j) + a.get(j, i))
        })
        .collect();
    Matrix::new(n, n, data).expect("finite")
}

/// Smooth `size x size` greyscale test pattern with a little texture.
pub fn test_image(size: usize) -> Matrix {
    let data = (0..size * size)
        .map(|k| {
            let (i, j) = ((k / size) as f64, (k % size) as f64);
            let s = size as f64;
            127.5 + 80.0 * (i / s * 6.0).sin() * (j / s * 4.0).cos() + 20.0 * ((i * j) / s).sin()
        })
        .collect();
    Matrix::new(size, size, data).expect("finite")
}
