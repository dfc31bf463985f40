//! Lloyd's k-means on the columns of a matrix.
//!
//! Initial centroids are `k` distinct points drawn uniformly without
//! replacement (partial Fisher-Yates over a `ChaCha8Rng`). Restart `i` of
//! [`kmeans_restarts`] uses the generator seeded with `seed` on stream `i`,
//! so any restart can be replayed on its own and restart 0 is exactly
//! [`kmeans`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

pub const MAX_ITERATIONS: usize = 300;

/// Outcome of one (best) k-means run.
#[derive(Debug, Clone, PartialEq)]
pub struct Clustering {
    /// Cluster index in `0..k` for each point.
    pub assignments: Vec<usize>,
    /// `r x k`, one centroid per column.
    pub centroids: Matrix,
    /// Sum of squared distances from each point to its centroid.
    pub inertia: f64,
    /// Lloyd iterations performed.
    pub iterations: usize,
    inertia_trace: Vec<f64>,
}

impl Clustering {
    pub fn k(&self) -> usize {
        self.centroids.cols()
    }

    /// Inertia after every assignment step, first to last.
    pub fn inertia_trace(&self) -> &[f64] {
        &self.inertia_trace
    }

    /// Number of points in each cluster.
    pub fn cluster_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k()];
        for &a in &self.assignments {
            sizes[a] += 1;
        }
        sizes
    }
}

/// Single seeded Lloyd run.
pub fn kmeans(points: &Matrix, k: usize, seed: u64) -> Result<Clustering> {
    check(points, k)?;
    Ok(lloyd(points, k, seed, 0))
}

/// Best of `restarts` seeded runs by inertia; ties go to the lowest restart.
pub fn kmeans_restarts(
    points: &Matrix,
    k: usize,
    seed: u64,
    restarts: usize,
) -> Result<Clustering> {
    check(points, k)?;
    if restarts == 0 {
        return Err(Error::Argument("restarts must be at least 1".into()));
    }
    let mut best = lloyd(points, k, seed, 0);
    for stream in 1..restarts as u64 {
        let candidate = lloyd(points, k, seed, stream);
        if candidate.inertia < best.inertia {
            best = candidate;
        }
    }
    Ok(best)
}

fn check(points: &Matrix, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Argument("k must be at least 1".into()));
    }
    if points.cols() < k {
        return Err(Error::Argument(format!(
            "cannot form {k} clusters from {} points",
            points.cols()
        )));
    }
    Ok(())
}

fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn lloyd(points: &Matrix, k: usize, seed: u64, stream: u64) -> Clustering {
    let dim = points.rows();
    let n = points.cols();
    // column-major copies make the inner loops contiguous
    let pts: Vec<Vec<f64>> = (0..n).map(|j| points.column(j)).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut order: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.random_range(i..n);
        order.swap(i, j);
    }
    let mut centroids: Vec<Vec<f64>> = order[..k].iter().map(|&i| pts[i].clone()).collect();

    let assign = |centroids: &[Vec<f64>]| -> (Vec<usize>, f64) {
        let mut total = 0.0;
        let labels = pts
            .iter()
            .map(|p| {
                let mut best = 0;
                let mut best_d = squared_distance(p, &centroids[0]);
                for (c, centroid) in centroids.iter().enumerate().skip(1) {
                    let d = squared_distance(p, centroid);
                    if d < best_d {
                        best = c;
                        best_d = d;
                    }
                }
                total += best_d;
                best
            })
            .collect();
        (labels, total)
    };

    let (mut assignments, first) = assign(&centroids);
    let mut trace = vec![first];
    let mut iterations = 0;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        update_centroids(&pts, &assignments, &mut centroids, dim);
        let (next, inertia) = assign(&centroids);
        trace.push(inertia);
        if next == assignments {
            break;
        }
        assignments = next;
    }

    let mut data = vec![0.0; dim * k];
    for (c, centroid) in centroids.iter().enumerate() {
        for (i, &v) in centroid.iter().enumerate() {
            data[i * k + c] = v;
        }
    }
    Clustering {
        assignments,
        centroids: Matrix::new(dim, k, data).expect("centroids are finite means of finite points"),
        inertia: *trace.last().expect("at least one assignment step"),
        iterations,
        inertia_trace: trace,
    }
}

/// Moves each centroid to the mean of its members. A cluster left empty is
/// re-seeded at the point farthest from its previous centroid.
fn update_centroids(
    pts: &[Vec<f64>],
    assignments: &[usize],
    centroids: &mut [Vec<f64>],
    dim: usize,
) {
    let k = centroids.len();
    let mut sums = vec![vec![0.0; dim]; k];
    let mut counts = vec![0usize; k];
    for (p, &a) in pts.iter().zip(assignments) {
        counts[a] += 1;
        for (s, v) in sums[a].iter_mut().zip(p) {
            *s += v;
        }
    }
    let mut taken: Vec<usize> = Vec::new();
    for c in 0..k {
        if counts[c] > 0 {
            let inv = 1.0 / counts[c] as f64;
            centroids[c] = sums[c].iter().map(|s| s * inv).collect();
            continue;
        }
        let mut far = None;
        let mut far_d = -1.0;
        for (j, p) in pts.iter().enumerate() {
            if taken.contains(&j) {
                continue;
            }
            let d = squared_distance(p, &centroids[c]);
            if d > far_d {
                far = Some(j);
                far_d = d;
            }
        }
        if let Some(j) = far {
            taken.push(j);
            centroids[c] = pts[j].clone();
        }
    }
}

/// Fraction of points whose cluster matches the reference label under the
/// best one-to-one relabelling of clusters.
pub fn matched_accuracy(assignments: &[usize], truth: &[usize]) -> f64 {
    assert_eq!(
        assignments.len(),
        truth.len(),
        "label vectors differ in length"
    );
    if truth.is_empty() {
        return 1.0;
    }
    let clusters = assignments.iter().max().map_or(0, |m| m + 1);
    let labels = truth.iter().max().map_or(0, |m| m + 1);
    let mut confusion = vec![vec![0usize; labels]; clusters];
    for (&a, &t) in assignments.iter().zip(truth) {
        confusion[a][t] += 1;
    }
    let mut used = vec![false; labels];
    let best = best_matching(&confusion, 0, &mut used);
    best as f64 / truth.len() as f64
}

fn best_matching(confusion: &[Vec<usize>], cluster: usize, used: &mut [bool]) -> usize {
    if cluster == confusion.len() {
        return 0;
    }
    // this cluster left unmatched
    let mut best = best_matching(confusion, cluster + 1, used);
    for label in 0..used.len() {
        if !used[label] {
            used[label] = true;
            let total = confusion[cluster][label] + best_matching(confusion, cluster + 1, used);
            used[label] = false;
            best = best.max(total);
        }
    }
    best
}
