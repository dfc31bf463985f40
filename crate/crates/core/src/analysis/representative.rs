use crate::error::{Error, Result};
use crate::pca::PcaModel;

/// Maps a point in score space back to signal space:
/// `mu + sum_i coords[i] * v_(i+1)`.
///
/// Applied to a cluster centroid this gives the cluster's representative
/// waveform.
pub fn cluster_representative(model: &PcaModel, coords: &[f64]) -> Result<Vec<f64>> {
    let m = model.variable_count();
    if coords.len() > m {
        return Err(Error::range("score dimension", coords.len(), 0, m));
    }
    let p = model.components();
    Ok((0..m)
        .map(|i| {
            model.mean()[i]
                + coords
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c * p.get(i, k))
                    .sum::<f64>()
        })
        .collect())
}
