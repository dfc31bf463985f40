//! Reproducible synthetic spike waveforms.
//!
//! Random stream: `ChaCha8Rng` seeded through `SeedableRng::seed_from_u64`.
//! A uniform `u` in `[0, 1)` is `(next_u64() >> 11) * 2^-53`. Standard
//! normals come from Box-Muller on a pair `(u1, u2)`:
//! `sqrt(-2 ln(1 - u1)) * cos(2 pi u2)` first, then the matching `sin`
//! term, after which a fresh pair is drawn.
//!
//! Spikes are emitted template by template (all of template 0, then all of
//! template 1, ...). For each spike one normal `a` is drawn for the
//! amplitude, then one normal per sample for the noise, giving
//! `(1 + amplitude_jitter * a) * template + noise_sd * z`.

use std::f64::consts::PI;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Samples per waveform in the built-in templates.
pub const SPIKE_SAMPLES: usize = 64;

/// Synthetic recording: `samples x N` waveforms plus the template index
/// each column was generated from.
#[derive(Debug, Clone, PartialEq)]
pub struct SpikeSet {
    pub waveforms: Matrix,
    pub labels: Vec<usize>,
}

/// Standard-normal stream over ChaCha8, as documented at module level.
pub struct GaussianStream {
    rng: ChaCha8Rng,
    spare: Option<f64>,
}

impl GaussianStream {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            spare: None,
        }
    }

    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn next_normal(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        let u1 = self.uniform();
        let u2 = self.uniform();
        let radius = (-2.0 * (1.0 - u1).ln()).sqrt();
        let angle = 2.0 * PI * u2;
        self.spare = Some(radius * angle.sin());
        radius * angle.cos()
    }
}

/// Templates plus isotropic Gaussian noise; see [`synthesize_spikes_with_jitter`].
pub fn synthesize_spikes(
    templates: &[Vec<f64>],
    counts: &[usize],
    noise_sd: f64,
    seed: u64,
) -> Result<SpikeSet> {
    synthesize_spikes_with_jitter(templates, counts, noise_sd, 0.0, seed)
}

/// Generates `counts[t]` noisy copies of each `templates[t]`.
///
/// `amplitude_jitter` is the standard deviation of the per-spike relative
/// amplitude; zero reproduces `template + noise` exactly.
pub fn synthesize_spikes_with_jitter(
    templates: &[Vec<f64>],
    counts: &[usize],
    noise_sd: f64,
    amplitude_jitter: f64,
    seed: u64,
) -> Result<SpikeSet> {
    let Some(first) = templates.first() else {
        return Err(Error::Argument("at least one template is required".into()));
    };
    let samples = first.len();
    if samples == 0 || templates.iter().any(|t| t.len() != samples) {
        return Err(Error::Argument(
            "templates must be non-empty and of equal length".into(),
        ));
    }
    if counts.len() != templates.len() {
        return Err(Error::Argument(format!(
            "{} counts for {} templates",
            counts.len(),
            templates.len()
        )));
    }
    let total: usize = counts.iter().sum();
    if total < 2 {
        return Err(Error::Argument(format!(
            "need at least 2 spikes in total, got {total}"
        )));
    }
    if !(noise_sd >= 0.0 && noise_sd.is_finite()) {
        return Err(Error::Argument(format!("noise sd {noise_sd} must be >= 0")));
    }
    if !(amplitude_jitter >= 0.0 && amplitude_jitter.is_finite()) {
        return Err(Error::Argument(format!(
            "amplitude jitter {amplitude_jitter} must be >= 0"
        )));
    }

    let mut stream = GaussianStream::new(seed);
    let mut columns = Vec::with_capacity(total * samples);
    let mut labels = Vec::with_capacity(total);
    for (label, (template, &count)) in templates.iter().zip(counts).enumerate() {
        for _ in 0..count {
            let gain = 1.0 + amplitude_jitter * stream.next_normal();
            columns.extend(
                template
                    .iter()
                    .map(|&v| gain * v + noise_sd * stream.next_normal()),
            );
            labels.push(label);
        }
    }
    // columns holds one spike per row; store spikes as columns
    let waveforms = Matrix::new(total, samples, columns)?.transpose();
    Ok(SpikeSet { waveforms, labels })
}

fn bump(t: f64, centre: f64, width: f64) -> f64 {
    (-((t - centre) / width).powi(2)).exp()
}

/// Two distinct 64-sample action-potential shapes (microvolts): a narrow,
/// deep spike and a broad one with a larger after-hyperpolarisation.
pub fn default_templates() -> Vec<Vec<f64>> {
    let narrow = (0..SPIKE_SAMPLES)
        .map(|i| {
            let t = i as f64;
            -120.0 * bump(t, 20.0, 3.0) + 45.0 * bump(t, 30.0, 6.0)
        })
        .collect();
    let broad = (0..SPIKE_SAMPLES)
        .map(|i| {
            let t = i as f64;
            -70.0 * bump(t, 22.0, 5.0) + 60.0 * bump(t, 36.0, 9.0)
        })
        .collect();
    vec![narrow, broad]
}
