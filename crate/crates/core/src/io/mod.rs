//! Dataset and image ingestion/egress, the embedded sample, and synthetic spikes.

mod csv;
mod dataset;
mod pgm;
mod spikes;

pub use self::csv::{
    format_value, load_csv, parse_csv, save_csv, write_matrix_csv, write_matrix_csv_to, Orientation,
};
pub use dataset::{embedded_height_weight, Dataset};
pub use pgm::{decode_pgm, encode_pgm, encode_pgm_ascii, load_pgm, save_pgm, GrayImage};
pub use spikes::{
    default_templates, synthesize_spikes, synthesize_spikes_with_jitter, GaussianStream, SpikeSet,
    SPIKE_SAMPLES,
};
