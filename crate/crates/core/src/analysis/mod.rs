//! Application-level computations on top of a fitted model.

mod biplot;
mod kmeans;
mod line;
mod representative;

pub use biplot::{biplot_data, BiplotData};
pub use kmeans::{kmeans, kmeans_restarts, matched_accuracy, Clustering, MAX_ITERATIONS};
pub use line::{best_fit_line, BestFitLine, VERTICAL_TOLERANCE};
pub use representative::cluster_representative;
