//! Principal component analysis from first principles.
//!
//! Data matrices are laid out variables x samples. [`PcaModel::fit`] centres
//! the data, forms the sample covariance and diagonalises it with a cyclic
//! Jacobi eigensolver ([`symmetric_eigen`]); projection, truncated
//! reconstruction and the retained-variance ratio follow from the model.
//!
//! ```
//! use pcakit::{io::embedded_height_weight, PcaModel};
//!
//! let data = embedded_height_weight();
//! let model = PcaModel::fit(data.data()).unwrap();
//! assert!(model.spectral_ratio(1).unwrap() > 0.99);
//! ```

pub mod analysis;
mod error;
pub mod io;
pub mod linalg;
pub mod pca;

pub use error::{Error, ErrorKind, Result};
pub use io::{Dataset, GrayImage, Orientation};
pub use linalg::{symmetric_eigen, EigenDecomposition, Matrix};
pub use pca::{PcaModel, Scores};
