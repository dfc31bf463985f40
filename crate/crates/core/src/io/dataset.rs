use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Named variables (rows) by samples (columns).
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    variable_names: Vec<String>,
    data: Matrix,
    source_label: String,
}

impl Dataset {
    pub fn new(
        variable_names: Vec<String>,
        data: Matrix,
        source_label: impl Into<String>,
    ) -> Result<Self> {
        if variable_names.len() != data.rows() {
            return Err(Error::shape(
                "Dataset::new",
                format!(
                    "{} variable names for {} data rows",
                    variable_names.len(),
                    data.rows()
                ),
            ));
        }
        Ok(Self {
            variable_names,
            data,
            source_label: source_label.into(),
        })
    }

    /// Wraps a bare matrix, naming variables `V1`, `V2`, ...
    pub fn from_matrix(data: Matrix, source_label: impl Into<String>) -> Self {
        let variable_names = default_names(data.rows());
        Self {
            variable_names,
            data,
            source_label: source_label.into(),
        }
    }

    pub fn variable_names(&self) -> &[String] {
        &self.variable_names
    }

    pub fn data(&self) -> &Matrix {
        &self.data
    }

    pub fn into_data(self) -> Matrix {
        self.data
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    pub fn variable_count(&self) -> usize {
        self.data.rows()
    }

    pub fn sample_count(&self) -> usize {
        self.data.cols()
    }
}

pub(crate) fn default_names(count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("V{i}")).collect()
}

const HEIGHTS: [f64; 30] = [
    67.78, 73.52, 71.40, 70.22, 69.79, 70.70, //
    71.80, 72.01, 69.90, 68.78, 68.49, 69.62, //
    70.30, 69.12, 70.28, 73.09, 68.46, 70.65, //
    73.23, 69.13, 69.83, 70.88, 65.48, 70.42, //
    69.63, 69.21, 72.84, 69.49, 68.53, 67.44,
];

const WEIGHTS: [f64; 30] = [
    132.99, 176.49, 173.03, 162.34, 164.30, 143.30, //
    161.49, 166.46, 142.37, 150.67, 147.45, 144.14, //
    155.61, 142.46, 146.09, 175.00, 149.50, 162.97, //
    177.90, 144.04, 161.28, 163.54, 126.90, 149.50, //
    161.85, 149.72, 172.42, 151.55, 138.33, 133.89,
];

/// Heights (in) and weights (lb) of 30 young adults, as a 2 x 30 dataset.
pub fn embedded_height_weight() -> Dataset {
    let mut data = Vec::with_capacity(60);
    data.extend_from_slice(&HEIGHTS);
    data.extend_from_slice(&WEIGHTS);
    Dataset {
        variable_names: vec!["Height".into(), "Weight".into()],
        data: Matrix::new(2, 30, data).expect("embedded table is well formed"),
        source_label: "embedded height/weight sample (30 young adults)".into(),
    }
}
