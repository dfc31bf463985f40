use std::fmt;

use crate::error::{Error, Result};
use crate::pca::PcaModel;

/// `|v1[0]|` at or below this counts as a vertical first component.
pub const VERTICAL_TOLERANCE: f64 = 1e-12;

/// Line through the data mean along the first principal direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BestFitLine {
    pub slope: f64,
    pub point: [f64; 2],
}

impl BestFitLine {
    pub fn y_at(&self, x: f64) -> f64 {
        self.point[1] + self.slope * (x - self.point[0])
    }
}

impl fmt::Display for BestFitLine {
    /// `y - b = s (x - a)` in point-slope form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.point;
        let p = f.precision().unwrap_or(6);
        write!(f, "y - {b:.p$} = {:.p$} (x - {a:.p$})", self.slope)
    }
}

/// Best-fit line of a two-variable model.
pub fn best_fit_line(model: &PcaModel) -> Result<BestFitLine> {
    if model.variable_count() != 2 {
        return Err(Error::shape(
            "best_fit_line",
            format!("needs 2 variables, model has {}", model.variable_count()),
        ));
    }
    let v1 = model.component(0);
    if v1[0].abs() <= VERTICAL_TOLERANCE {
        return Err(Error::VerticalLine);
    }
    let mean = model.mean();
    Ok(BestFitLine {
        slope: v1[1] / v1[0],
        point: [mean[0], mean[1]],
    })
}
