use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::io::write_matrix_csv;
use crate::linalg::Matrix;
use crate::pca::PcaModel;

/// Raw scores and loadings for a 2- or 3-component biplot.
///
/// No rescaling is applied to either part; renderers pick their own scale.
#[derive(Debug, Clone, PartialEq)]
pub struct BiplotData {
    /// `r x n`, one column per sample.
    pub scores: Matrix,
    /// `m x r`, row `i` holds variable `i`'s coefficients.
    pub loadings: Matrix,
    pub variable_names: Vec<String>,
}

pub fn biplot_data(model: &PcaModel, x: &Matrix, names: &[String], r: usize) -> Result<BiplotData> {
    let m = model.variable_count();
    if !(2..=3).contains(&r) || r > m {
        return Err(Error::range("biplot components", r, 2, m.min(3)));
    }
    if names.len() != m {
        return Err(Error::shape(
            "biplot_data",
            format!("{} names for {m} variables", names.len()),
        ));
    }
    Ok(BiplotData {
        scores: model.project(x, r)?.into_coords(),
        loadings: model.components().leading_columns(r)?,
        variable_names: names.to_vec(),
    })
}

impl BiplotData {
    pub fn component_count(&self) -> usize {
        self.loadings.cols()
    }

    /// `PC1`, `PC2`, ...
    pub fn component_labels(&self) -> Vec<String> {
        (1..=self.component_count())
            .map(|k| format!("PC{k}"))
            .collect()
    }

    /// `(min, max)` of the scores on each component.
    pub fn score_ranges(&self) -> Vec<(f64, f64)> {
        (0..self.scores.rows())
            .map(|k| extent(self.scores.row(k)))
            .collect()
    }

    /// `(min, max)` of the loadings on each component.
    pub fn loading_ranges(&self) -> Vec<(f64, f64)> {
        (0..self.loadings.cols())
            .map(|k| extent(&self.loadings.column(k)))
            .collect()
    }

    /// Writes `scores.csv` (`r` rows by `n` columns, no header) and
    /// `loadings.csv` (header `PC1,PC2[,PC3]`, one row per variable).
    pub fn write_csv(&self, dir: impl AsRef<Path>) -> Result<()> {
        let dir = dir.as_ref();
        write_matrix_csv(&self.scores, None::<&[&str]>, dir.join("scores.csv"))?;
        write_matrix_csv(
            &self.loadings,
            Some(&self.component_labels()),
            dir.join("loadings.csv"),
        )
    }

    pub fn write_svg(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.to_svg()).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
    }

    /// Scatter of the first two score rows with one labelled arrow per
    /// variable, all mapped through a single equal-aspect fit to the view box.
    pub fn to_svg(&self) -> String {
        const SIZE: f64 = 600.0;
        const MARGIN: f64 = 40.0;
        let xs = self.scores.row(0);
        let ys = self.scores.row(1);
        let lx = self.loadings.column(0);
        let ly = self.loadings.column(1);

        let (mut x0, mut x1) = extent(xs);
        let (mut y0, mut y1) = extent(ys);
        for (&a, &b) in lx.iter().zip(&ly) {
            x0 = x0.min(a);
            x1 = x1.max(a);
            y0 = y0.min(b);
            y1 = y1.max(b);
        }
        x0 = x0.min(0.0);
        y0 = y0.min(0.0);
        x1 = x1.max(0.0);
        y1 = y1.max(0.0);
        let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
        let scale = (SIZE - 2.0 * MARGIN) / span;
        let px = |x: f64| MARGIN + (x - x0) * scale;
        // svg y grows downwards
        let py = |y: f64| SIZE - MARGIN - (y - y0) * scale;

        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
        );
        let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(
            svg,
            r##"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#bbb"/>"##,
            px(x0),
            py(0.0),
            px(x0 + span),
            py(0.0)
        );
        let _ = writeln!(
            svg,
            r##"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#bbb"/>"##,
            px(0.0),
            py(y0),
            px(0.0),
            py(y0 + span)
        );
        for (&x, &y) in xs.iter().zip(ys) {
            let _ = writeln!(
                svg,
                r##"<circle cx="{:.3}" cy="{:.3}" r="2.5" fill="#1f77b4" fill-opacity="0.7"/>"##,
                px(x),
                py(y)
            );
        }
        for ((&a, &b), name) in lx.iter().zip(&ly).zip(&self.variable_names) {
            let _ = writeln!(
                svg,
                r##"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#d62728" stroke-width="1.5"/>"##,
                px(0.0),
                py(0.0),
                px(a),
                py(b)
            );
            let _ = writeln!(
                svg,
                r##"<text x="{:.3}" y="{:.3}" font-size="11" fill="#d62728">{}</text>"##,
                px(a) + 3.0,
                py(b) - 3.0,
                escape(name)
            );
        }
        let labels = self.component_labels();
        let _ = writeln!(
            svg,
            r#"<text x="{:.3}" y="{:.3}" font-size="12">{}</text>"#,
            SIZE - MARGIN - 30.0,
            SIZE - 10.0,
            labels[0]
        );
        let _ = writeln!(
            svg,
            r#"<text x="10" y="{:.3}" font-size="12">{}</text>"#,
            MARGIN - 10.0,
            labels[1]
        );
        svg.push_str("</svg>\n");
        svg
    }
}

fn extent(values: &[f64]) -> (f64, f64) {
    values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        })
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}
