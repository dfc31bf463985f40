//! Comma-separated numeric tables.
//!
//! Input: UTF-8, LF or CRLF, an optional header line, then a rectangular
//! body of decimal numbers. The first line is treated as a header when any
//! of its fields fails to parse as a number. Output: LF line endings and
//! every value in scientific notation with 17 significant digits, which
//! reloads bit-exactly.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::io::dataset::{default_names, Dataset};
use crate::linalg::Matrix;

/// How the rows of a CSV file map onto the variables x samples layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Orientation {
    /// One sample per line, one variable per column (the usual export).
    #[default]
    RowsAreSamples,
    /// One variable per line; loaded without transposing.
    RowsAreVariables,
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "samples" | "rows-are-samples" => Ok(Orientation::RowsAreSamples),
            "variables" | "rows-are-variables" => Ok(Orientation::RowsAreVariables),
            other => Err(Error::Argument(format!(
                "orientation must be `samples` or `variables`, got `{other}`"
            ))),
        }
    }
}

/// Reads a CSV file into a [`Dataset`].
pub fn load_csv(path: impl AsRef<Path>, orientation: Orientation) -> Result<Dataset> {
    let path = path.as_ref();
    let text = fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_csv(&text, orientation, &path.display().to_string())
}

/// Parses CSV bytes; `label` is used for error messages and provenance.
pub fn parse_csv(bytes: &[u8], orientation: Orientation, label: &str) -> Result<Dataset> {
    let parse_error = |line: usize, column: Option<usize>, message: String| Error::Parse {
        path: label.to_string(),
        line,
        column,
        message,
    };
    let mut reader = ::csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(::csv::Trim::All)
        .from_reader(bytes);

    let mut header: Option<Vec<String>> = None;
    let mut body: Vec<f64> = Vec::new();
    let mut width = 0usize;
    let mut lines = 0usize;
    for (index, record) in reader.records().enumerate() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            parse_error(line, None, e.to_string())
        })?;
        let line = record.position().map_or(index + 1, |p| p.line() as usize);
        let parsed: Vec<Option<f64>> = record
            .iter()
            .map(|f| f.parse::<f64>().ok().filter(|v| v.is_finite()))
            .collect();
        if index == 0 && parsed.iter().any(Option::is_none) {
            header = Some(record.iter().map(str::to_string).collect());
            width = record.len();
            continue;
        }
        if width == 0 {
            width = record.len();
        } else if record.len() != width {
            return Err(parse_error(
                line,
                None,
                format!("expected {width} fields, found {}", record.len()),
            ));
        }
        for (col, (value, raw)) in parsed.into_iter().zip(record.iter()).enumerate() {
            match value {
                Some(v) => body.push(v),
                None => {
                    return Err(parse_error(
                        line,
                        Some(col + 1),
                        format!("`{raw}` is not a finite number"),
                    ))
                }
            }
        }
        lines += 1;
    }
    if lines == 0 {
        let line = usize::from(header.is_some());
        return Err(parse_error(line, None, "no numeric data rows".into()));
    }

    let table = Matrix::new(lines, width, body).map_err(|e| parse_error(0, None, e.to_string()))?;
    let (data, names) = match orientation {
        Orientation::RowsAreSamples => {
            let names = header.unwrap_or_else(|| default_names(width));
            (table.transpose(), names)
        }
        Orientation::RowsAreVariables => (table, default_names(lines)),
    };
    Dataset::new(names, data, label)
}

/// Writes a dataset one sample per line with a header of variable names,
/// so that `load_csv(path, Orientation::RowsAreSamples)` restores it.
pub fn save_csv(dataset: &Dataset, path: impl AsRef<Path>) -> Result<()> {
    write_matrix_csv(
        &dataset.data().transpose(),
        Some(dataset.variable_names()),
        path,
    )
}

/// Writes `matrix` row by row, with an optional header line.
pub fn write_matrix_csv<S: AsRef<str>>(
    matrix: &Matrix,
    header: Option<&[S]>,
    path: impl AsRef<Path>,
) -> Result<()> {
    let path = path.as_ref();
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut out = Vec::new();
    write_matrix_csv_to(&mut out, matrix, header).map_err(io_err)?;
    fs::write(path, out).map_err(io_err)
}

/// As [`write_matrix_csv`], into any writer.
pub fn write_matrix_csv_to<W: Write, S: AsRef<str>>(
    out: W,
    matrix: &Matrix,
    header: Option<&[S]>,
) -> std::io::Result<()> {
    let mut writer = ::csv::WriterBuilder::new()
        .terminator(::csv::Terminator::Any(b'\n'))
        .from_writer(out);
    if let Some(header) = header {
        writer.write_record(header.iter().map(AsRef::as_ref))?;
    }
    for i in 0..matrix.rows() {
        writer.write_record(matrix.row(i).iter().map(|v| format_value(*v)))?;
    }
    writer.flush()
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_value(v: f64) -> String {
    format!("{v:.16e}")
}
