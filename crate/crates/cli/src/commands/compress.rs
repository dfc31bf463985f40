use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use pcakit::io::{load_pgm, save_pgm};
use pcakit::{Error, GrayImage, PcaModel, Result};

use super::{stdout_err, stdout_report, write_file};
use crate::report::{num, percent};

/// `dir/name.pgm` -> `dir/name.eigenvalues.csv`.
pub fn sidecar_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map_or_else(|| "image".into(), |s| s.to_string_lossy().into_owned());
    out.with_file_name(format!("{stem}.eigenvalues.csv"))
}

pub fn compress(input: &Path, r: usize, out: &Path) -> Result<()> {
    let image = load_pgm(input)?;
    let x = image.to_matrix();
    let model = PcaModel::fit(&x)?;
    let scores = model.project(&x, r)?;
    let restored = GrayImage::from_matrix_rounded(&model.reconstruct(&scores)?);

    let ratio = match model.spectral_ratio(r) {
        Ok(v) => Some(v),
        Err(Error::UndefinedRatio) => None,
        Err(e) => return Err(e),
    };
    let mut diff_sq = 0.0;
    let mut max_diff = 0.0f64;
    for (a, b) in image.pixels().iter().zip(restored.pixels()) {
        diff_sq += (a - b) * (a - b);
        max_diff = max_diff.max((a - b).abs());
    }
    let norm = x.frobenius_norm();
    let relative_error = if norm > 0.0 {
        diff_sq.sqrt() / norm
    } else {
        0.0
    };

    save_pgm(&restored, out)?;
    let sidecar = sidecar_path(out);
    let mut table = String::from("index,eigenvalue,spectral_ratio\n");
    let total = model.total_variance();
    let mut running = 0.0;
    for (k, value) in model.eigenvalues().iter().enumerate() {
        running += value;
        let cumulative = if total > 0.0 {
            format!("{:.16e}", (running / total).min(1.0))
        } else {
            String::new()
        };
        let _ = writeln!(table, "{},{value:.16e},{cumulative}", k + 1);
    }
    write_file(&sidecar, table)?;

    let mut report = stdout_report();
    (|| {
        report.line("input", input.display().to_string())?;
        report.line("height", image.height().to_string())?;
        report.line("width", image.width().to_string())?;
        report.line("components", r.to_string())?;
        report.line(
            "spectral_ratio",
            ratio.map_or_else(|| "undefined (zero variance)".into(), percent),
        )?;
        report.line("relative_error", num(relative_error))?;
        report.line("max_abs_pixel_error", num(max_diff))?;
        report.line("wrote", out.display().to_string())?;
        report.line("wrote", sidecar.display().to_string())?;
        report.finish()
    })()
    .map_err(stdout_err)
}
