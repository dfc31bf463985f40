use std::path::Path;

use pcakit::io::{load_csv, write_matrix_csv};
use pcakit::{Orientation, PcaModel, Result};

use super::{ensure_dir, stdout_err, stdout_report};
use crate::report::{num, nums, percent};

pub fn fit(
    input: &Path,
    components: Option<usize>,
    orientation: Orientation,
    out: &Path,
) -> Result<()> {
    let dataset = load_csv(input, orientation)?;
    let model = PcaModel::fit(dataset.data())?;
    let m = model.variable_count();
    let r = components.unwrap_or(m);
    let scores = model.project(dataset.data(), r)?;
    let ratios = (1..=m)
        .map(|k| model.spectral_ratio(k))
        .collect::<Result<Vec<_>>>()?;

    ensure_dir(out)?;
    let labels: Vec<String> = (1..=m).map(|k| format!("PC{k}")).collect();
    let components_path = out.join("components.csv");
    let scores_path = out.join("scores.csv");
    write_matrix_csv(model.components(), Some(&labels), &components_path)?;
    write_matrix_csv(scores.coords(), None::<&[&str]>, &scores_path)?;

    let mut report = stdout_report();
    (|| {
        report.line("input", input.display().to_string())?;
        report.line("variables", m.to_string())?;
        report.line("samples", model.sample_count().to_string())?;
        report.line("variable_names", dataset.variable_names().join(", "))?;
        report.line("mean", nums(model.mean()))?;
        report.line("total_variance", num(model.total_variance()))?;
        for (k, value) in model.eigenvalues().iter().enumerate() {
            report.line(format!("eigenvalue[{}]", k + 1), num(*value))?;
        }
        for (k, ratio) in ratios.iter().enumerate() {
            report.line(format!("spectral_ratio[{}]", k + 1), percent(*ratio))?;
        }
        report.line("components_kept", r.to_string())?;
        report.line("wrote", components_path.display().to_string())?;
        report.line("wrote", scores_path.display().to_string())?;
        report.finish()
    })()
    .map_err(stdout_err)
}
