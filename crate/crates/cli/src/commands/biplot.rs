use std::path::Path;

use pcakit::analysis::biplot_data;
use pcakit::io::load_csv;
use pcakit::{Orientation, PcaModel, Result};

use super::{ensure_dir, stdout_err, stdout_report};
use crate::report::{num, nums, percent};

pub fn biplot(input: &Path, r: usize, orientation: Orientation, out: &Path) -> Result<()> {
    let dataset = load_csv(input, orientation)?;
    let model = PcaModel::fit(dataset.data())?;
    let biplot = biplot_data(&model, dataset.data(), dataset.variable_names(), r)?;
    let ratio = model.spectral_ratio(r)?;

    ensure_dir(out)?;
    biplot.write_csv(out)?;
    let svg_path = out.join("biplot.svg");
    biplot.write_svg(&svg_path)?;

    let labels = biplot.component_labels();
    let mut report = stdout_report();
    (|| {
        report.line("input", input.display().to_string())?;
        report.line("variables", model.variable_count().to_string())?;
        report.line("samples", model.sample_count().to_string())?;
        report.line("eigenvalues", nums(model.eigenvalues()))?;
        report.line(format!("spectral_ratio[{r}]"), percent(ratio))?;
        report.line("loading_columns", labels.join(" "))?;
        for (i, name) in biplot.variable_names.iter().enumerate() {
            report.line(format!("loading[{name}]"), nums(biplot.loadings.row(i)))?;
        }
        for (label, (lo, hi)) in labels.iter().zip(biplot.score_ranges()) {
            report.line(
                format!("score_range[{label}]"),
                format!("{} {}", num(lo), num(hi)),
            )?;
        }
        for (label, (lo, hi)) in labels.iter().zip(biplot.loading_ranges()) {
            report.line(
                format!("loading_range[{label}]"),
                format!("{} {}", num(lo), num(hi)),
            )?;
        }
        for file in ["scores.csv", "loadings.csv"] {
            report.line("wrote", out.join(file).display().to_string())?;
        }
        report.line("wrote", svg_path.display().to_string())?;
        report.finish()
    })()
    .map_err(stdout_err)
}
