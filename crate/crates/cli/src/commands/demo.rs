use pcakit::analysis::best_fit_line;
use pcakit::io::embedded_height_weight;
use pcakit::pca::{center, covariance, mean_vector};
use pcakit::{PcaModel, Result};

use super::{stdout_err, stdout_report};
use crate::report::{num, nums, percent};

pub fn demo_heightweight() -> Result<()> {
    let dataset = embedded_height_weight();
    let x = dataset.data();
    let mu = mean_vector(x);
    let s = covariance(&center(x, &mu)?)?;
    let model = PcaModel::fit(x)?;
    let line = best_fit_line(&model)?;
    let ratio = model.spectral_ratio(1)?;

    let mut report = stdout_report();
    (|| {
        report.line("dataset", dataset.source_label())?;
        report.line("variables", dataset.variable_names().join(", "))?;
        report.line("samples", dataset.sample_count().to_string())?;
        report.line("mean", nums(&mu))?;
        for i in 0..s.rows() {
            report.line(format!("covariance[{}]", i + 1), nums(s.row(i)))?;
        }
        for k in 0..model.variable_count() {
            report.line(
                format!("eigenvalue[{}]", k + 1),
                num(model.eigenvalues()[k]),
            )?;
            report.line(format!("eigenvector[{}]", k + 1), nums(&model.component(k)))?;
        }
        report.line("best_fit_line", format!("{line:.6}"))?;
        report.line("spectral_ratio[1]", percent(ratio))?;
        report.finish()
    })()
    .map_err(stdout_err)
}
