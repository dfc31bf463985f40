use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use pcakit::analysis::{cluster_representative, kmeans_restarts, matched_accuracy};
use pcakit::io::{default_templates, format_value, synthesize_spikes_with_jitter};
use pcakit::{PcaModel, Result};

use super::{ensure_dir, stdout_err, stdout_report, write_file};
use crate::report::{num, nums, percent};

pub struct SpikeArgs {
    pub k: usize,
    pub seed: u64,
    pub noise: f64,
    pub jitter: f64,
    pub counts: Vec<usize>,
    pub components: usize,
    pub restarts: usize,
    pub out: PathBuf,
}

pub fn spikes(args: &SpikeArgs) -> Result<()> {
    let templates = default_templates();
    let set = synthesize_spikes_with_jitter(
        &templates,
        &args.counts,
        args.noise,
        args.jitter,
        args.seed,
    )?;
    let model = PcaModel::fit(&set.waveforms)?;
    let r = args.components;
    let scores = model.project(&set.waveforms, r)?;
    let clustering = kmeans_restarts(scores.coords(), args.k, args.seed, args.restarts)?;
    let accuracy = matched_accuracy(&clustering.assignments, &set.labels);
    let ratio = model.spectral_ratio(r)?;
    let representatives = (0..args.k)
        .map(|c| cluster_representative(&model, &clustering.centroids.column(c)))
        .collect::<Result<Vec<_>>>()?;

    let out: &Path = &args.out;
    ensure_dir(out)?;
    let scores_path = out.join("spike_scores.csv");
    let mut table = String::new();
    for k in 1..=r {
        let _ = write!(table, "PC{k},");
    }
    table.push_str("cluster,template\n");
    for j in 0..scores.sample_count() {
        for k in 0..r {
            let _ = write!(table, "{},", format_value(scores.coords()[(k, j)]));
        }
        let _ = writeln!(table, "{},{}", clustering.assignments[j], set.labels[j]);
    }
    write_file(&scores_path, table)?;

    let reps_path = out.join("representatives.csv");
    let mut table = String::from("sample");
    for c in 1..=args.k {
        let _ = write!(table, ",cluster{c}");
    }
    table.push('\n');
    for i in 0..model.variable_count() {
        let _ = write!(table, "{i}");
        for rep in &representatives {
            let _ = write!(table, ",{}", format_value(rep[i]));
        }
        table.push('\n');
    }
    write_file(&reps_path, table)?;

    let eigenvalues = model.eigenvalues();
    let mut report = stdout_report();
    (|| {
        report.line("spikes", set.labels.len().to_string())?;
        report.line("samples_per_spike", model.variable_count().to_string())?;
        report.line("templates", templates.len().to_string())?;
        report.line("noise_sd", num(args.noise))?;
        report.line("amplitude_jitter", num(args.jitter))?;
        report.line("seed", args.seed.to_string())?;
        report.line(
            "leading_eigenvalues",
            nums(&eigenvalues[..eigenvalues.len().min(5)]),
        )?;
        if eigenvalues.len() >= 3 && eigenvalues[2] > 0.0 {
            report.line(
                "eigenvalue_ratio[2/3]",
                num(eigenvalues[1] / eigenvalues[2]),
            )?;
        }
        report.line(format!("spectral_ratio[{r}]"), percent(ratio))?;
        report.line("clusters", args.k.to_string())?;
        report.line(
            "cluster_sizes",
            clustering
                .cluster_sizes()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        )?;
        for c in 0..args.k {
            report.line(
                format!("centroid[{}]", c + 1),
                nums(&clustering.centroids.column(c)),
            )?;
        }
        report.line("inertia", num(clustering.inertia))?;
        report.line("accuracy", num(accuracy))?;
        report.line("wrote", scores_path.display().to_string())?;
        report.line("wrote", reps_path.display().to_string())?;
        report.finish()
    })()
    .map_err(stdout_err)
}
