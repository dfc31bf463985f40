//! `pcakit`: batch front end for fitting, biplots, image compression and
//! the spike-sorting demo.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pcakit::{ErrorKind, Orientation};

#[derive(Debug, Parser)]
#[command(
    name = "pcakit",
    version,
    about = "Principal component analysis toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fit a PCA model to a CSV table and report eigenvalues and retained variance.
    Fit {
        input: PathBuf,
        /// Components to keep in scores.csv (default: all).
        #[arg(short = 'r', long = "components")]
        components: Option<usize>,
        #[arg(long, default_value = "samples", value_parser = parse_orientation)]
        orientation: Orientation,
        /// Directory for components.csv and scores.csv.
        #[arg(short = 'o', long = "out", default_value = ".")]
        out: PathBuf,
    },
    /// Walk through the embedded 30-person height/weight example.
    DemoHeightweight,
    /// Compress a PGM image by keeping its leading principal components.
    Compress {
        input: PathBuf,
        #[arg(short = 'r', long = "components")]
        components: usize,
        /// Output PGM; the eigenvalue table goes next to it.
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Export biplot scores, loadings and an SVG for a CSV table.
    Biplot {
        input: PathBuf,
        #[arg(short = 'r', long = "components", default_value_t = 2)]
        components: usize,
        #[arg(long, default_value = "samples", value_parser = parse_orientation)]
        orientation: Orientation,
        #[arg(short = 'o', long = "out", default_value = ".")]
        out: PathBuf,
    },
    /// Generate synthetic spikes, project them and cluster in score space.
    Spikes {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Noise standard deviation (microvolts).
        #[arg(long, default_value_t = 5.0)]
        noise: f64,
        /// Relative per-spike amplitude standard deviation.
        #[arg(long, default_value_t = 0.15)]
        jitter: f64,
        /// Spikes per template, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [1000usize, 1000])]
        counts: Vec<usize>,
        #[arg(short = 'r', long = "components", default_value_t = 2)]
        components: usize,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        #[arg(short = 'o', long = "out", default_value = ".")]
        out: PathBuf,
    },
}

/// 2 usage, 3 data/format, 4 numeric.
fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Usage => 2,
        ErrorKind::Data => 3,
        ErrorKind::Numeric => 4,
    }
}

fn parse_orientation(s: &str) -> Result<Orientation, String> {
    s.parse().map_err(|e: pcakit::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, result) = match cli.command {
        Command::Fit {
            input,
            components,
            orientation,
            out,
        } => ("fit", commands::fit(&input, components, orientation, &out)),
        Command::DemoHeightweight => ("demo-heightweight", commands::demo_heightweight()),
        Command::Compress {
            input,
            components,
            out,
        } => ("compress", commands::compress(&input, components, &out)),
        Command::Biplot {
            input,
            components,
            orientation,
            out,
        } => (
            "biplot",
            commands::biplot(&input, components, orientation, &out),
        ),
        Command::Spikes {
            k,
            seed,
            noise,
            jitter,
            counts,
            components,
            restarts,
            out,
        } => (
            "spikes",
            commands::spikes(&commands::SpikeArgs {
                k,
                seed,
                noise,
                jitter,
                counts,
                components,
                restarts,
                out,
            }),
        ),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("pcakit {name}: {err}");
            ExitCode::from(exit_code(err.kind()))
        }
    }
}
