mod biplot;
mod compress;
mod demo;
mod fit;
mod spikes;

use std::fs;
use std::io::{self, StdoutLock};
use std::path::Path;

use pcakit::{Error, Result};

use crate::report::Report;

pub use biplot::biplot;
pub use compress::compress;
pub use demo::demo_heightweight;
pub use fit::fit;
pub use spikes::{spikes, SpikeArgs};

fn stdout_report() -> Report<StdoutLock<'static>> {
    Report::new(io::stdout().lock())
}

fn stdout_err(source: io::Error) -> Error {
    Error::Io {
        path: "<stdout>".into(),
        source,
    }
}

fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|source| Error::Io {
        path: dir.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, contents: impl AsRef<[u8]>) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
