//! Line-oriented `key: value` reports.

use std::io::{self, Write};

/// Ten significant digits, fixed notation where that stays readable.
pub fn num(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..10).contains(&exp) {
        let decimals = (9 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.9e}")
    }
}

pub fn nums(xs: &[f64]) -> String {
    xs.iter().map(|&x| num(x)).collect::<Vec<_>>().join(" ")
}

pub fn percent(ratio: f64) -> String {
    format!("{} ({:.4}%)", num(ratio), 100.0 * ratio)
}

pub struct Report<W: Write> {
    out: W,
}

impl<W: Write> Report<W> {
    pub fn new(out: W) -> Self {
        Self { out }
    }

    pub fn line(&mut self, key: impl AsRef<str>, value: impl AsRef<str>) -> io::Result<()> {
        writeln!(self.out, "{}: {}", key.as_ref(), value.as_ref())
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.out.flush()
    }
}
