//! Greyscale images in the Netpbm PGM format (`P2` ASCII, `P5` binary).
//!
//! Loading accepts `maxval <= 255` and `#` comments anywhere in the header.
//! Pixel values are kept as stored, without rescaling to 255. Saving always
//! writes `P5` with `maxval 255`, rounding half away from zero and clamping.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// `height x width` intensities in `[0, 255]`, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GrayImage {
    height: usize,
    width: usize,
    pixels: Vec<f64>,
}

impl GrayImage {
    pub fn new(height: usize, width: usize, pixels: Vec<f64>) -> Result<Self> {
        if height == 0 || width == 0 || pixels.len() != height * width {
            return Err(Error::shape(
                "GrayImage::new",
                format!("{height}x{width} image with {} pixels", pixels.len()),
            ));
        }
        if let Some(bad) = pixels.iter().find(|p| !(0.0..=255.0).contains(*p)) {
            return Err(Error::Argument(format!(
                "pixel value {bad} outside [0, 255]"
            )));
        }
        Ok(Self {
            height,
            width,
            pixels,
        })
    }

    /// Rounds (half away from zero) and clamps every entry into `[0, 255]`.
    pub fn from_matrix_rounded(m: &Matrix) -> Self {
        Self {
            height: m.rows(),
            width: m.cols(),
            pixels: m.as_slice().iter().map(|&v| quantize(v) as f64).collect(),
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pixels(&self) -> &[f64] {
        &self.pixels
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.pixels[row * self.width + col]
    }

    /// The image as an `height x width` data matrix (rows are variables).
    pub fn to_matrix(&self) -> Matrix {
        Matrix::new(self.height, self.width, self.pixels.clone())
            .expect("image invariants guarantee a valid matrix")
    }
}

fn quantize(v: f64) -> u8 {
    v.round().clamp(0.0, 255.0) as u8
}

pub fn load_pgm(path: impl AsRef<Path>) -> Result<GrayImage> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    decode_pgm(&bytes, &path.display().to_string())
}

pub fn save_pgm(image: &GrayImage, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, encode_pgm(image)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Binary `P5` encoding with `maxval 255`.
pub fn encode_pgm(image: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", image.width, image.height).into_bytes();
    out.extend(image.pixels.iter().map(|&p| quantize(p)));
    out
}

/// `P2` encoding, one image row per line. Mostly useful for tests.
pub fn encode_pgm_ascii(image: &GrayImage) -> Vec<u8> {
    let mut out = format!("P2\n{} {}\n255\n", image.width, image.height);
    for row in image.pixels.chunks(image.width) {
        let line: Vec<String> = row.iter().map(|&p| quantize(p).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out.into_bytes()
}

struct Header<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Header<'a> {
    fn skip_space_and_comments(&mut self) {
        while self.pos < self.bytes.len() {
            match self.bytes[self.pos] {
                b'#' => {
                    while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                b if b.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn token(&mut self) -> Option<&'a [u8]> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.pos < self.bytes.len() && !self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.bytes[start..self.pos])
    }

    fn number(&mut self, what: &str) -> std::result::Result<usize, String> {
        let tok = self
            .token()
            .ok_or_else(|| format!("truncated header: missing {what}"))?;
        std::str::from_utf8(tok)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| format!("{what} `{}` is not a number", String::from_utf8_lossy(tok)))
    }
}

/// Parses `P2` or `P5` bytes; `label` names the source in errors.
pub fn decode_pgm(bytes: &[u8], label: &str) -> Result<GrayImage> {
    decode(bytes).map_err(|message| Error::Format {
        path: label.to_string(),
        message,
    })
}

fn decode(bytes: &[u8]) -> std::result::Result<GrayImage, String> {
    let binary = match bytes.get(..2) {
        Some(b"P2") => false,
        Some(b"P5") => true,
        _ => {
            let shown = String::from_utf8_lossy(&bytes[..bytes.len().min(2)]).into_owned();
            return Err(format!("bad magic `{shown}`, expected P2 or P5"));
        }
    };
    let mut header = Header { bytes, pos: 2 };
    let width = header.number("width")?;
    let height = header.number("height")?;
    let maxval = header.number("maxval")?;
    if width == 0 || height == 0 {
        return Err(format!("empty image {width}x{height}"));
    }
    if maxval == 0 || maxval > 255 {
        return Err(format!("maxval {maxval} not in 1..=255"));
    }
    let count = width * height;
    let check = |v: usize| {
        if v > maxval {
            Err(format!("pixel value {v} exceeds maxval {maxval}"))
        } else {
            Ok(v as f64)
        }
    };

    let pixels = if binary {
        // exactly one whitespace byte separates maxval from the raster
        let start = header.pos + 1;
        let raster = bytes.get(start..).unwrap_or(&[]);
        if raster.len() < count {
            return Err(format!(
                "truncated payload: expected {count} bytes, found {}",
                raster.len()
            ));
        }
        raster[..count]
            .iter()
            .map(|&b| check(b as usize))
            .collect::<std::result::Result<Vec<_>, _>>()?
    } else {
        let mut pixels = Vec::with_capacity(count);
        for i in 0..count {
            let tok = header
                .token()
                .ok_or_else(|| format!("truncated payload: expected {count} pixels, found {i}"))?;
            let value = std::str::from_utf8(tok)
                .ok()
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or_else(|| {
                    format!(
                        "pixel {i}: `{}` is not a number",
                        String::from_utf8_lossy(tok)
                    )
                })?;
            pixels.push(check(value)?);
        }
        pixels
    };
    Ok(GrayImage {
        height,
        width,
        pixels,
    })
}
