//! Rendering a sequence as a color fringe pattern: one vertical stripe per
//! code, colored through an RGB alphabet, written as a binary portable
//! pixmap (P6).

use crate::error::{Error, Result};
use crate::types::{Alphabet, Code, Label};

/// The seven binary RGB combinations with black removed, in the order
/// (0,0,1), (0,1,0), (0,1,1), (1,0,0), (1,0,1), (1,1,0), (1,1,1);
/// binary 1 renders as channel value 255.
pub fn standard_rgb_alphabet() -> Alphabet {
    let labels = (1u8..8)
        .map(|bits| {
            // bits = 4r + 2g + b
            Label::Rgb([
                if bits & 0b100 != 0 { 255 } else { 0 },
                if bits & 0b010 != 0 { 255 } else { 0 },
                if bits & 0b001 != 0 { 255 } else { 0 },
            ])
        })
        .collect();
    Alphabet::new(labels)
}

/// Geometry and colors of a fringe pattern.
#[derive(Debug, Clone)]
pub struct FringeSpec {
    pub fringe_width: usize,
    pub height: usize,
    pub alphabet: Alphabet,
}

impl FringeSpec {
    /// Width 4, height 64, the standard 7-color set.
    pub fn default_rgb() -> Self {
        FringeSpec {
            fringe_width: 4,
            height: 64,
            alphabet: standard_rgb_alphabet(),
        }
    }
}

/// An 8-bit RGB raster, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    pub width: usize,
    pub height: usize,
    pub pixels: Vec<u8>, // 3 bytes per pixel
}

impl Image {
    pub fn pixel(&self, x: usize, y: usize) -> [u8; 3] {
        let i = (y * self.width + x) * 3;
        [self.pixels[i], self.pixels[i + 1], self.pixels[i + 2]]
    }

    /// Serializes as binary portable pixmap: "P6\n<w> <h>\n255\n" + RGB bytes.
    pub fn to_ppm(&self) -> Vec<u8> {
        let mut out = format!("P6\n{} {}\n255\n", self.width, self.height).into_bytes();
        out.extend_from_slice(&self.pixels);
        out
    }

    /// Parses a P6 pixmap produced by [`Image::to_ppm`].
    pub fn from_ppm(data: &[u8]) -> Option<Image> {
        let mut fields = Vec::new();
        let mut pos = 0;
        while fields.len() < 4 && pos < data.len() {
            while pos < data.len() && data[pos].is_ascii_whitespace() {
                pos += 1;
            }
            let start = pos;
            while pos < data.len() && !data[pos].is_ascii_whitespace() {
                pos += 1;
            }
            fields.push(&data[start..pos]);
        }
        pos += 1; // single whitespace after maxval
        if fields.len() != 4 || fields[0] != b"P6" || fields[3] != b"255" {
            return None;
        }
        let width: usize = std::str::from_utf8(fields[1]).ok()?.parse().ok()?;
        let height: usize = std::str::from_utf8(fields[2]).ok()?.parse().ok()?;
        let pixels = data.get(pos..)?.to_vec();
        if pixels.len() != width * height * 3 {
            return None;
        }
        Some(Image {
            width,
            height,
            pixels,
        })
    }
}

/// Renders codes left to right, one fringe of `spec.fringe_width` columns per
/// code, uniform over all rows.
pub fn render(codes: &[Code], spec: &FringeSpec) -> Result<Image> {
    assert!(spec.fringe_width >= 1 && spec.height >= 1);
    let k = spec.alphabet.size();
    let mut colors = Vec::with_capacity(codes.len());
    for &c in codes {
        match spec.alphabet.rgb(c) {
            Some(rgb) => colors.push(rgb),
            None => return Err(Error::CodeOutOfRange { code: c, k }),
        }
    }
    let width = codes.len() * spec.fringe_width;
    let mut row = Vec::with_capacity(width * 3);
    for rgb in &colors {
        for _ in 0..spec.fringe_width {
            row.extend_from_slice(rgb);
        }
    }
    let mut pixels = Vec::with_capacity(width * spec.height * 3);
    for _ in 0..spec.height {
        pixels.extend_from_slice(&row);
    }
    Ok(Image {
        width,
        height: spec.height,
        pixels,
    })
}

/// Recovers the code sequence from a rendered image by sampling one pixel
/// column per fringe and inverse-mapping colors.
pub fn sample_codes(img: &Image, spec: &FringeSpec) -> Result<Vec<Code>> {
    assert_eq!(img.width % spec.fringe_width, 0);
    let count = img.width / spec.fringe_width;
    let mut codes = Vec::with_capacity(count);
    for i in 0..count {
        let rgb = img.pixel(i * spec.fringe_width, 0);
        match spec.alphabet.code_of_rgb(rgb) {
            Some(c) => codes.push(c),
            None => {
                return Err(Error::WindowNotFound {
                    window: rgb.iter().map(|&v| v as Code).collect(),
                })
            }
        }
    }
    Ok(codes)
}
