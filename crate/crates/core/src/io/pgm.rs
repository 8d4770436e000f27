//! Netpbm graymap codec: ASCII (`P2`) and binary (`P5`), 8- or 16-bit.

use crate::curves::GrayImage;
use crate::error::{domain, parse, Result};

/// A decoded graymap with its raw samples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pgm {
    pub width: u32,
    pub height: u32,
    pub maxval: u16,
    pub samples: Vec<u16>,
}

impl Pgm {
    /// Samples scaled to `[0, 1]` by `maxval`.
    pub fn to_gray_image(&self) -> Result<GrayImage> {
        let scale = f64::from(self.maxval);
        GrayImage::new(
            self.width,
            self.height,
            self.samples.iter().map(|&s| f64::from(s) / scale).collect(),
        )
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn number(&mut self, what: &str) -> Result<u32> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(parse(format!("PGM: expected {what} at byte {start}")));
        }
        // digits only, so from_utf8 cannot fail
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap_or_default();
        text.parse::<u32>()
            .map_err(|_| parse(format!("PGM: {what} `{text}` is out of range")))
    }
}

pub fn decode_pgm(bytes: &[u8]) -> Result<Pgm> {
    let binary = match bytes.get(..2) {
        Some(b"P2") => false,
        Some(b"P5") => true,
        _ => return Err(parse("PGM: missing P2/P5 magic number")),
    };
    let mut cur = Cursor { bytes, pos: 2 };
    let width = cur.number("width")?;
    let height = cur.number("height")?;
    let maxval = cur.number("maxval")?;
    if width == 0 || height == 0 {
        return Err(parse(format!("PGM: empty image {width}x{height}")));
    }
    if maxval == 0 || maxval > u32::from(u16::MAX) {
        return Err(parse(format!("PGM: maxval {maxval} not in 1..=65535")));
    }
    let maxval = maxval as u16;
    let count = u64::from(width) * u64::from(height);

    let samples = if binary {
        // exactly one whitespace byte separates the header from the raster
        if !bytes.get(cur.pos).is_some_and(u8::is_ascii_whitespace) {
            return Err(parse("PGM: missing whitespace after maxval"));
        }
        cur.pos += 1;
        let wide = maxval > 255;
        let need = count * if wide { 2 } else { 1 };
        let data = &bytes[cur.pos..];
        if (data.len() as u64) < need {
            return Err(parse(format!(
                "PGM: raster truncated, need {need} bytes, have {}",
                data.len()
            )));
        }
        let samples: Vec<u16> = if wide {
            data[..need as usize]
                .chunks_exact(2)
                .map(|c| u16::from_be_bytes([c[0], c[1]]))
                .collect()
        } else {
            data[..need as usize]
                .iter()
                .map(|&b| u16::from(b))
                .collect()
        };
        samples
    } else {
        let mut samples = Vec::with_capacity(count.min(bytes.len() as u64) as usize);
        for i in 0..count {
            let v = cur.number("sample")?;
            if v > u32::from(maxval) {
                return Err(parse(format!(
                    "PGM: sample {i} = {v} exceeds maxval {maxval}"
                )));
            }
            samples.push(v as u16);
        }
        samples
    };
    if let Some((i, v)) = samples.iter().enumerate().find(|(_, &v)| v > maxval) {
        return Err(parse(format!(
            "PGM: sample {i} = {v} exceeds maxval {maxval}"
        )));
    }
    Ok(Pgm {
        width,
        height,
        maxval,
        samples,
    })
}

fn to_byte(v: f64) -> u8 {
    (v * 255.0).round().clamp(0.0, 255.0) as u8
}

/// Binary graymap, maxval 255, sample = `round(255 v)`.
pub fn encode_p5(image: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", image.width(), image.height()).into_bytes();
    out.extend(image.pixels().iter().map(|&v| to_byte(v)));
    out
}

/// ASCII heatmap, maxval 255, sample = `round(255 v / max(v))`. One raster row
/// per line.
pub fn encode_p2_heatmap(values: &[f64], width: u32, height: u32) -> Result<Vec<u8>> {
    if values.len() as u64 != u64::from(width) * u64::from(height) {
        return Err(domain(format!(
            "heatmap needs {width}x{height} values, got {}",
            values.len()
        )));
    }
    if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
        return Err(domain("heatmap values must be finite and nonnegative"));
    }
    let max = values.iter().copied().fold(0.0f64, f64::max);
    let mut out = format!("P2\n{width} {height}\n255\n");
    for row in values.chunks(width as usize) {
        let line: Vec<String> = row
            .iter()
            .map(|&v| {
                let s = if max > 0.0 { to_byte(v / max) } else { 0 };
                s.to_string()
            })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    Ok(out.into_bytes())
}
