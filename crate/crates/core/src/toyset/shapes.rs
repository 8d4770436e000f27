use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::curves::GrayImage;
use crate::error::{domain, parse, Error, Result};

pub const RESOLUTIONS: [u32; 3] = [32, 64, 128];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Circle,
    Square,
    Triangle,
}

impl Shape {
    pub const ALL: [Shape; 3] = [Shape::Circle, Shape::Square, Shape::Triangle];

    pub fn name(self) -> &'static str {
        match self {
            Shape::Circle => "circle",
            Shape::Square => "square",
            Shape::Triangle => "triangle",
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "circle" => Ok(Shape::Circle),
            "square" => Ok(Shape::Square),
            "triangle" => Ok(Shape::Triangle),
            other => Err(parse(format!(
                "unknown shape `{other}` (circle, square, triangle)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    Large,
    Small,
}

impl Scale {
    /// Object extent as a fraction of the image side.
    pub fn extent(self) -> f64 {
        match self {
            Scale::Large => 0.8,
            Scale::Small => 0.3,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Scale::Large => 'L',
            Scale::Small => 'S',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ShapeSpec {
    pub shape: Shape,
    pub scale: Scale,
    pub resolution: u32,
}

impl ShapeSpec {
    pub fn new(shape: Shape, scale: Scale, resolution: u32) -> Result<Self> {
        if !RESOLUTIONS.contains(&resolution) {
            return Err(domain(format!(
                "resolution must be one of {RESOLUTIONS:?}, got {resolution}"
            )));
        }
        Ok(ShapeSpec {
            shape,
            scale,
            resolution,
        })
    }

    /// The 18 dataset entries, shape-major.
    pub fn all() -> Vec<ShapeSpec> {
        let mut out = Vec::with_capacity(18);
        for shape in Shape::ALL {
            for scale in [Scale::Large, Scale::Small] {
                for resolution in RESOLUTIONS {
                    out.push(ShapeSpec {
                        shape,
                        scale,
                        resolution,
                    });
                }
            }
        }
        out
    }

    /// Scale-and-resolution label such as `L32` or `S128`.
    pub fn label(&self) -> String {
        format!("{}{}", self.scale.letter(), self.resolution)
    }

    pub fn file_name(&self) -> String {
        format!("{}_{}.pgm", self.shape, self.label())
    }
}

impl fmt::Display for ShapeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.shape, self.label())
    }
}

/// Binary rendering (foreground 1, background 0) of a centered shape whose
/// extent is `0.8 * res` (large) or `0.3 * res` (small). A pixel is foreground
/// when its center lies inside the shape.
pub fn generate_shape(spec: ShapeSpec) -> GrayImage {
    let res = spec.resolution;
    let side = f64::from(res);
    let c = side / 2.0;
    let extent = spec.scale.extent() * side;
    let half = extent / 2.0;

    let square = {
        let s = extent.round() as u32;
        let start = (res - s) / 2;
        start..start + s
    };

    let inside = |x: u32, y: u32| -> bool {
        let (px, py) = (f64::from(x) + 0.5, f64::from(y) + 0.5);
        match spec.shape {
            Shape::Circle => (px - c).powi(2) + (py - c).powi(2) <= half * half,
            Shape::Square => square.contains(&x) && square.contains(&y),
            Shape::Triangle => {
                // apex on top (row c - half), base on row c + half
                let top = c - half;
                py >= top && py <= c + half && (px - c).abs() <= (py - top) / 2.0
            }
        }
    };

    let pixels = (0..res)
        .flat_map(|y| (0..res).map(move |x| (x, y)))
        .map(|(x, y)| if inside(x, y) { 1.0 } else { 0.0 })
        .collect();
    GrayImage::new(res, res, pixels).expect("binary raster of matching size")
}
