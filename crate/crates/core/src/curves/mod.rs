//! Space-filling curve codecs and the materialized [`CurveMap`].
//!
//! Three square-grid families are supported through exact index codecs
//! (`*_d2xy` / `*_xy2d`): Hilbert, Morton (Z-order) and Zigzag (raster).
//! Arbitrary `W x H` rectangles are covered by the generalized Hilbert
//! traversal in [`generalized_hilbert`].
//!
//! Coordinates are integer cells with `x` the column and `y` the row. A cell
//! `(x, y)` of an order-`n` grid embeds in the unit square at its center,
//! `((x + 0.5) / 2^n, (y + 0.5) / 2^n)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{config, domain, parse, Error, Result};

mod gilbert;
mod hilbert;
mod image;
mod map;
mod morton;
mod zigzag;

pub use gilbert::generalized_hilbert;
pub use hilbert::{hilbert_d2xy, hilbert_xy2d};
pub use image::GrayImage;
pub use map::{build_map, flatten, fold, patch_order, CurveMap, MAX_MAP_CELLS};
pub use morton::{morton_d2xy, morton_xy2d};
pub use zigzag::{zigzag_d2xy, zigzag_xy2d};

/// Largest supported order. `4^31` still fits a `u64` index.
pub const MAX_ORDER: u32 = 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    Hilbert,
    Morton,
    Zigzag,
    #[serde(rename = "ghilbert")]
    GeneralizedHilbert,
}

impl CurveKind {
    pub const SQUARE: [CurveKind; 3] = [CurveKind::Hilbert, CurveKind::Morton, CurveKind::Zigzag];

    pub fn name(self) -> &'static str {
        match self {
            CurveKind::Hilbert => "hilbert",
            CurveKind::Morton => "morton",
            CurveKind::Zigzag => "zigzag",
            CurveKind::GeneralizedHilbert => "ghilbert",
        }
    }

    /// Column label used in tables: `hf`, `mf`, `zf`, `ghf`.
    pub fn short_label(self) -> &'static str {
        match self {
            CurveKind::Hilbert => "hf",
            CurveKind::Morton => "mf",
            CurveKind::Zigzag => "zf",
            CurveKind::GeneralizedHilbert => "ghf",
        }
    }

    /// Whether the curve only exists on `2^n x 2^n` grids.
    pub fn requires_square_power_of_two(self) -> bool {
        !matches!(self, CurveKind::GeneralizedHilbert)
    }

    /// Curves whose consecutive cells are always 4-adjacent.
    pub fn is_continuous(self) -> bool {
        matches!(self, CurveKind::Hilbert | CurveKind::GeneralizedHilbert)
    }

    /// Index → cell through the exact codec of a square-grid curve.
    pub fn d2xy(self, order: u32, d: u64) -> Result<GridPoint> {
        match self {
            CurveKind::Hilbert => hilbert_d2xy(order, d),
            CurveKind::Morton => morton_d2xy(order, d),
            CurveKind::Zigzag => zigzag_d2xy(order, d),
            CurveKind::GeneralizedHilbert => Err(no_codec()),
        }
    }

    /// Cell → index through the exact codec of a square-grid curve.
    pub fn xy2d(self, order: u32, p: GridPoint) -> Result<u64> {
        match self {
            CurveKind::Hilbert => hilbert_xy2d(order, p),
            CurveKind::Morton => morton_xy2d(order, p),
            CurveKind::Zigzag => zigzag_xy2d(order, p),
            CurveKind::GeneralizedHilbert => Err(no_codec()),
        }
    }
}

fn no_codec() -> Error {
    config(
        "ghilbert has no closed-form order-n codec; use a square curve (hilbert, morton, zigzag)",
    )
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CurveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "hilbert" | "hf" => Ok(CurveKind::Hilbert),
            "morton" | "mf" | "zorder" | "z-order" => Ok(CurveKind::Morton),
            "zigzag" | "zf" | "raster" => Ok(CurveKind::Zigzag),
            "ghilbert" | "ghf" | "generalized-hilbert" => Ok(CurveKind::GeneralizedHilbert),
            other => Err(parse(format!(
                "unknown curve `{other}` (expected hilbert, morton, zigzag or ghilbert)"
            ))),
        }
    }
}

/// Integer cell coordinate; `x` is the column, `y` the row.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct GridPoint {
    pub x: u32,
    pub y: u32,
}

impl GridPoint {
    pub const fn new(x: u32, y: u32) -> Self {
        GridPoint { x, y }
    }

    pub fn manhattan(self, other: GridPoint) -> u64 {
        u64::from(self.x.abs_diff(other.x)) + u64::from(self.y.abs_diff(other.y))
    }

    /// Squared Euclidean distance in cell units.
    pub fn dist2(self, other: GridPoint) -> u64 {
        let dx = u64::from(self.x.abs_diff(other.x));
        let dy = u64::from(self.y.abs_diff(other.y));
        dx * dx + dy * dy
    }

    pub fn dist(self, other: GridPoint) -> f64 {
        (self.dist2(other) as f64).sqrt()
    }

    /// Cell center in the unit square of an order-`n` grid.
    pub fn unit_center(self, order: u32) -> (f64, f64) {
        let side = (1u64 << order) as f64;
        (
            (f64::from(self.x) + 0.5) / side,
            (f64::from(self.y) + 0.5) / side,
        )
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

pub(crate) fn check_order(order: u32) -> Result<()> {
    if order == 0 || order > MAX_ORDER {
        return Err(domain(format!(
            "order must satisfy 1 <= n <= {MAX_ORDER}, got {order}"
        )));
    }
    Ok(())
}

pub(crate) fn check_index(order: u32, d: u64) -> Result<()> {
    check_order(order)?;
    let len = 1u64 << (2 * order);
    if d >= len {
        return Err(domain(format!(
            "index {d} out of range: must be < 4^{order} = {len}"
        )));
    }
    Ok(())
}

pub(crate) fn check_point(order: u32, p: GridPoint) -> Result<()> {
    check_order(order)?;
    let side = 1u64 << order;
    if u64::from(p.x) >= side || u64::from(p.y) >= side {
        return Err(domain(format!(
            "cell {p} outside the {side}x{side} grid of order {order}"
        )));
    }
    Ok(())
}

/// Returns `n` when `width == height == 2^n` with `n >= 1`.
pub fn square_order(width: u32, height: u32) -> Option<u32> {
    (width == height && width >= 2 && width.is_power_of_two()).then(|| width.trailing_zeros())
}
