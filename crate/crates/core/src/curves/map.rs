use std::io::Write;

use super::{gilbert, square_order, CurveKind, GrayImage, GridPoint};
use crate::error::{config, domain, Error, Result};

/// Upper bound on materialized map size (4096 x 4096 cells).
pub const MAX_MAP_CELLS: u64 = 1 << 24;

/// A validated bijection between sequence indices and grid cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveMap {
    kind: CurveKind,
    width: u32,
    height: u32,
    forward: Vec<GridPoint>,
    // row-major cell -> sequence index
    inverse: Vec<u64>,
}

/// Materializes the map for `kind` on a `width x height` grid and checks its
/// invariants before returning it.
pub fn build_map(kind: CurveKind, width: u32, height: u32) -> Result<CurveMap> {
    if width == 0 || height == 0 {
        return Err(domain(format!(
            "grid dimensions must be >= 1, got {width}x{height}"
        )));
    }
    let cells = u64::from(width) * u64::from(height);
    if cells > MAX_MAP_CELLS {
        return Err(config(format!(
            "{width}x{height} grid has {cells} cells; materialized maps are limited to {MAX_MAP_CELLS}"
        )));
    }
    if kind == CurveKind::GeneralizedHilbert {
        return gilbert::generalized_hilbert(width, height);
    }
    let order = square_order(width, height).ok_or_else(|| {
        config(format!(
            "{kind} needs a square power-of-two grid (2^n x 2^n, n >= 1), got {width}x{height}; use --curve ghilbert for arbitrary rectangles"
        ))
    })?;

    let forward = (0..cells)
        .map(|d| kind.d2xy(order, d))
        .collect::<Result<Vec<_>>>()?;
    let map = CurveMap::from_path(kind, width, height, forward)?;
    for (d, &p) in map.forward.iter().enumerate() {
        let back = kind.xy2d(order, p)?;
        if back != d as u64 {
            return Err(Error::Internal(format!(
                "{kind} codec mismatch: xy2d(d2xy({d})) = {back}"
            )));
        }
    }
    Ok(map)
}

impl CurveMap {
    /// Builds the map for a `2^order x 2^order` grid.
    pub fn square(kind: CurveKind, order: u32) -> Result<Self> {
        super::check_order(order)?;
        if order > 12 {
            return Err(config(format!(
                "order {order} exceeds the materialized map limit (order <= 12)"
            )));
        }
        build_map(kind, 1 << order, 1 << order)
    }

    /// Wraps an explicit visiting order, checking the bijection and, for the
    /// Hilbert family and Zigzag, their structural invariants.
    pub(crate) fn from_path(
        kind: CurveKind,
        width: u32,
        height: u32,
        forward: Vec<GridPoint>,
    ) -> Result<Self> {
        let cells = width as usize * height as usize;
        if forward.len() != cells {
            return Err(Error::Internal(format!(
                "{kind} path has {} cells, grid has {cells}",
                forward.len()
            )));
        }
        let mut inverse = vec![u64::MAX; cells];
        for (d, p) in forward.iter().enumerate() {
            if p.x >= width || p.y >= height {
                return Err(Error::Internal(format!(
                    "{kind} index {d} maps outside the grid: {p}"
                )));
            }
            let slot = &mut inverse[p.y as usize * width as usize + p.x as usize];
            if *slot != u64::MAX {
                return Err(Error::Internal(format!(
                    "{kind} visits {p} twice (indices {} and {d})",
                    *slot
                )));
            }
            *slot = d as u64;
        }
        if kind.is_continuous() {
            if let Some(d) = forward.windows(2).position(|w| w[0].manhattan(w[1]) != 1) {
                return Err(Error::Internal(format!(
                    "{kind} step {d} -> {} is not 4-adjacent: {} -> {}",
                    d + 1,
                    forward[d],
                    forward[d + 1]
                )));
            }
        }
        if kind == CurveKind::Zigzag {
            let w = width as usize;
            if let Some(d) = forward
                .iter()
                .enumerate()
                .position(|(d, p)| p.x as usize != d % w || p.y as usize != d / w)
            {
                return Err(Error::Internal(format!(
                    "zigzag index {d} is not raster order"
                )));
            }
        }
        Ok(CurveMap {
            kind,
            width,
            height,
            forward,
            inverse,
        })
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// `Some(n)` for a `2^n x 2^n` grid.
    pub fn order(&self) -> Option<u32> {
        square_order(self.width, self.height)
    }

    pub fn forward(&self) -> &[GridPoint] {
        &self.forward
    }

    pub fn point(&self, d: usize) -> GridPoint {
        self.forward[d]
    }

    pub fn index_of(&self, p: GridPoint) -> Result<u64> {
        if p.x >= self.width || p.y >= self.height {
            return Err(domain(format!(
                "cell {p} outside the {}x{} grid",
                self.width, self.height
            )));
        }
        Ok(self.inverse[self.raster(p)])
    }

    /// Row-major index of a cell.
    pub fn raster(&self, p: GridPoint) -> usize {
        p.y as usize * self.width as usize + p.x as usize
    }

    fn check_len(&self, len: usize, what: &str) -> Result<()> {
        if len != self.len() {
            return Err(domain(format!(
                "{what} has length {len}, but the {}x{} map has {} cells",
                self.width,
                self.height,
                self.len()
            )));
        }
        Ok(())
    }

    /// Reorders a row-major raster into sequence order.
    pub fn flatten_values<T: Copy>(&self, raster: &[T]) -> Result<Vec<T>> {
        self.check_len(raster.len(), "raster")?;
        Ok(self
            .forward
            .iter()
            .map(|&p| raster[self.raster(p)])
            .collect())
    }

    /// Scatters a sequence back into a row-major raster.
    pub fn fold_values<T: Copy>(&self, sequence: &[T]) -> Result<Vec<T>> {
        self.check_len(sequence.len(), "sequence")?;
        Ok(self.inverse.iter().map(|&d| sequence[d as usize]).collect())
    }

    /// Writes the `d,x,y` table, one row per index.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut wtr = crate::io::csv_writer(out);
        wtr.write_record(["d", "x", "y"])?;
        for (d, p) in self.forward.iter().enumerate() {
            wtr.write_record([d.to_string(), p.x.to_string(), p.y.to_string()])?;
        }
        wtr.flush()?;
        Ok(())
    }
}

pub fn flatten(image: &GrayImage, map: &CurveMap) -> Result<Vec<f64>> {
    if image.width() != map.width() || image.height() != map.height() {
        return Err(domain(format!(
            "image is {}x{} but the map is {}x{}",
            image.width(),
            image.height(),
            map.width(),
            map.height()
        )));
    }
    map.flatten_values(image.pixels())
}

pub fn fold(sequence: &[f64], map: &CurveMap) -> Result<GrayImage> {
    let raster = map.fold_values(sequence)?;
    GrayImage::new(map.width(), map.height(), raster)
}

/// Token-slot permutation for a `grid_w x grid_h` patch grid: slot `k` takes
/// the patch at raster index `perm[k]`, following the Hilbert traversal.
pub fn patch_order(grid_w: u32, grid_h: u32) -> Result<Vec<u64>> {
    let kind = if square_order(grid_w, grid_h).is_some() {
        CurveKind::Hilbert
    } else {
        CurveKind::GeneralizedHilbert
    };
    let map = build_map(kind, grid_w, grid_h)?;
    Ok(map
        .forward()
        .iter()
        .map(|&p| map.raster(p) as u64)
        .collect())
}
