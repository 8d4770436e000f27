use super::{check_index, check_point, GridPoint};
use crate::error::Result;

/// Raster order: every row left to right, rows top to bottom.
pub fn zigzag_d2xy(order: u32, d: u64) -> Result<GridPoint> {
    check_index(order, d)?;
    let side = 1u64 << order;
    Ok(GridPoint::new((d % side) as u32, (d / side) as u32))
}

pub fn zigzag_xy2d(order: u32, p: GridPoint) -> Result<u64> {
    check_point(order, p)?;
    Ok(u64::from(p.y) * (1u64 << order) + u64::from(p.x))
}
