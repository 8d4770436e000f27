use super::{check_index, check_point, GridPoint};
use crate::error::Result;

// x owns the even (least-significant) interleave lane, y the odd lane.

#[inline]
fn spread(v: u32) -> u64 {
    let mut v = u64::from(v);
    v = (v | (v << 16)) & 0x0000_FFFF_0000_FFFF;
    v = (v | (v << 8)) & 0x00FF_00FF_00FF_00FF;
    v = (v | (v << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    v = (v | (v << 2)) & 0x3333_3333_3333_3333;
    v = (v | (v << 1)) & 0x5555_5555_5555_5555;
    v
}

#[inline]
fn compact(v: u64) -> u32 {
    let mut v = v & 0x5555_5555_5555_5555;
    v = (v | (v >> 1)) & 0x3333_3333_3333_3333;
    v = (v | (v >> 2)) & 0x0F0F_0F0F_0F0F_0F0F;
    v = (v | (v >> 4)) & 0x00FF_00FF_00FF_00FF;
    v = (v | (v >> 8)) & 0x0000_FFFF_0000_FFFF;
    v = (v | (v >> 16)) & 0x0000_0000_FFFF_FFFF;
    v as u32
}

pub fn morton_d2xy(order: u32, d: u64) -> Result<GridPoint> {
    check_index(order, d)?;
    Ok(GridPoint::new(compact(d), compact(d >> 1)))
}

pub fn morton_xy2d(order: u32, p: GridPoint) -> Result<u64> {
    check_point(order, p)?;
    Ok(spread(p.x) | (spread(p.y) << 1))
}
