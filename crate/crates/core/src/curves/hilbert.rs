use super::{check_index, check_point, GridPoint};
use crate::error::Result;

// Quadrant visiting order: lower-left, upper-left, upper-right, lower-right
// (y grows upward in the quadrant picture, i.e. with the row index). The
// order-n curve enters at (0, 0) and leaves at (2^n - 1, 0).

#[inline]
fn rotate(side: u64, x: &mut u64, y: &mut u64, rx: u64, ry: u64) {
    if ry == 0 {
        if rx == 1 {
            *x = side - 1 - *x;
            *y = side - 1 - *y;
        }
        std::mem::swap(x, y);
    }
}

/// The `d`-th cell of the order-`n` Hilbert traversal of the `2^n x 2^n` grid.
pub fn hilbert_d2xy(order: u32, d: u64) -> Result<GridPoint> {
    check_index(order, d)?;
    let side = 1u64 << order;
    let (mut x, mut y) = (0u64, 0u64);
    let mut t = d;
    let mut s = 1u64;
    while s < side {
        let rx = 1 & (t >> 1);
        let ry = 1 & (t ^ rx);
        rotate(s, &mut x, &mut y, rx, ry);
        x += s * rx;
        y += s * ry;
        t >>= 2;
        s <<= 1;
    }
    Ok(GridPoint::new(x as u32, y as u32))
}

/// Inverse of [`hilbert_d2xy`].
pub fn hilbert_xy2d(order: u32, p: GridPoint) -> Result<u64> {
    check_point(order, p)?;
    let side = 1u64 << order;
    let (mut x, mut y) = (u64::from(p.x), u64::from(p.y));
    let mut d = 0u64;
    let mut s = side >> 1;
    while s > 0 {
        let rx = u64::from(x & s != 0);
        let ry = u64::from(y & s != 0);
        d += s * s * ((3 * rx) ^ ry);
        rotate(side, &mut x, &mut y, rx, ry);
        s >>= 1;
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one_base_pattern() {
        let cells: Vec<_> = (0..4).map(|d| hilbert_d2xy(1, d).unwrap()).collect();
        assert_eq!(
            cells,
            vec![
                GridPoint::new(0, 0),
                GridPoint::new(0, 1),
                GridPoint::new(1, 1),
                GridPoint::new(1, 0)
            ]
        );
        assert_eq!(hilbert_xy2d(1, GridPoint::new(0, 0)).unwrap(), 0);
        assert_eq!(hilbert_xy2d(1, GridPoint::new(1, 0)).unwrap(), 3);
    }

    #[test]
    fn order_two_sixth_cell() {
        assert_eq!(hilbert_d2xy(2, 5).unwrap(), GridPoint::new(0, 3));
    }

    #[test]
    fn endpoints() {
        for n in 1..=12 {
            let last = (1u64 << (2 * n)) - 1;
            assert_eq!(hilbert_d2xy(n, 0).unwrap(), GridPoint::new(0, 0));
            assert_eq!(
                hilbert_d2xy(n, last).unwrap(),
                GridPoint::new((1 << n) - 1, 0)
            );
        }
    }

    #[test]
    fn roundtrip_and_adjacency_up_to_order_6() {
        for n in 1..=6 {
            let mut prev: Option<GridPoint> = None;
            for d in 0..(1u64 << (2 * n)) {
                let p = hilbert_d2xy(n, d).unwrap();
                assert_eq!(hilbert_xy2d(n, p).unwrap(), d);
                if let Some(q) = prev {
                    assert_eq!(p.manhattan(q), 1, "n={n} d={d}");
                }
                prev = Some(p);
            }
        }
    }

    #[test]
    fn max_order_corners() {
        let last = u64::MAX >> 2;
        let p = hilbert_d2xy(31, last).unwrap();
        assert_eq!(p, GridPoint::new(u32::MAX >> 1, 0));
        assert_eq!(hilbert_xy2d(31, p).unwrap(), last);
    }

    #[test]
    fn domain_errors() {
        assert!(hilbert_d2xy(0, 0).is_err());
        assert!(hilbert_d2xy(1, 4).is_err());
        assert!(hilbert_d2xy(32, 0).is_err());
        assert!(hilbert_xy2d(2, GridPoint::new(4, 0)).is_err());
        let msg = hilbert_d2xy(2, 16).unwrap_err().to_string();
        assert!(msg.contains("4^2"), "{msg}");
    }
}
