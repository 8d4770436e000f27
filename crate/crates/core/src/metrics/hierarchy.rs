use rayon::prelude::*;

use crate::curves::{CurveKind, GridPoint};
use crate::error::{config, domain, Result};

/// Highest `n` accepted; the check walks all `4^(n+1)` cells.
const MAX_HIERARCHY_ORDER: u32 = 12;

/// Counts cells `(x, y)` of the `2^(n+1)` grid whose fine index does not nest
/// inside the coarse index of their parent cell, i.e. where
/// `xy2d(n+1, x, y) / 4 != xy2d(n, x/2, y/2)`.
pub fn hierarchy_check(kind: CurveKind, n: u32) -> Result<u64> {
    if kind == CurveKind::GeneralizedHilbert {
        return Err(config(
            "hierarchy check needs a square curve (hilbert, morton, zigzag)",
        ));
    }
    if n == 0 || n > MAX_HIERARCHY_ORDER {
        return Err(domain(format!(
            "hierarchy order must satisfy 1 <= n <= {MAX_HIERARCHY_ORDER}, got {n}"
        )));
    }
    let side = 1u32 << (n + 1);
    (0..side)
        .into_par_iter()
        .map(|y| -> Result<u64> {
            let mut bad = 0;
            for x in 0..side {
                let fine = kind.xy2d(n + 1, GridPoint::new(x, y))?;
                let coarse = kind.xy2d(n, GridPoint::new(x / 2, y / 2))?;
                bad += u64::from(fine / 4 != coarse);
            }
            Ok(bad)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nesting() {
        for n in 1..=6 {
            assert_eq!(hierarchy_check(CurveKind::Hilbert, n).unwrap(), 0);
            assert_eq!(hierarchy_check(CurveKind::Morton, n).unwrap(), 0);
            assert!(hierarchy_check(CurveKind::Zigzag, n).unwrap() > 0);
        }
    }

    #[test]
    fn zigzag_order_one_by_hand() {
        // 4x4 raster: only cells whose fine index / 4 equals the parent's
        // 2x2 raster index survive.
        let mut bad = 0;
        for y in 0..4u64 {
            for x in 0..4u64 {
                bad += u64::from((y * 4 + x) / 4 != (y / 2) * 2 + x / 2);
            }
        }
        assert_eq!(hierarchy_check(CurveKind::Zigzag, 1).unwrap(), bad);
    }

    #[test]
    fn domain() {
        assert!(hierarchy_check(CurveKind::Hilbert, 0).is_err());
        assert!(hierarchy_check(CurveKind::GeneralizedHilbert, 2).is_err());
    }
}
