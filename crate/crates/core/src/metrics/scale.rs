use serde::Serialize;

use super::Dyadic;
use crate::curves::{CurveKind, MAX_ORDER};
use crate::error::{config, domain, Error, Result};

/// Distances between the fold images of two fixed parameters across orders.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScaleTrace {
    pub kind: CurveKind,
    pub t1: Dyadic,
    pub t2: Dyadic,
    pub orders: Vec<u32>,
    /// Unit-square distance between the two cell centers at each order.
    pub distances: Vec<f64>,
    /// `distances[i] / distances[i + 1]`; `None` where the denominator is 0.
    pub ratios: Vec<Option<f64>>,
}

impl ScaleTrace {
    /// Dilation-normalized distances `d_n^2 / |t1 - t2|`.
    pub fn normalized(&self) -> Vec<f64> {
        let gap = self.t1.abs_diff(self.t2);
        self.distances.iter().map(|d| d * d / gap).collect()
    }

    pub fn last_ratio(&self) -> Option<f64> {
        self.ratios.last().copied().flatten()
    }
}

/// Folds `t1` and `t2` into the order-`n` grid for each `n` in
/// `n_min..=n_max` (index `floor(t * 4^n)`) and records the distance between
/// the two cell centers.
pub fn scale_trace(
    kind: CurveKind,
    t1: Dyadic,
    t2: Dyadic,
    n_min: u32,
    n_max: u32,
) -> Result<ScaleTrace> {
    if kind == CurveKind::GeneralizedHilbert {
        return Err(config(
            "scale traces need a square curve (hilbert, morton, zigzag)",
        ));
    }
    if n_min == 0 || n_min > n_max || n_max > MAX_ORDER {
        return Err(domain(format!(
            "need 1 <= n_min <= n_max <= {MAX_ORDER}, got n_min={n_min} n_max={n_max}"
        )));
    }
    if t1 == t2 {
        return Err(Error::Degenerate(format!("t1 = t2 = {t1}")));
    }
    for t in [t1, t2] {
        if t.quaternary_digits() > n_max {
            return Err(domain(format!(
                "{t} is not a multiple of 4^-{n_max}; raise n_max or use a coarser dyadic"
            )));
        }
    }

    let orders: Vec<u32> = (n_min..=n_max).collect();
    let distances = orders
        .iter()
        .map(|&n| {
            let a = kind.d2xy(n, t1.cell_index(n))?;
            let b = kind.d2xy(n, t2.cell_index(n))?;
            Ok((a.dist2(b) as f64).sqrt() / (1u64 << n) as f64)
        })
        .collect::<Result<Vec<f64>>>()?;
    let ratios = distances
        .windows(2)
        .map(|w| (w[1] > 0.0).then(|| w[0] / w[1]))
        .collect();
    Ok(ScaleTrace {
        kind,
        t1,
        t2,
        orders,
        distances,
        ratios,
    })
}
