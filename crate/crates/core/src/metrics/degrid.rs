use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::curves::{CurveKind, CurveMap};
use crate::error::{domain, Result};

/// How the distance from a position to each sequence neighbor is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceForm {
    /// Euclidean distance in cell units.
    #[default]
    Euclidean,
    /// Squared Euclidean distance in cell units.
    Squared,
}

/// Per-position DeGrid values of a map, in cell-length units.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeGridField {
    pub kind: CurveKind,
    pub width: u32,
    pub height: u32,
    pub k: usize,
    pub form: DistanceForm,
    pub values: Vec<f64>,
}

pub fn degrid(map: &CurveMap, k: usize) -> Result<DeGridField> {
    degrid_with(map, k, DistanceForm::Euclidean)
}

/// Mean 2-D distance from each sequence position to its sequence neighbors at
/// offsets `-k..=k` (excluding 0), restricted to neighbors that exist.
pub fn degrid_with(map: &CurveMap, k: usize, form: DistanceForm) -> Result<DeGridField> {
    if k == 0 {
        return Err(domain(
            "DeGrid radius K must be >= 1 (K = 0 has no neighbors)",
        ));
    }
    let n = map.len();
    if n < 2 {
        return Err(domain("DeGrid needs a map with at least two cells"));
    }
    let cells = map.forward();
    let values = (0..n)
        .into_par_iter()
        .map(|i| {
            let lo = i.saturating_sub(k);
            let hi = (i + k).min(n - 1);
            let mut sum = 0.0;
            for j in (lo..=hi).filter(|&j| j != i) {
                let d2 = cells[i].dist2(cells[j]) as f64;
                sum += match form {
                    DistanceForm::Euclidean => d2.sqrt(),
                    DistanceForm::Squared => d2,
                };
            }
            sum / (hi - lo) as f64
        })
        .collect();
    Ok(DeGridField {
        kind: map.kind(),
        width: map.width(),
        height: map.height(),
        k,
        form,
        values,
    })
}

impl DeGridField {
    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    fn check_map(&self, map: &CurveMap) -> Result<()> {
        if map.kind() != self.kind || map.width() != self.width || map.height() != self.height {
            return Err(domain("DeGrid field does not belong to this map"));
        }
        Ok(())
    }

    /// `position,x,y,degrid` rows in sequence order.
    pub fn write_csv<W: Write>(&self, map: &CurveMap, out: W) -> Result<()> {
        self.check_map(map)?;
        let mut wtr = crate::io::csv_writer(out);
        wtr.write_record(["position", "x", "y", "degrid"])?;
        for (i, (&p, v)) in map.forward().iter().zip(&self.values).enumerate() {
            wtr.write_record([
                i.to_string(),
                p.x.to_string(),
                p.y.to_string(),
                v.to_string(),
            ])?;
        }
        wtr.flush()?;
        Ok(())
    }

    /// Values scattered back onto the grid (row-major).
    pub fn raster(&self, map: &CurveMap) -> Result<Vec<f64>> {
        self.check_map(map)?;
        map.fold_values(&self.values)
    }

    /// P2 heatmap of the field on its grid.
    pub fn heatmap(&self, map: &CurveMap) -> Result<Vec<u8>> {
        crate::io::encode_p2_heatmap(&self.raster(map)?, self.width, self.height)
    }
}

fn check_threshold(eps: f64) -> Result<()> {
    if !(eps.is_finite() && eps > 0.0) {
        return Err(domain(format!(
            "threshold must be finite and > 0, got {eps}"
        )));
    }
    Ok(())
}

/// Percentage of positions with DeGrid `<= eps`.
pub fn preservation(field: &DeGridField, eps: f64) -> Result<f64> {
    check_threshold(eps)?;
    let hits = field.values.iter().filter(|&&v| v <= eps).count();
    Ok(100.0 * hits as f64 / field.values.len() as f64)
}

pub fn preservation_sweep(field: &DeGridField, thresholds: &[f64]) -> Result<Vec<(f64, f64)>> {
    if thresholds.is_empty() {
        return Err(domain("threshold list is empty"));
    }
    thresholds
        .iter()
        .map(|&eps| Ok((eps, preservation(field, eps)?)))
        .collect()
}

/// `steps` thresholds spaced evenly in log scale over `[lo, hi]`.
pub fn log_thresholds(lo: f64, hi: f64, steps: usize) -> Result<Vec<f64>> {
    check_threshold(lo)?;
    check_threshold(hi)?;
    if hi < lo || steps == 0 {
        return Err(domain(format!(
            "need 0 < lo <= hi and steps >= 1, got lo={lo} hi={hi} steps={steps}"
        )));
    }
    if steps == 1 {
        return Ok(vec![lo]);
    }
    let (a, b) = (lo.ln(), hi.ln());
    let last = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| match i {
            0 => lo,
            i if i == steps - 1 => hi,
            i => (a + (b - a) * i as f64 / last).exp(),
        })
        .collect())
}

/// 64 log-spaced thresholds from `0.99 * min` to `1.01 * max` over all
/// fields, so the sweep brackets 0% and 100% for each of them.
pub fn default_thresholds(fields: &[&DeGridField]) -> Result<Vec<f64>> {
    let lo = fields.iter().map(|f| f.min()).fold(f64::INFINITY, f64::min);
    let hi = fields
        .iter()
        .map(|f| f.max())
        .fold(f64::NEG_INFINITY, f64::max);
    log_thresholds(lo * 0.99, hi * 1.01, 64)
}

/// One row of the three-curve preservation table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub epsilon: f64,
    pub hf_pct: f64,
    pub mf_pct: f64,
    pub zf_pct: f64,
}

/// Writes sweep rows as `epsilon,hf_pct,mf_pct,zf_pct` CSV.
pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut wtr = crate::io::csv_writer(out);
    wtr.write_record(["epsilon", "hf_pct", "mf_pct", "zf_pct"])?;
    for r in rows {
        wtr.write_record([r.epsilon, r.hf_pct, r.mf_pct, r.zf_pct].map(|v| v.to_string()))?;
    }
    wtr.flush()?;
    Ok(())
}

/// Hilbert / Morton / Zigzag preservation percentages on the `2^order` grid.
/// With `thresholds = None` the default log sweep over the three fields is used.
pub fn preservation_table(
    order: u32,
    k: usize,
    form: DistanceForm,
    thresholds: Option<&[f64]>,
) -> Result<Vec<SweepRow>> {
    let fields = CurveKind::SQUARE
        .iter()
        .map(|&kind| degrid_with(&CurveMap::square(kind, order)?, k, form))
        .collect::<Result<Vec<_>>>()?;
    let eps = match thresholds {
        Some(t) => t.to_vec(),
        None => default_thresholds(&fields.iter().collect::<Vec<_>>())?,
    };
    let cols = fields
        .iter()
        .map(|f| preservation_sweep(f, &eps))
        .collect::<Result<Vec<_>>>()?;
    Ok(eps
        .iter()
        .enumerate()
        .map(|(i, &epsilon)| SweepRow {
            epsilon,
            hf_pct: cols[0][i].1,
            mf_pct: cols[1][i].1,
            zf_pct: cols[2][i].1,
        })
        .collect())
}
