use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{domain, parse, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalize {
    /// Raw accumulated cost.
    #[default]
    None,
    /// Accumulated cost divided by the number of matched pairs on the optimal
    /// path (shortest such path when several are optimal).
    Path,
}

impl fmt::Display for Normalize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Normalize::None => "none",
            Normalize::Path => "path",
        })
    }
}

impl FromStr for Normalize {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Normalize::None),
            "path" => Ok(Normalize::Path),
            _ => Err(parse(format!("unknown normalization `{s}` (none | path)"))),
        }
    }
}

/// Minimal accumulated `|a_i - b_j|` over monotone alignments from `(0, 0)` to
/// `(|a|-1, |b|-1)` with steps `(1,0)`, `(0,1)`, `(1,1)`. Full window.
pub fn dtw(a: &[f64], b: &[f64]) -> Result<f64> {
    check(a, b)?;
    let (rows, cols) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    Ok(wavefront(rows, cols))
}

#[inline(always)]
fn min2(x: f64, y: f64) -> f64 {
    if y < x {
        y
    } else {
        x
    }
}

// Sweeps anti-diagonals k = i + j. Cells on one diagonal only depend on the
// two previous diagonals, so the inner loop has no carried dependency. Slot
// `i + 1` of a diagonal buffer holds row `i`; slot 0 and every row never
// reached on that diagonal stay at +inf.
fn wavefront(rows: &[f64], cols: &[f64]) -> f64 {
    let n = rows.len();
    let m = cols.len();
    let rev: Vec<f64> = cols.iter().rev().copied().collect();
    let mut d0 = vec![f64::INFINITY; n + 1]; // diagonal k - 2
    let mut d1 = vec![f64::INFINITY; n + 1]; // diagonal k - 1
    let mut d2 = vec![f64::INFINITY; n + 1]; // diagonal k
    d1[1] = (rows[0] - cols[0]).abs();
    for k in 1..(n + m - 1) {
        let lo = k.saturating_sub(m - 1);
        let hi = k.min(n - 1);
        // cols[k - i] == rev[m - 1 - k + i]
        let off = m - 1 + lo - k;
        let len = hi - lo + 1;
        let r = &rows[lo..lo + len];
        let c = &rev[off..off + len];
        let diag = &d0[lo..lo + len];
        let up = &d1[lo..lo + len];
        let left = &d1[lo + 1..lo + 1 + len];
        let out = &mut d2[lo + 1..lo + 1 + len];
        for t in 0..len {
            let best = min2(min2(diag[t], up[t]), left[t]);
            out[t] = best + (r[t] - c[t]).abs();
        }
        std::mem::swap(&mut d0, &mut d1);
        std::mem::swap(&mut d1, &mut d2);
    }
    d1[n]
}

/// Row-by-row reference DP; kept for cross-checking [`dtw`].
#[cfg(test)]
pub(crate) fn dtw_rows(a: &[f64], b: &[f64]) -> f64 {
    let (rows, cols) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let m = cols.len();
    let mut prev = vec![0.0f64; m];
    let mut cur = vec![0.0f64; m];
    let mut acc = 0.0;
    for (j, &c) in cols.iter().enumerate() {
        acc += (rows[0] - c).abs();
        prev[j] = acc;
    }
    for &r in &rows[1..] {
        cur[0] = prev[0] + (r - cols[0]).abs();
        for j in 1..m {
            cur[j] = prev[j].min(prev[j - 1]).min(cur[j - 1]) + (r - cols[j]).abs();
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[m - 1]
}

pub fn dtw_with(a: &[f64], b: &[f64], normalize: Normalize) -> Result<f64> {
    match normalize {
        Normalize::None => dtw(a, b),
        Normalize::Path => {
            let (cost, len) = dtw_path(a, b)?;
            Ok(cost / len as f64)
        }
    }
}

/// Like [`dtw`] but also tracks the optimal path length. Ties in cost are
/// broken toward shorter paths.
fn dtw_path(a: &[f64], b: &[f64]) -> Result<(f64, u64)> {
    check(a, b)?;
    let (rows, cols) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let m = cols.len();
    let pick = |x: (f64, u64), y: (f64, u64)| -> (f64, u64) {
        if y.0 < x.0 || (y.0 == x.0 && y.1 < x.1) {
            y
        } else {
            x
        }
    };
    let mut prev = vec![(0.0f64, 0u64); m];
    let mut cur = vec![(0.0f64, 0u64); m];
    let mut acc = 0.0;
    for (j, &c) in cols.iter().enumerate() {
        acc += (rows[0] - c).abs();
        prev[j] = (acc, j as u64 + 1);
    }
    for &r in &rows[1..] {
        cur[0] = (prev[0].0 + (r - cols[0]).abs(), prev[0].1 + 1);
        for j in 1..m {
            let best = pick(pick(prev[j - 1], prev[j]), cur[j - 1]);
            cur[j] = (best.0 + (r - cols[j]).abs(), best.1 + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev[m - 1])
}

fn check(a: &[f64], b: &[f64]) -> Result<()> {
    if a.is_empty() || b.is_empty() {
        return Err(domain("DTW needs two nonempty sequences"));
    }
    if a.iter().chain(b).any(|v| !v.is_finite()) {
        return Err(domain("DTW inputs must be finite"));
    }
    Ok(())
}
