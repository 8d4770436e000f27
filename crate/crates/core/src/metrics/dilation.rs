use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::curves::{CurveKind, CurveMap, GridPoint};
use crate::error::{config, parse, Error, Result};

/// All-pairs search is `O(16^n)`; beyond this order use [`DilationMode::Adjacent`].
pub const MAX_ALL_PAIRS_ORDER: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DilationMode {
    /// Every pair of distinct indices.
    AllPairs,
    /// Pairs `(d, d + g)` for every power-of-two gap `g`, including all
    /// consecutive pairs. `O(N log N)`.
    Adjacent,
}

impl fmt::Display for DilationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DilationMode::AllPairs => "all-pairs",
            DilationMode::Adjacent => "adjacent",
        })
    }
}

impl FromStr for DilationMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all-pairs" | "all_pairs" => Ok(DilationMode::AllPairs),
            "adjacent" | "adjacent_only" | "adjacent-only" => Ok(DilationMode::Adjacent),
            _ => Err(parse(format!(
                "unknown dilation mode `{s}` (all-pairs | adjacent)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DilationReport {
    pub kind: CurveKind,
    pub order: u32,
    pub mode: DilationMode,
    /// Max of `|p(d1) - p(d2)|^2 / (|d1 - d2| / 4^n)` over the sampled pairs,
    /// with `p` the unit-square cell center.
    pub empirical_max: f64,
    pub argmax_pair: (u64, u64),
    /// Closed form with `n` the side exponent: 6 for the Hilbert family,
    /// `4^n - 2^(n+1) + 2` for Zigzag and Morton.
    pub theoretical_bound: f64,
    /// The published closed form and its own parametrization, for traceability.
    pub table_expression: &'static str,
    pub table_value: f64,
}

/// A candidate pair scored by the exact rational `dist2 / gap` in cell units.
#[derive(Debug, Clone, Copy)]
struct Candidate {
    dist2: u64,
    gap: u64,
    d1: u64,
    d2: u64,
}

impl Candidate {
    fn new(cells: &[GridPoint], d1: usize, d2: usize) -> Self {
        Candidate {
            dist2: cells[d1].dist2(cells[d2]),
            gap: (d2 - d1) as u64,
            d1: d1 as u64,
            d2: d2 as u64,
        }
    }

    fn ratio_cmp(&self, other: &Candidate) -> Ordering {
        (u128::from(self.dist2) * u128::from(other.gap))
            .cmp(&(u128::from(other.dist2) * u128::from(self.gap)))
    }

    /// Larger ratio wins; ties go to the lexicographically smallest pair.
    fn better(self, other: Candidate) -> Candidate {
        match self.ratio_cmp(&other) {
            Ordering::Greater => self,
            Ordering::Less => other,
            Ordering::Equal => {
                if (self.d1, self.d2) <= (other.d1, other.d2) {
                    self
                } else {
                    other
                }
            }
        }
    }
}

pub fn dilation(map: &CurveMap, mode: DilationMode) -> Result<DilationReport> {
    let order = map.order().ok_or_else(|| {
        config(format!(
            "dilation needs a square power-of-two map, got {}x{}",
            map.width(),
            map.height()
        ))
    })?;
    if mode == DilationMode::AllPairs && order > MAX_ALL_PAIRS_ORDER {
        return Err(config(format!(
            "all-pairs dilation is limited to order <= {MAX_ALL_PAIRS_ORDER} (got {order}); use --mode adjacent"
        )));
    }
    let cells = map.forward();
    let n = cells.len();

    let best_from = |d1: usize| -> Option<Candidate> {
        let mut best: Option<Candidate> = None;
        let mut consider = |d2: usize| {
            let c = Candidate::new(cells, d1, d2);
            best = Some(match best {
                Some(b) => b.better(c),
                None => c,
            });
        };
        match mode {
            DilationMode::AllPairs => (d1 + 1..n).for_each(&mut consider),
            DilationMode::Adjacent => std::iter::successors(Some(1usize), |g| g.checked_mul(2))
                .take_while(|&g| d1 + g < n)
                .for_each(|g| consider(d1 + g)),
        }
        best
    };

    let best = (0..n)
        .into_par_iter()
        .filter_map(best_from)
        .reduce_with(Candidate::better)
        .ok_or_else(|| Error::Internal("map has no index pairs".into()))?;

    let (theoretical_bound, table_expression, table_value) = closed_forms(map.kind(), order);
    Ok(DilationReport {
        kind: map.kind(),
        order,
        mode,
        empirical_max: best.dist2 as f64 / best.gap as f64,
        argmax_pair: (best.d1, best.d2),
        theoretical_bound,
        table_expression,
        table_value,
    })
}

fn closed_forms(kind: CurveKind, order: u32) -> (f64, &'static str, f64) {
    let n = order as i32;
    let raster_break = 4f64.powi(n) - 2f64.powi(n + 1) + 2.0;
    match kind {
        CurveKind::Hilbert | CurveKind::GeneralizedHilbert => {
            (6.0, "6 (exact supremum for the Hilbert curve)", 6.0)
        }
        CurveKind::Zigzag => (
            raster_break,
            "4^n - 2^(n+1) + 2 (n = side exponent)",
            raster_break,
        ),
        // The published Morton row counts n in total index bits (2 * order);
        // under the side-exponent convention the worst pair is the half-grid
        // row break, which has the Zigzag value.
        CurveKind::Morton => (
            raster_break,
            "2^n - 2^-n (n = total index bits = 2 * order)",
            2f64.powi(2 * n) - 2f64.powi(-2 * n),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(kind: CurveKind, n: u32, mode: DilationMode) -> DilationReport {
        dilation(&CurveMap::square(kind, n).unwrap(), mode).unwrap()
    }

    #[test]
    fn zigzag_order_two() {
        let r = report(CurveKind::Zigzag, 2, DilationMode::AllPairs);
        assert_eq!(r.empirical_max, 10.0);
        assert_eq!(r.argmax_pair, (3, 4));
        assert_eq!(r.theoretical_bound, 10.0);
    }

    #[test]
    fn morton_order_three() {
        let r = report(CurveKind::Morton, 3, DilationMode::AllPairs);
        assert_eq!(r.empirical_max, 50.0);
        assert_eq!(r.argmax_pair, (31, 32));
        assert_eq!(r.theoretical_bound, 50.0);
    }

    #[test]
    fn hilbert_bounded() {
        for n in 1..=5 {
            let r = report(CurveKind::Hilbert, n, DilationMode::AllPairs);
            assert!(r.empirical_max <= 6.0, "n={n}: {}", r.empirical_max);
            assert!(r.argmax_pair.0 < r.argmax_pair.1);
        }
        let r = report(CurveKind::Hilbert, 7, DilationMode::Adjacent);
        assert!(r.empirical_max <= 6.0);
    }

    #[test]
    fn adjacent_sees_row_breaks() {
        let r = report(CurveKind::Zigzag, 6, DilationMode::Adjacent);
        assert_eq!(r.empirical_max, 3970.0);
        assert_eq!(r.argmax_pair, (63, 64));
    }

    #[test]
    fn mode_limits() {
        let m = CurveMap::square(CurveKind::Hilbert, 6).unwrap();
        assert!(matches!(
            dilation(&m, DilationMode::AllPairs),
            Err(Error::Config(_))
        ));
        let g = crate::curves::build_map(CurveKind::GeneralizedHilbert, 6, 4).unwrap();
        assert!(matches!(
            dilation(&g, DilationMode::Adjacent),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn tie_break_is_lexicographic() {
        let a = Candidate {
            dist2: 2,
            gap: 1,
            d1: 5,
            d2: 6,
        };
        let b = Candidate {
            dist2: 4,
            gap: 2,
            d1: 1,
            d2: 3,
        };
        assert_eq!(a.better(b).d1, 1);
        assert_eq!(b.better(a).d1, 1);
    }
}
