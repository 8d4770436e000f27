//! Codecs and metrics checked against independent brute-force constructions.

use sfc_core::curves::{
    build_map, generalized_hilbert, hilbert_d2xy, morton_d2xy, zigzag_d2xy, CurveMap,
};
use sfc_core::metrics::{degrid, dilation, hierarchy_check, DilationMode};
use sfc_core::toyset::dtw;
use sfc_core::{CurveKind, GridPoint};

/// Hilbert cells from the complex affine maps T_q z = H_q z / 2 + h_q applied to
/// the unit-square center, innermost digit first.
fn hilbert_ifs(order: u32) -> Vec<GridPoint> {
    #[derive(Clone, Copy)]
    struct C(f64, f64);
    let t = |q: u64, z: C| -> C {
        // H_0 z = conj(z) i,  H_1 = H_2 = id,  H_3 z = -conj(z) i
        let hz = match q {
            0 => C(z.1, z.0),
            1 | 2 => z,
            _ => C(-z.1, -z.0),
        };
        let h = match q {
            0 => C(0.0, 0.0),
            1 => C(0.0, 0.5),
            2 => C(0.5, 0.5),
            _ => C(1.0, 0.5),
        };
        C(hz.0 / 2.0 + h.0, hz.1 / 2.0 + h.1)
    };
    let side = f64::from(1u32 << order);
    (0..1u64 << (2 * order))
        .map(|d| {
            let mut z = C(0.5, 0.5);
            for level in 0..order {
                let q = (d >> (2 * level)) & 3;
                z = t(q, z);
            }
            GridPoint::new((z.0 * side) as u32, (z.1 * side) as u32)
        })
        .collect()
}

fn morton_digits(order: u32) -> Vec<GridPoint> {
    (0..1u64 << (2 * order))
        .map(|d| {
            let (mut x, mut y) = (0u32, 0u32);
            for k in 0..order {
                x |= (((d >> (2 * k)) & 1) as u32) << k;
                y |= (((d >> (2 * k + 1)) & 1) as u32) << k;
            }
            GridPoint::new(x, y)
        })
        .collect()
}

fn zigzag_loops(order: u32) -> Vec<GridPoint> {
    let side = 1u32 << order;
    let mut out = Vec::new();
    for y in 0..side {
        for x in 0..side {
            out.push(GridPoint::new(x, y));
        }
    }
    out
}

#[test]
fn hilbert_matches_ifs_construction() {
    for n in 1..=3 {
        let codec: Vec<_> = (0..1u64 << (2 * n))
            .map(|d| hilbert_d2xy(n, d).unwrap())
            .collect();
        assert_eq!(codec, hilbert_ifs(n), "order {n}");
    }
    // deeper orders are still cheap
    for n in 4..=6 {
        let codec: Vec<_> = (0..1u64 << (2 * n))
            .map(|d| hilbert_d2xy(n, d).unwrap())
            .collect();
        assert_eq!(codec, hilbert_ifs(n), "order {n}");
    }
}

#[test]
fn hilbert_order_two_frozen() {
    let expect = [
        (0, 0),
        (1, 0),
        (1, 1),
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 3),
        (1, 2),
        (2, 2),
        (2, 3),
        (3, 3),
        (3, 2),
        (3, 1),
        (2, 1),
        (2, 0),
        (3, 0),
    ];
    let got: Vec<_> = (0..16).map(|d| hilbert_d2xy(2, d).unwrap()).collect();
    let expect: Vec<_> = expect.iter().map(|&(x, y)| GridPoint::new(x, y)).collect();
    assert_eq!(got, expect);
    assert_eq!(hilbert_ifs(2), expect);
}

#[test]
fn morton_and_zigzag_match_brute_force() {
    for n in 1..=3 {
        let m: Vec<_> = (0..1u64 << (2 * n))
            .map(|d| morton_d2xy(n, d).unwrap())
            .collect();
        assert_eq!(m, morton_digits(n));
        let z: Vec<_> = (0..1u64 << (2 * n))
            .map(|d| zigzag_d2xy(n, d).unwrap())
            .collect();
        assert_eq!(z, zigzag_loops(n));
    }
}

fn naive_degrid(cells: &[GridPoint], k: usize) -> Vec<f64> {
    let n = cells.len();
    (0..n)
        .map(|i| {
            let mut sum = 0.0;
            let mut count = 0usize;
            for j in 0..n {
                let off = i.abs_diff(j);
                if off >= 1 && off <= k {
                    let dx = f64::from(cells[i].x) - f64::from(cells[j].x);
                    let dy = f64::from(cells[i].y) - f64::from(cells[j].y);
                    sum += (dx * dx + dy * dy).sqrt();
                    count += 1;
                }
            }
            sum / count as f64
        })
        .collect()
}

#[test]
fn degrid_matches_double_loop() {
    for kind in CurveKind::SQUARE {
        for n in 1..=4 {
            let map = CurveMap::square(kind, n).unwrap();
            for k in 1..=4 {
                let fast = degrid(&map, k).unwrap().values;
                let slow = naive_degrid(map.forward(), k);
                for (i, (a, b)) in fast.iter().zip(&slow).enumerate() {
                    assert!(
                        (a - b).abs() <= 1e-12,
                        "{kind} n={n} K={k} i={i}: {a} vs {b}"
                    );
                }
            }
        }
    }
    let g = build_map(CurveKind::GeneralizedHilbert, 7, 5).unwrap();
    let fast = degrid(&g, 3).unwrap().values;
    let slow = naive_degrid(g.forward(), 3);
    assert!(fast.iter().zip(&slow).all(|(a, b)| (a - b).abs() <= 1e-12));
}

/// Every monotone alignment path, enumerated recursively.
fn dtw_exhaustive(a: &[f64], b: &[f64]) -> f64 {
    fn go(a: &[f64], b: &[f64], i: usize, j: usize) -> f64 {
        let here = (a[i] - b[j]).abs();
        if i + 1 == a.len() && j + 1 == b.len() {
            return here;
        }
        let mut best = f64::INFINITY;
        if i + 1 < a.len() {
            best = best.min(go(a, b, i + 1, j));
        }
        if j + 1 < b.len() {
            best = best.min(go(a, b, i, j + 1));
        }
        if i + 1 < a.len() && j + 1 < b.len() {
            best = best.min(go(a, b, i + 1, j + 1));
        }
        here + best
    }
    go(a, b, 0, 0)
}

#[test]
fn dtw_matches_exhaustive_search() {
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((state >> 33) % 17) as f64 / 4.0
    };
    for la in 1..=8 {
        for lb in 1..=8 {
            let a: Vec<f64> = (0..la).map(|_| next()).collect();
            let b: Vec<f64> = (0..lb).map(|_| next()).collect();
            let fast = dtw(&a, &b).unwrap();
            let slow = dtw_exhaustive(&a, &b);
            assert!((fast - slow).abs() < 1e-9, "{la}x{lb}: {fast} vs {slow}");
        }
    }
}

#[test]
fn dilation_matches_naive_pairs() {
    for kind in CurveKind::SQUARE {
        for n in 1..=3 {
            let map = CurveMap::square(kind, n).unwrap();
            let cells = map.forward();
            let mut best = 0.0f64;
            for i in 0..cells.len() {
                for j in i + 1..cells.len() {
                    let (p, q) = (cells[i].unit_center(n), cells[j].unit_center(n));
                    let num = (p.0 - q.0).powi(2) + (p.1 - q.1).powi(2);
                    let den = (j - i) as f64 / 4f64.powi(n as i32);
                    best = best.max(num / den);
                }
            }
            let r = dilation(&map, DilationMode::AllPairs).unwrap();
            assert!((r.empirical_max - best).abs() < 1e-9, "{kind} n={n}");
        }
    }
}

#[test]
fn hierarchy_matches_map_lookup() {
    for kind in CurveKind::SQUARE {
        for n in 1..=4 {
            let coarse = CurveMap::square(kind, n).unwrap();
            let fine = CurveMap::square(kind, n + 1).unwrap();
            let mut bad = 0;
            for &p in fine.forward() {
                let parent = GridPoint::new(p.x / 2, p.y / 2);
                if fine.index_of(p).unwrap() / 4 != coarse.index_of(parent).unwrap() {
                    bad += 1;
                }
            }
            assert_eq!(hierarchy_check(kind, n).unwrap(), bad, "{kind} n={n}");
        }
    }
}

#[test]
fn generalized_hilbert_16x9() {
    let map = generalized_hilbert(16, 9).unwrap();
    assert_eq!(map.len(), 144);
    let mut seen = [[false; 16]; 9];
    for &p in map.forward() {
        assert!(!seen[p.y as usize][p.x as usize]);
        seen[p.y as usize][p.x as usize] = true;
    }
    assert!(seen.iter().flatten().all(|&s| s));
    assert!(map.forward().windows(2).all(|w| w[0].manhattan(w[1]) == 1));
}
