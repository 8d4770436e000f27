use proptest::prelude::*;
use sfc_core::curves::{build_map, patch_order, CurveMap};
use sfc_core::metrics::{degrid, preservation_sweep, Dyadic};
use sfc_core::toyset::{dtw, dtw_with, Normalize};
use sfc_core::{flatten, fold, CurveKind, GrayImage, GridPoint};

fn square_kind() -> impl Strategy<Value = CurveKind> {
    prop_oneof![
        Just(CurveKind::Hilbert),
        Just(CurveKind::Morton),
        Just(CurveKind::Zigzag)
    ]
}

proptest! {
    #[test]
    fn codec_roundtrip(kind in square_kind(), order in 1u32..=31, raw in any::<u64>()) {
        let d = raw % (1u64 << (2 * order));
        let p = kind.d2xy(order, d).unwrap();
        prop_assert_eq!(kind.xy2d(order, p).unwrap(), d);
    }

    #[test]
    fn hilbert_steps_are_adjacent(order in 1u32..=31, raw in any::<u64>()) {
        let d = raw % ((1u64 << (2 * order)) - 1);
        let a = CurveKind::Hilbert.d2xy(order, d).unwrap();
        let b = CurveKind::Hilbert.d2xy(order, d + 1).unwrap();
        prop_assert_eq!(a.manhattan(b), 1);
    }

    #[test]
    fn generalized_hilbert_is_a_4_adjacent_bijection(w in 1u32..=80, h in 1u32..=80) {
        let m = build_map(CurveKind::GeneralizedHilbert, w, h).unwrap();
        prop_assert_eq!(m.len(), (w * h) as usize);
        for (d, &p) in m.forward().iter().enumerate() {
            prop_assert_eq!(m.index_of(p).unwrap(), d as u64);
        }
        prop_assert!(m.forward().windows(2).all(|s| s[0].manhattan(s[1]) == 1));
    }

    #[test]
    fn flatten_fold_roundtrip(
        kind in prop_oneof![square_kind(), Just(CurveKind::GeneralizedHilbert)],
        order in 1u32..=6,
        seed in any::<u64>(),
    ) {
        let map = CurveMap::square(kind, order).unwrap();
        let mut s = seed | 1;
        let pixels: Vec<f64> = (0..map.len())
            .map(|_| {
                s ^= s << 13;
                s ^= s >> 7;
                s ^= s << 17;
                (s >> 11) as f64 / (1u64 << 53) as f64
            })
            .collect();
        let img = GrayImage::new(map.width(), map.height(), pixels).unwrap();
        let seq = flatten(&img, &map).unwrap();
        let back = fold(&seq, &map).unwrap();
        prop_assert!(img.pixels().iter().zip(back.pixels()).all(|(a, b)| a.to_bits() == b.to_bits()));
    }

    #[test]
    fn patch_order_is_permutation(w in 1u32..=40, h in 1u32..=40) {
        let perm = patch_order(w, h).unwrap();
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (0..u64::from(w * h)).collect::<Vec<_>>());
        for s in perm.windows(2) {
            let a = GridPoint::new((s[0] % u64::from(w)) as u32, (s[0] / u64::from(w)) as u32);
            let b = GridPoint::new((s[1] % u64::from(w)) as u32, (s[1] / u64::from(w)) as u32);
            prop_assert_eq!(a.manhattan(b), 1);
        }
    }

    #[test]
    fn sweep_is_monotone(kind in square_kind(), order in 1u32..=5, k in 1usize..=4,
                         mut eps in prop::collection::vec(0.01f64..20.0, 1..30)) {
        eps.sort_by(f64::total_cmp);
        let field = degrid(&CurveMap::square(kind, order).unwrap(), k).unwrap();
        prop_assert!(field.values.iter().all(|&v| v > 0.0));
        let rows = preservation_sweep(&field, &eps).unwrap();
        prop_assert!(rows.windows(2).all(|w| w[0].1 <= w[1].1));
    }

    #[test]
    fn hilbert_degrid_at_least_one(order in 1u32..=6, k in 1usize..=5) {
        let field = degrid(&CurveMap::square(CurveKind::Hilbert, order).unwrap(), k).unwrap();
        prop_assert!(field.values.iter().all(|&v| v >= 1.0));
    }

    #[test]
    fn dtw_symmetry_and_identity(
        a in prop::collection::vec(0.0f64..1.0, 1..40),
        b in prop::collection::vec(0.0f64..1.0, 1..40),
    ) {
        prop_assert_eq!(dtw(&a, &b).unwrap(), dtw(&b, &a).unwrap());
        prop_assert_eq!(dtw(&a, &a).unwrap(), 0.0);
        prop_assert!(dtw(&a, &b).unwrap() >= 0.0);
        let path = dtw_with(&a, &b, Normalize::Path).unwrap();
        prop_assert!((path - dtw_with(&b, &a, Normalize::Path).unwrap()).abs() < 1e-12);
        // raw cost of the optimal path matches the wavefront
        prop_assert!(path * (a.len().max(b.len()) as f64) <= dtw(&a, &b).unwrap() + 1e-9);
    }

    #[test]
    fn dtw_zero_iff_identical_binary(
        a in prop::collection::vec(prop::bool::ANY, 1..30),
        b in prop::collection::vec(prop::bool::ANY, 1..30),
    ) {
        let fa: Vec<f64> = a.iter().map(|&x| f64::from(u8::from(x))).collect();
        let fb: Vec<f64> = b.iter().map(|&x| f64::from(u8::from(x))).collect();
        if fa == fb {
            prop_assert_eq!(dtw(&fa, &fb).unwrap(), 0.0);
        }
        if dtw(&fa, &fb).unwrap() > 0.0 {
            prop_assert_ne!(fa, fb);
        }
    }

    #[test]
    fn dyadic_cell_index_is_floor(num in 0u64..=1024, order in 1u32..=12) {
        let t = Dyadic::new(num, 1024).unwrap();
        let expect = ((num as u128 * (1u128 << (2 * order))) / 1024).min((1u128 << (2 * order)) - 1);
        prop_assert_eq!(u128::from(t.cell_index(order)), expect);
        prop_assert_eq!(t.to_string().parse::<Dyadic>().unwrap(), t);
    }
}

#[test]
fn bijection_up_to_256() {
    for kind in CurveKind::SQUARE {
        for n in 1..=8 {
            let m = CurveMap::square(kind, n).unwrap();
            for (d, &p) in m.forward().iter().enumerate() {
                assert_eq!(m.index_of(p).unwrap(), d as u64);
            }
        }
    }
}
