#![no_main]

use libfuzzer_sys::fuzz_target;
use sfc_core::curves::GridPoint;
use sfc_core::CurveKind;

fuzz_target!(|data: (u8, u8, u64, u32, u32)| {
    let (kind, order, d, x, y) = data;
    let kind = CurveKind::SQUARE[kind as usize % 3];
    let order = u32::from(order);
    if let Ok(p) = kind.d2xy(order, d) {
        assert_eq!(kind.xy2d(order, p).unwrap(), d);
    }
    if let Ok(e) = kind.xy2d(order, GridPoint { x, y }) {
        assert_eq!(kind.d2xy(order, e).unwrap(), GridPoint { x, y });
    }
});
