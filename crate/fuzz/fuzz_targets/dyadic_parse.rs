#![no_main]

use libfuzzer_sys::fuzz_target;
use sfc_core::metrics::Dyadic;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(t) = s.parse::<Dyadic>() else { return };
    assert!(t.to_f64() >= 0.0 && t.to_f64() <= 1.0);
    assert!(t.den().is_power_of_two());
    let again: Dyadic = t.to_string().parse().unwrap();
    assert_eq!(again, t);
    let n = t.quaternary_digits().max(1);
    if n <= 31 {
        assert!(t.cell_index(n) < 1u64 << (2 * n));
    }
});
