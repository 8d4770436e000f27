#![no_main]

use libfuzzer_sys::fuzz_target;
use sfc_core::io::{read_sequence_csv, write_sequence_csv};

fuzz_target!(|data: &[u8]| {
    let Ok(seq) = read_sequence_csv(data) else { return };
    assert!(seq.iter().all(|v| v.is_finite()));
    let mut buf = Vec::new();
    write_sequence_csv(&mut buf, &seq).unwrap();
    let back = read_sequence_csv(buf.as_slice()).unwrap();
    assert_eq!(
        back.iter().map(|v| v.to_bits()).collect::<Vec<_>>(),
        seq.iter().map(|v| v.to_bits()).collect::<Vec<_>>()
    );
});
