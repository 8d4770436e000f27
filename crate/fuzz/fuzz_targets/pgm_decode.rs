#![no_main]

use libfuzzer_sys::fuzz_target;
use sfc_core::io::{decode_pgm, encode_p5};

fuzz_target!(|data: &[u8]| {
    let Ok(pgm) = decode_pgm(data) else { return };
    assert_eq!(pgm.samples.len(), pgm.width as usize * pgm.height as usize);
    if let Ok(img) = pgm.to_gray_image() {
        // re-encoding at 8 bits must decode to the same geometry
        let again = decode_pgm(&encode_p5(&img)).expect("own P5 output must decode");
        assert_eq!((again.width, again.height), (pgm.width, pgm.height));
    }
});
