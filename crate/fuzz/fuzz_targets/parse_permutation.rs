#![no_main]

use libfuzzer_sys::fuzz_target;
use shape_avoid::Permutation;

// The permutation parser must never panic, and anything it accepts must
// survive a display/parse roundtrip and the RSK roundtrip.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(pi) = text.parse::<Permutation>() else { return };
    let reparsed: Permutation = pi.to_string().parse().expect("display output parses");
    assert_eq!(pi, reparsed);
    if pi.len() <= 64 {
        let pair = shape_avoid::rsk(&pi);
        assert_eq!(shape_avoid::rsk_inverse(&pair), pi);
    }
});
