#![no_main]

use libfuzzer_sys::fuzz_target;
use shape_avoid::Partition;

// The partition parser must never panic; accepted values must roundtrip
// through display and double conjugation.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(p) = text.parse::<Partition>() else { return };
    let reparsed: Partition = p.to_string().parse().expect("display output parses");
    assert_eq!(p, reparsed);
    if p.size() <= 1 << 20 {
        assert_eq!(p.conjugate().conjugate(), p);
    }
});
