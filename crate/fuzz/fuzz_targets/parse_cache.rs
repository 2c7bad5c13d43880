#![no_main]

use libfuzzer_sys::fuzz_target;
use shape_avoid::CountCache;

// The cache-file decoder must never panic on arbitrary bytes.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = CountCache::from_json(text);
});
