#![no_main]
use glmn_core::io::parse_box;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(b) = parse_box(text) {
            assert!(b.lo() <= b.hi());
            let _ = b.cardinality(16);
        }
    }
});
