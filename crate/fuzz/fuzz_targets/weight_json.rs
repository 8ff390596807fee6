#![no_main]
use glmn_core::io::parse_weight;
use glmn_core::SuperRank;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&shape, rest)) = data.split_first() else {
        return;
    };
    let m = usize::from(shape & 0x07);
    let n = m + 1 + usize::from(shape >> 5);
    let rank = SuperRank::new(m, n).unwrap();
    if let Ok(text) = std::str::from_utf8(rest) {
        if let Ok(w) = parse_weight(text, &rank) {
            assert_eq!(w.lambda.len(), m);
            assert_eq!(w.theta.len(), n);
        }
    }
});
