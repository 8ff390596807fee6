#![no_main]
use glmn_core::io::{csv_row, parse_csv_row};
use glmn_core::SuperRank;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&shape, rest)) = data.split_first() else {
        return;
    };
    let m = usize::from(shape & 0x07);
    let rank = SuperRank::new(m, m + 1 + usize::from(shape >> 5)).unwrap();
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(w) = parse_csv_row(text, &rank) {
        assert_eq!(parse_csv_row(&csv_row(&w), &rank).unwrap(), w);
    }
});
