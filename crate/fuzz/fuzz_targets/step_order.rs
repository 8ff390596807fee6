#![no_main]
use glmn_core::io::parse_step_order;
use glmn_core::{pair_leq, StepOrder};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&m, rest)) = data.split_first() else {
        return;
    };
    let m = usize::from(m % 6);
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(order) = parse_step_order(text, m) {
        let steps = order.steps();
        assert_eq!(steps.len(), m * (m + 1) / 2);
        for (a, &x) in steps.iter().enumerate() {
            for &y in &steps[a + 1..] {
                assert!(!pair_leq(y, x));
            }
        }
        // accepted orders re-validate
        StepOrder::new(steps.to_vec(), m).unwrap();
    }
});
