#![no_main]
use glmn_core::{
    all_linear_extensions, forward, inverse, Error, Modulus, SuperRank, Weight,
};
use libfuzzer_sys::fuzz_target;

const MODULI: [u32; 6] = [0, 2, 3, 5, 7, 11];

fuzz_target!(|data: &[u8]| {
    if data.len() < 3 {
        return;
    }
    let m = usize::from(data[0] % 5);
    let n = m + 1 + usize::from(data[1] % 3);
    let rank = SuperRank::new(m, n).unwrap();
    let p = Modulus::new(MODULI[usize::from(data[2]) % MODULI.len()]).unwrap();

    let coords: Vec<i64> = data[3..]
        .chunks(8)
        .map(|c| {
            let mut b = [0u8; 8];
            b[..c.len()].copy_from_slice(c);
            i64::from_le_bytes(b)
        })
        .chain(std::iter::repeat(0))
        .take(rank.dim())
        .collect();
    let w = Weight::from_flat(&rank, &coords).unwrap();

    let exts = all_linear_extensions(m, 1 << 20).unwrap();
    let order = &exts[usize::from(data[2] >> 3) % exts.len()];
    match forward(&w, p, order, &rank) {
        Ok((img, _)) => {
            assert_eq!(img.total(), w.total());
            assert_eq!(inverse(&img, p, order, &rank).unwrap().0, w);
        }
        Err(e) => assert_eq!(e, Error::Overflow),
    }
});
