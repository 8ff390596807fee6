use std::collections::BTreeSet;

use glmn_core::oracle::{verify_image, verify_theorem};
use glmn_core::{
    all_linear_extensions, congruent_zero, forward, inverse, is_mixed_highest_weight,
    is_relevant_orbit, is_standard_dominant, orbit_representative, order_v1, order_v2,
    positive_roots, split_theta, Action, BorelWord, GroupConvention, Modulus, SuperRank, Weight,
    WeightBox,
};
use proptest::prelude::*;

const PRIMES: [u32; 5] = [2, 3, 5, 7, 11];

fn modulus() -> impl Strategy<Value = Modulus> {
    prop_oneof![Just(0u32), proptest::sample::select(PRIMES.to_vec())]
        .prop_map(|p| Modulus::new(p).unwrap())
}

fn prime() -> impl Strategy<Value = Modulus> {
    proptest::sample::select(PRIMES.to_vec()).prop_map(|p| Modulus::new(p).unwrap())
}

fn rank() -> impl Strategy<Value = SuperRank> {
    (0usize..=4, 1usize..=3).prop_map(|(m, extra)| SuperRank::new(m, m + extra).unwrap())
}

fn weight_in(rank: SuperRank, range: i64) -> impl Strategy<Value = Weight> {
    (
        prop::collection::vec(-range..=range, rank.m()),
        prop::collection::vec(-range..=range, rank.n()),
    )
        .prop_map(|(l, t)| Weight::new(l, t))
}

fn ranked_weight(range: i64) -> impl Strategy<Value = (SuperRank, Weight)> {
    rank().prop_flat_map(move |r| (Just(r), weight_in(r, range)))
}

fn sorted_desc(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn ranked_dominant(range: i64) -> impl Strategy<Value = (SuperRank, Weight)> {
    ranked_weight(range)
        .prop_map(|(r, w)| (r, Weight::new(sorted_desc(w.lambda), sorted_desc(w.theta))))
}

proptest! {
    #[test]
    fn congruence_periodic(a in -10_000i128..10_000, p in prime()) {
        prop_assert_eq!(
            congruent_zero(a, p),
            congruent_zero(a + i128::from(p.get()), p)
        );
    }

    #[test]
    fn generic_congruence_is_equality(a in -10_000i128..10_000) {
        prop_assert_eq!(congruent_zero(a, Modulus::GENERIC), a == 0);
    }

    #[test]
    fn split_rejoin((r, w) in ranked_weight(50)) {
        let s = split_theta(&w, &r).unwrap();
        prop_assert_eq!(s.head.len(), r.m() + 1);
        prop_assert_eq!(s.rejoin(), w.theta);
    }

    #[test]
    fn roundtrip_any_weight(
        (r, w) in ranked_weight(1_000),
        p in modulus(),
        pick in any::<prop::sample::Index>(),
    ) {
        let exts = all_linear_extensions(r.m(), 1_000_000).unwrap();
        let order = &exts[pick.index(exts.len())];
        let (img, fwd) = forward(&w, p, order, &r).unwrap();
        let (back, inv) = inverse(&img, p, order, &r).unwrap();
        prop_assert_eq!(&back, &w);
        prop_assert_eq!(fwd.records.len(), r.step_count());
        prop_assert_eq!(inv.records.len(), r.step_count());

        let (pre, _) = inverse(&w, p, order, &r).unwrap();
        prop_assert_eq!(forward(&pre, p, order, &r).unwrap().0, w);
    }

    #[test]
    fn sum_conservation_and_dummies((r, w) in ranked_weight(1_000), p in modulus()) {
        for order in [order_v1(r.m()), order_v2(r.m())] {
            let (img, trace) = forward(&w, p, &order, &r).unwrap();
            prop_assert_eq!(img.total(), w.total());
            let (pre, _) = inverse(&w, p, &order, &r).unwrap();
            prop_assert_eq!(pre.total(), w.total());
            for rec in &trace.records {
                prop_assert_eq!(&rec.state_after.theta[r.m() + 1..], &w.theta[r.m() + 1..]);
            }
        }
    }

    #[test]
    fn congruence_memory_per_step((r, w) in ranked_weight(1_000), p in modulus()) {
        for run in [forward, inverse] {
            let (_, trace) = run(&w, p, &order_v1(r.m()), &r).unwrap();
            for rec in &trace.records {
                let (i, j) = (rec.pair.i - 1, rec.pair.j - 1);
                let after = i128::from(rec.state_after.lambda[i])
                    + i128::from(rec.state_after.theta[j]);
                prop_assert!(congruent_zero(after - rec.sum_before, p));
                prop_assert_eq!(rec.action == Action::NoOp, congruent_zero(rec.sum_before, p));
            }
        }
    }

    #[test]
    fn order_invariance_on_dominant((r, w) in ranked_dominant(6), p in modulus()) {
        let (expected, _) = forward(&w, p, &order_v1(r.m()), &r).unwrap();
        for order in all_linear_extensions(r.m(), 1_000_000).unwrap() {
            prop_assert_eq!(&forward(&w, p, &order, &r).unwrap().0, &expected);
        }
    }

    #[test]
    fn image_of_dominant_is_mixed((r, w) in ranked_dominant(8), p in modulus()) {
        let (img, _) = forward(&w, p, &order_v2(r.m()), &r).unwrap();
        prop_assert!(is_mixed_highest_weight(&img, &r, p).unwrap());
    }

    #[test]
    fn monotone_traces((r, w) in ranked_dominant(8), p in modulus()) {
        let m = r.m();
        let (_, t1) = forward(&w, p, &order_v1(m), &r).unwrap();
        for s in t1.states(&w) {
            prop_assert!(s.lambda.windows(2).all(|x| x[0] >= x[1]));
        }
        let (_, t2) = forward(&w, p, &order_v2(m), &r).unwrap();
        for s in t2.states(&w) {
            prop_assert!(s.theta[..=m].windows(2).all(|x| x[0] >= x[1]));
        }
    }

    #[test]
    fn mixed_equals_relevant_uplus((r, w) in ranked_weight(4), p in prime()) {
        prop_assert_eq!(
            is_mixed_highest_weight(&w, &r, p).unwrap(),
            is_relevant_orbit(&w, &r, p, GroupConvention::UPlus).unwrap()
        );
    }

    #[test]
    fn negation_swaps_conventions((r, w) in ranked_weight(4), p in modulus()) {
        prop_assert_eq!(
            is_relevant_orbit(&w, &r, p, GroupConvention::UPlus).unwrap(),
            is_relevant_orbit(&w.negated(), &r, p, GroupConvention::UMinus).unwrap()
        );
    }

    #[test]
    fn generic_relevance_implies_modular((r, w) in ranked_weight(4), p in prime()) {
        for g in [GroupConvention::UMinus, GroupConvention::UPlus] {
            if is_relevant_orbit(&w, &r, Modulus::GENERIC, g).unwrap() {
                prop_assert!(is_relevant_orbit(&w, &r, p, g).unwrap());
            }
        }
    }

    #[test]
    fn mixed_implies_dominant((r, w) in ranked_weight(3), p in modulus()) {
        if is_mixed_highest_weight(&w, &r, p).unwrap() {
            prop_assert!(is_standard_dominant(&w, &r).unwrap());
        }
    }

    #[test]
    fn orbit_representative_injective(
        (r, a) in ranked_weight(3),
        seed in prop::collection::vec(-3i64..=3, 11),
    ) {
        let b = Weight::from_flat(&r, &seed[..r.dim()]).unwrap();
        let (ma, mb) = (orbit_representative(&a, &r).unwrap(), orbit_representative(&b, &r).unwrap());
        prop_assert_eq!(ma == mb, a == b);
    }
}

#[test]
fn orbit_representative_injective_exhaustive() {
    let r = SuperRank::new(1, 3).unwrap();
    let bx = WeightBox::new(-2, 2).unwrap();
    let all: Vec<Weight> = glmn_core::enumerate_box(&r, &bx, 1_000, |_| true)
        .unwrap()
        .collect();
    let reps: BTreeSet<Vec<(usize, usize, i64)>> = all
        .iter()
        .map(|w| orbit_representative(w, &r).unwrap().entries().collect())
        .collect();
    assert_eq!(reps.len(), all.len());
}

#[test]
fn positive_roots_determine_word() {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = vec![];
        for p in perms(n - 1) {
            for k in 0..=p.len() {
                let mut q = p.clone();
                q.insert(k, n);
                out.push(q);
            }
        }
        out
    }
    for (m, n) in [(0, 1), (1, 2), (1, 3), (2, 3)] {
        let r = SuperRank::new(m, n).unwrap();
        let d = m + n;
        let words = perms(d);
        let sets: BTreeSet<_> = words
            .iter()
            .map(|w| {
                let roots = positive_roots(&BorelWord::new(w.clone(), &r).unwrap(), &r).unwrap();
                assert_eq!(roots.len(), d * (d - 1) / 2);
                roots
            })
            .collect();
        assert_eq!(sets.len(), words.len(), "M={m} N={n}");
    }
}

/// Negating *and reversing* each tuple does not exchange the two
/// conventions: the two flips cancel on the chains.
#[test]
fn reversal_does_not_swap_conventions() {
    let r = SuperRank::new(2, 3).unwrap();
    let p = Modulus::GENERIC;
    let w = Weight::new(vec![-2, -2], vec![-2, 2, 2]);
    let rev = Weight::new(vec![2, 2], vec![-2, -2, 2]);
    assert!(!is_relevant_orbit(&w, &r, p, GroupConvention::UPlus).unwrap());
    assert!(is_relevant_orbit(&rev, &r, p, GroupConvention::UMinus).unwrap());
    // Plain negation agrees.
    assert!(!is_relevant_orbit(&w.negated(), &r, p, GroupConvention::UMinus).unwrap());
}

#[test]
fn reports_are_deterministic() {
    let r = SuperRank::new(2, 3).unwrap();
    let p = Modulus::new(3).unwrap();
    let bx = WeightBox::new(-1, 1).unwrap();
    let a = serde_json::to_string(&verify_theorem(&r, p, &bx).unwrap()).unwrap();
    let b = serde_json::to_string(&verify_theorem(&r, p, &bx).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn passing_box_implies_passing_sub_boxes() {
    let r = SuperRank::new(1, 2).unwrap();
    let p = Modulus::new(2).unwrap();
    let outer = WeightBox::new(-3, 3).unwrap();
    assert!(verify_image(&r, p, &outer).unwrap().passed);
    for (lo, hi) in [(-3, 0), (-1, 1), (0, 3), (2, 2)] {
        let inner = WeightBox::new(lo, hi).unwrap();
        assert!(verify_image(&r, p, &inner).unwrap().passed);
    }
}
