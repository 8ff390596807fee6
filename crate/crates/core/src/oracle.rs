//! Exhaustive verification over boxes of weights.
//!
//! Every check streams the weights of a box `[lo, hi]^(M+N)`, keeps only the
//! failures, and returns a [`VerificationReport`]. Work is split by the value
//! of the first coordinate and the partial reports are merged; failures are
//! sorted before capping, so the result does not depend on the split.

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    is_mixed_highest_weight, is_relevant_orbit, is_standard_dominant, GroupConvention,
};
use crate::error::{Error, Result};
use crate::serganova::{self, all_linear_extensions, order_v1, order_v2, Action, StepOrder, Trace};
use crate::weight::{congruent_zero, Modulus, SuperRank, Weight};

pub const DEFAULT_ENUMERATION_LIMIT: u128 = 10_000_000;
pub const DEFAULT_FAILURE_CAP: usize = 20;
pub const DEFAULT_EXTENSION_CAP: usize = 100_000;

/// Every coordinate of `λ` and `θ` ranges over `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct WeightBox {
    lo: i64,
    hi: i64,
}

impl WeightBox {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidBox(format!("lo {lo} > hi {hi}")));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn contains(&self, w: &Weight) -> bool {
        w.lambda
            .iter()
            .chain(&w.theta)
            .all(|x| (self.lo..=self.hi).contains(x))
    }

    /// `(hi - lo + 1)^dim`, saturating.
    pub fn cardinality(&self, dim: usize) -> u128 {
        let side = (i128::from(self.hi) - i128::from(self.lo) + 1) as u128;
        let exp = u32::try_from(dim).unwrap_or(u32::MAX);
        side.checked_pow(exp).unwrap_or(u128::MAX)
    }

    fn check_limit(&self, rank: &SuperRank, limit: u128) -> Result<()> {
        let size = self.cardinality(rank.dim());
        if size > limit {
            return Err(Error::LimitExceeded {
                lo: self.lo,
                hi: self.hi,
                dim: rank.dim(),
                size,
                limit,
            });
        }
        Ok(())
    }
}

/// Odometer over a box in lexicographic order, optionally with the first
/// coordinate pinned.
#[derive(Debug, Clone)]
pub struct BoxIter {
    rank: SuperRank,
    lo: i64,
    hi: i64,
    pinned: usize,
    next: Option<Vec<i64>>,
}

impl BoxIter {
    fn new(rank: SuperRank, bx: WeightBox, first: Option<i64>) -> Self {
        let mut start = vec![bx.lo; rank.dim()];
        if let Some(x) = first {
            start[0] = x;
        }
        Self {
            rank,
            lo: bx.lo,
            hi: bx.hi,
            pinned: usize::from(first.is_some()),
            next: Some(start),
        }
    }
}

impl Iterator for BoxIter {
    type Item = Weight;

    fn next(&mut self) -> Option<Weight> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut pos = succ.len();
        loop {
            if pos == self.pinned {
                break;
            }
            pos -= 1;
            if succ[pos] < self.hi {
                succ[pos] += 1;
                self.next = Some(succ);
                break;
            }
            succ[pos] = self.lo;
        }
        let (lambda, theta) = cur.split_at(self.rank.m());
        Some(Weight::new(lambda.to_vec(), theta.to_vec()))
    }
}

/// All weights of `bx` accepted by `filter`, in lexicographic order of
/// `(λ, θ)` flattened.
pub fn enumerate_box<F>(
    rank: &SuperRank,
    bx: &WeightBox,
    limit: u128,
    filter: F,
) -> Result<impl Iterator<Item = Weight>>
where
    F: Fn(&Weight) -> bool,
{
    bx.check_limit(rank, limit)?;
    Ok(BoxIter::new(*rank, *bx, None).filter(move |w| filter(w)))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub weight: Weight,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub total: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extensions: Option<usize>,
}

impl VerificationReport {
    fn empty(check_name: &str) -> Self {
        Self {
            check_name: check_name.to_owned(),
            total: 0,
            failure_count: 0,
            failures: Vec::new(),
            passed: true,
            extensions: None,
        }
    }

    /// Associative merge; keeps the `cap` smallest failures.
    pub fn merge(mut self, other: VerificationReport, cap: usize) -> Self {
        self.total += other.total;
        self.failure_count += other.failure_count;
        self.failures.extend(other.failures);
        self.failures.sort();
        self.failures.truncate(cap);
        self.passed = self.failure_count == 0;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub enumeration: u128,
    pub failure_cap: usize,
    pub extension_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            enumeration: DEFAULT_ENUMERATION_LIMIT,
            failure_cap: DEFAULT_FAILURE_CAP,
            extension_cap: DEFAULT_EXTENSION_CAP,
        }
    }
}

pub type TransformFn = fn(&Weight, Modulus, &StepOrder, &SuperRank) -> Result<(Weight, Trace)>;
pub type MixedFn = fn(&Weight, &SuperRank, Modulus) -> Result<bool>;
pub type RelevantFn = fn(&Weight, &SuperRank, Modulus, GroupConvention) -> Result<bool>;

/// The implementations a check is run against. [`Harness::default`] uses the
/// library's own; tests swap in broken ones to show the checks can fail.
#[derive(Debug, Clone, Copy)]
pub struct Harness {
    pub forward: TransformFn,
    pub inverse: TransformFn,
    pub mixed: MixedFn,
    pub relevant: RelevantFn,
    /// Orbit convention compared against the mixed highest weights.
    pub convention: GroupConvention,
    pub limits: Limits,
}

impl Default for Harness {
    fn default() -> Self {
        Self {
            forward: serganova::forward,
            inverse: serganova::inverse,
            mixed: is_mixed_highest_weight,
            relevant: is_relevant_orbit,
            convention: GroupConvention::UPlus,
            limits: Limits::default(),
        }
    }
}

/// Per-weight sink: counts instances and collects failures.
struct Tally<'a> {
    w: &'a Weight,
    total: u64,
    failures: Vec<Failure>,
}

impl Tally<'_> {
    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(Failure {
                weight: self.w.clone(),
                detail: detail(),
            });
        }
    }
}

fn dominant(w: &Weight, rank: &SuperRank) -> bool {
    matches!(is_standard_dominant(w, rank), Ok(true))
}

impl Harness {
    fn scan<F>(
        &self,
        name: &str,
        rank: &SuperRank,
        bx: &WeightBox,
        body: F,
    ) -> Result<VerificationReport>
    where
        F: Fn(&mut Tally<'_>) -> Result<()> + Sync,
    {
        bx.check_limit(rank, self.limits.enumeration)?;
        let cap = self.limits.failure_cap;
        let parts: Vec<VerificationReport> = (bx.lo..=bx.hi)
            .into_par_iter()
            .map(|first| {
                let mut report = VerificationReport::empty(name);
                for w in BoxIter::new(*rank, *bx, Some(first)) {
                    let mut tally = Tally {
                        w: &w,
                        total: 0,
                        failures: Vec::new(),
                    };
                    body(&mut tally)?;
                    report.total += tally.total;
                    report.failure_count += tally.failures.len() as u64;
                    report.failures.extend(tally.failures);
                    if report.failures.len() > 2 * cap {
                        report.failures.sort();
                        report.failures.truncate(cap);
                    }
                }
                report.failures.sort();
                report.failures.truncate(cap);
                Ok(report)
            })
            .collect::<Result<_>>()?;
        Ok(parts
            .into_iter()
            .fold(VerificationReport::empty(name), |acc, r| acc.merge(r, cap)))
    }

    /// The image of the standard-dominant set is exactly the mixed set:
    /// forward lands in it and inverts, and every mixed weight comes from a
    /// dominant one.
    pub fn verify_image(
        &self,
        rank: &SuperRank,
        p: Modulus,
        bx: &WeightBox,
    ) -> Result<VerificationReport> {
        let order = order_v1(rank.m());
        self.scan("image", rank, bx, |t| {
            let w = t.w;
            if dominant(w, rank) {
                t.total += 1;
                let (img, _) = (self.forward)(w, p, &order, rank)?;
                let in_mixed = (self.mixed)(&img, rank, p)?;
                t.check(in_mixed, || {
                    format!("forward gives {img}, not a mixed highest weight")
                });
                let (back, _) = (self.inverse)(&img, p, &order, rank)?;
                t.check(back == *w, || format!("inverse(forward) gives {back}"));
            }
            if (self.mixed)(w, rank, p)? {
                t.total += 1;
                let (pre, _) = (self.inverse)(w, p, &order, rank)?;
                t.check(dominant(&pre, rank), || {
                    format!("inverse gives {pre}, not standard-dominant")
                });
                let (again, _) = (self.forward)(&pre, p, &order, rank)?;
                t.check(again == *w, || format!("forward(inverse) gives {again}"));
            }
            Ok(())
        })
    }

    /// `inverse ∘ forward = id` on every weight of the box (dominant or not)
    /// for both canonical orders, and `forward ∘ inverse = id` on the mixed
    /// weights of the box.
    pub fn verify_roundtrip(
        &self,
        rank: &SuperRank,
        p: Modulus,
        bx: &WeightBox,
    ) -> Result<VerificationReport> {
        let orders = [("v1", order_v1(rank.m())), ("v2", order_v2(rank.m()))];
        self.scan("roundtrip", rank, bx, |t| {
            let w = t.w;
            let mixed = (self.mixed)(w, rank, p)?;
            for (name, order) in &orders {
                t.total += 1;
                let (img, _) = (self.forward)(w, p, order, rank)?;
                let (back, _) = (self.inverse)(&img, p, order, rank)?;
                t.check(back == *w, || {
                    format!("{name}: inverse(forward) gives {back}")
                });
                if mixed {
                    t.total += 1;
                    let (pre, _) = (self.inverse)(w, p, order, rank)?;
                    let (again, _) = (self.forward)(&pre, p, order, rank)?;
                    t.check(again == *w, || {
                        format!("{name}: forward(inverse) gives {again}")
                    });
                }
            }
            Ok(())
        })
    }

    /// Every linear extension gives the same result on dominant weights.
    pub fn verify_order_invariance(
        &self,
        rank: &SuperRank,
        p: Modulus,
        bx: &WeightBox,
    ) -> Result<VerificationReport> {
        let reference = order_v1(rank.m());
        let extensions = all_linear_extensions(rank.m(), self.limits.extension_cap)?;
        let mut report = self.scan("order", rank, bx, |t| {
            let w = t.w;
            if !dominant(w, rank) {
                return Ok(());
            }
            let (expected, _) = (self.forward)(w, p, &reference, rank)?;
            for order in &extensions {
                t.total += 1;
                let (got, _) = (self.forward)(w, p, order, rank)?;
                t.check(got == expected, || {
                    format!(
                        "order {} gives {got}, order v1 gives {expected}",
                        serde_json::to_string(order).unwrap_or_default()
                    )
                });
            }
            Ok(())
        })?;
        report.extensions = Some(extensions.len());
        Ok(report)
    }

    /// The relevant-orbit predicate agrees with membership in the image of
    /// the algorithm, computed by inverting and checking dominance.
    pub fn verify_theorem(
        &self,
        rank: &SuperRank,
        p: Modulus,
        bx: &WeightBox,
    ) -> Result<VerificationReport> {
        if p.is_generic() {
            return Err(Error::PrimeRequired);
        }
        let order = order_v1(rank.m());
        self.scan("theorem", rank, bx, |t| {
            let w = t.w;
            t.total += 1;
            let relevant = (self.relevant)(w, rank, p, self.convention)?;
            let (pre, _) = (self.inverse)(w, p, &order, rank)?;
            let in_image = dominant(&pre, rank) && (self.forward)(&pre, p, &order, rank)?.0 == *w;
            t.check(relevant == in_image, || {
                format!("relevant={relevant} but in image of algorithm={in_image}")
            });
            Ok(())
        })
    }

    /// Step-level facts from the proof of the image characterization.
    pub fn verify_trace_invariants(
        &self,
        rank: &SuperRank,
        p: Modulus,
        bx: &WeightBox,
    ) -> Result<VerificationReport> {
        let (v1, v2) = (order_v1(rank.m()), order_v2(rank.m()));
        let m = rank.m();
        self.scan("trace", rank, bx, |t| {
            let w = t.w;
            if !dominant(w, rank) {
                return Ok(());
            }
            t.total += 1;
            let (_, tr1) = (self.forward)(w, p, &v1, rank)?;
            let (_, tr2) = (self.forward)(w, p, &v2, rank)?;

            for (k, s) in tr1.states(w).enumerate() {
                let ok = s.lambda.windows(2).all(|x| x[0] >= x[1]);
                t.check(ok, || {
                    format!("v1 state {k}: lambda {:?} not non-increasing", s.lambda)
                });
            }
            for (k, s) in tr2.states(w).enumerate() {
                let ok = s.theta[..=m].windows(2).all(|x| x[0] >= x[1]);
                t.check(ok, || {
                    format!(
                        "v2 state {k}: theta head {:?} not non-increasing",
                        &s.theta[..=m]
                    )
                });
            }
            for (name, tr) in [("v1", &tr1), ("v2", &tr2)] {
                check_steps(t, name, tr, p, m);
            }
            Ok(())
        })
    }
}

fn check_steps(t: &mut Tally<'_>, name: &str, tr: &Trace, p: Modulus, m: usize) {
    let w = t.w;
    let total = w.total();
    let mut prev = w.clone();
    for rec in &tr.records {
        let s = &rec.state_after;
        let k = rec.k;
        t.check(s.total() == total, || {
            format!("{name} step {k}: coordinate sum changed")
        });

        let (i, j) = (rec.pair.i - 1, rec.pair.j - 1);
        let after = i128::from(s.lambda[i]) + i128::from(s.theta[j]);
        t.check(congruent_zero(after - rec.sum_before, p), || {
            format!(
                "{name} step {k}: sum at {} went {} -> {after}",
                rec.pair, rec.sum_before
            )
        });

        let noop = congruent_zero(rec.sum_before, p);
        t.check(noop == (rec.action == Action::NoOp), || {
            format!(
                "{name} step {k}: action {:?} with sum {}",
                rec.action, rec.sum_before
            )
        });

        let mut expected = prev.clone();
        if rec.action == Action::Move {
            expected.lambda[i] -= 1;
            expected.theta[j] += 1;
        }
        t.check(*s == expected, || {
            format!("{name} step {k}: state {s}, expected {expected}")
        });

        t.check(s.theta[m + 1..] == w.theta[m + 1..], || {
            format!("{name} step {k}: entries past theta_{} changed", m + 1)
        });
        prev = s.clone();
    }
}

pub fn verify_image(rank: &SuperRank, p: Modulus, bx: &WeightBox) -> Result<VerificationReport> {
    Harness::default().verify_image(rank, p, bx)
}

pub fn verify_roundtrip(
    rank: &SuperRank,
    p: Modulus,
    bx: &WeightBox,
) -> Result<VerificationReport> {
    Harness::default().verify_roundtrip(rank, p, bx)
}

pub fn verify_order_invariance(
    rank: &SuperRank,
    p: Modulus,
    bx: &WeightBox,
    cap: usize,
) -> Result<VerificationReport> {
    let mut h = Harness::default();
    h.limits.extension_cap = cap;
    h.verify_order_invariance(rank, p, bx)
}

pub fn verify_theorem(rank: &SuperRank, p: Modulus, bx: &WeightBox) -> Result<VerificationReport> {
    Harness::default().verify_theorem(rank, p, bx)
}

pub fn verify_trace_invariants(
    rank: &SuperRank,
    p: Modulus,
    bx: &WeightBox,
) -> Result<VerificationReport> {
    Harness::default().verify_trace_invariants(rank, p, bx)
}
