//! Serganova's algorithm from the standard to the mixed Borel, its inverse,
//! and the step orders it may be run in.
//!
//! Each step visits a pair `(i, j)` and looks at `s = λ_i + θ_j`. If `s`
//! vanishes (exactly, or mod `p`) nothing happens; otherwise one unit moves
//! from `λ_i` to `θ_j`. Both outcomes leave `s` unchanged, so the inverse can
//! replay the steps backwards and make the same decisions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::{pair_leq, pair_set, PairIndex};
use crate::weight::{congruent_zero, Modulus, SuperRank, Weight};

/// A linear extension of [`pair_leq`] on the pairs `1 ≤ j ≤ i ≤ M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct StepOrder {
    #[serde(skip)]
    m: usize,
    steps: Vec<PairIndex>,
}

impl StepOrder {
    /// Validates that `steps` lists every pair for `m` exactly once and never
    /// places a pair before one strictly below it.
    pub fn new(steps: Vec<PairIndex>, m: usize) -> Result<Self> {
        let mut sorted = steps.clone();
        sorted.sort();
        if sorted != pair_set(m) {
            return Err(Error::InvalidOrder(format!(
                "expected each pair (i,j) with 1 <= j <= i <= {m} exactly once"
            )));
        }
        for (pos, &later) in steps.iter().enumerate() {
            if let Some(&earlier) = steps[..pos].iter().find(|&&e| pair_leq(later, e)) {
                return Err(Error::InvalidOrder(format!(
                    "{later} must come before {earlier}"
                )));
            }
        }
        Ok(Self { m, steps })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn steps(&self) -> &[PairIndex] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Column by column: `(M,1), (M-1,1), …, (1,1), (M,2), …, (M,M)`.
pub fn order_v1(m: usize) -> StepOrder {
    let steps = (1..=m)
        .flat_map(|j| (j..=m).rev().map(move |i| PairIndex::new(i, j)))
        .collect();
    StepOrder { m, steps }
}

/// Row by row: `(M,1), (M,2), …, (M,M), (M-1,1), …, (1,1)`.
pub fn order_v2(m: usize) -> StepOrder {
    let steps = (1..=m)
        .rev()
        .flat_map(|i| (1..=i).map(move |j| PairIndex::new(i, j)))
        .collect();
    StepOrder { m, steps }
}

/// Every linear extension of [`pair_leq`] for `m`, in lexicographic order
/// (comparing pairs by `(i, j)`). Fails once more than `cap` are found.
pub fn all_linear_extensions(m: usize, cap: usize) -> Result<Vec<StepOrder>> {
    struct Search {
        m: usize,
        cap: usize,
        remaining: Vec<PairIndex>,
        prefix: Vec<PairIndex>,
        out: Vec<StepOrder>,
    }

    impl Search {
        fn go(&mut self) -> Result<()> {
            if self.remaining.is_empty() {
                if self.out.len() == self.cap {
                    return Err(Error::Capacity { cap: self.cap });
                }
                self.out.push(StepOrder {
                    m: self.m,
                    steps: self.prefix.clone(),
                });
                return Ok(());
            }
            // `remaining` stays sorted, so minimal elements are tried in
            // lexicographic order.
            for pos in 0..self.remaining.len() {
                let x = self.remaining[pos];
                let minimal = !self.remaining.iter().any(|&y| y != x && pair_leq(y, x));
                if !minimal {
                    continue;
                }
                self.remaining.remove(pos);
                self.prefix.push(x);
                let r = self.go();
                self.prefix.pop();
                self.remaining.insert(pos, x);
                r?;
            }
            Ok(())
        }
    }

    let mut search = Search {
        m,
        cap,
        remaining: pair_set(m),
        prefix: Vec::new(),
        out: Vec::new(),
    };
    search.go()?;
    Ok(search.out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Inverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Action {
    NoOp,
    Move,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    /// 1-based position in the traversal actually performed.
    pub k: usize,
    pub pair: PairIndex,
    pub action: Action,
    /// `λ_i + θ_j` before the step.
    pub sum_before: i128,
    pub state_after: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub direction: Direction,
    pub order_used: StepOrder,
    pub records: Vec<StepRecord>,
}

impl Trace {
    /// The states visited, starting with `start`.
    pub fn states<'a>(&'a self, start: &'a Weight) -> impl Iterator<Item = &'a Weight> {
        std::iter::once(start).chain(self.records.iter().map(|r| &r.state_after))
    }
}

/// Runs the algorithm on `w`.
pub fn forward(
    w: &Weight,
    p: Modulus,
    order: &StepOrder,
    rank: &SuperRank,
) -> Result<(Weight, Trace)> {
    run(w, p, order, rank, Direction::Forward)
}

/// Replays `order` backwards, undoing each Move.
pub fn inverse(
    w: &Weight,
    p: Modulus,
    order: &StepOrder,
    rank: &SuperRank,
) -> Result<(Weight, Trace)> {
    run(w, p, order, rank, Direction::Inverse)
}

fn run(
    w: &Weight,
    p: Modulus,
    order: &StepOrder,
    rank: &SuperRank,
    direction: Direction,
) -> Result<(Weight, Trace)> {
    w.check(rank)?;
    if order.m != rank.m() {
        return Err(Error::InvalidOrder(format!(
            "order is for M={}, rank has M={}",
            order.m,
            rank.m()
        )));
    }

    let steps: Box<dyn Iterator<Item = &PairIndex>> = match direction {
        Direction::Forward => Box::new(order.steps.iter()),
        Direction::Inverse => Box::new(order.steps.iter().rev()),
    };
    let (dl, dt) = match direction {
        Direction::Forward => (-1, 1),
        Direction::Inverse => (1, -1),
    };

    let mut state = w.clone();
    let mut records = Vec::with_capacity(order.len());
    for (k, &pair) in steps.enumerate() {
        // j ≤ i ≤ M, so θ_{M+1}..θ_N are never addressed.
        let (li, tj) = (pair.i - 1, pair.j - 1);
        let sum = i128::from(state.lambda[li]) + i128::from(state.theta[tj]);
        let action = if congruent_zero(sum, p) {
            Action::NoOp
        } else {
            state.lambda[li] = state.lambda[li].checked_add(dl).ok_or(Error::Overflow)?;
            state.theta[tj] = state.theta[tj].checked_add(dt).ok_or(Error::Overflow)?;
            Action::Move
        };
        records.push(StepRecord {
            k: k + 1,
            pair,
            action,
            sum_before: sum,
            state_after: state.clone(),
        });
    }

    let trace = Trace {
        direction,
        order_used: order.clone(),
        records,
    };
    Ok((state, trace))
}
