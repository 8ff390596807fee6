//! Text formats: weight JSON lines, step-order files, box specs, CSV rows.
//!
//! These are the entry points for untrusted input and are what the fuzz
//! targets drive.

use crate::error::{Error, Result};
use crate::oracle::WeightBox;
use crate::roots::PairIndex;
use crate::serganova::StepOrder;
use crate::weight::{SuperRank, Weight};

/// Parses one `{"lambda":[..],"theta":[..]}` object and checks its shape.
pub fn parse_weight(text: &str, rank: &SuperRank) -> Result<Weight> {
    let w: Weight = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    w.check(rank)?;
    Ok(w)
}

/// Parses a step order given as a JSON array of `[i, j]` pairs and validates
/// it as a linear extension for `m`.
pub fn parse_step_order(text: &str, m: usize) -> Result<StepOrder> {
    let steps: Vec<PairIndex> =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    StepOrder::new(steps, m)
}

/// Parses `LO:HI`, e.g. `-2:2`.
pub fn parse_box(spec: &str) -> Result<WeightBox> {
    let (lo, hi) = spec
        .split_once(':')
        .ok_or_else(|| Error::InvalidBox(format!("expected LO:HI, got {spec:?}")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|e| Error::InvalidBox(format!("{s:?}: {e}")))
    };
    WeightBox::new(parse(lo)?, parse(hi)?)
}

/// `lambda_1,…,lambda_M,theta_1,…,theta_N`
pub fn csv_header(rank: &SuperRank) -> String {
    (1..=rank.m())
        .map(|i| format!("lambda_{i}"))
        .chain((1..=rank.n()).map(|j| format!("theta_{j}")))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn csv_row(w: &Weight) -> String {
    w.to_flat()
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Inverse of [`csv_row`].
pub fn parse_csv_row(line: &str, rank: &SuperRank) -> Result<Weight> {
    let coords = line
        .split(',')
        .map(|f| {
            f.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("field {f:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Weight::from_flat(rank, &coords)
}
