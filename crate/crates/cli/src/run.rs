//! Dispatch from a [`RunConfig`] to the library. No combinatorics here.

use std::io::{self, BufRead, Write};

use glmn_core::io::{csv_header, csv_row, parse_weight};
use glmn_core::oracle::Harness;
use glmn_core::roots::hasse_covers;
use glmn_core::{
    enumerate_box, excess_pairs, forward, inverse, is_mixed_highest_weight, is_relevant_orbit,
    is_standard_dominant, orbit_representative, positive_roots, BorelWord, Direction, Error,
    PairIndex, Root, StepRecord, Weight,
};
use serde::Serialize;
use serde_json::Value;

use crate::args::{CheckArg, FilterArg, Format};
use crate::config::{Job, RunConfig};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Capacity { .. } | Error::LimitExceeded { .. } => EXIT_LIMIT,
        Error::InvalidRank { .. }
        | Error::NonPrimeModulus(_)
        | Error::PrimeRequired
        | Error::InvalidBox(_)
        | Error::InvalidOrder(_)
        | Error::InvalidPermutation(_) => EXIT_USAGE,
        _ => EXIT_FAILED,
    }
}

/// Collects rows and writes them as JSON lines, one JSON array, or CSV.
struct Sink<'a> {
    out: &'a mut dyn Write,
    format: Format,
    csv_header: Option<String>,
    buffered: Vec<Value>,
}

impl<'a> Sink<'a> {
    fn new(out: &'a mut dyn Write, format: Format, csv_header: Option<String>) -> Self {
        Self {
            out,
            format,
            csv_header,
            buffered: Vec::new(),
        }
    }

    fn push(&mut self, row: &impl Serialize, csv: impl FnOnce() -> String) -> io::Result<()> {
        match self.format {
            Format::Jsonl => {
                serde_json::to_writer(&mut *self.out, row)?;
                writeln!(self.out)
            }
            Format::Json => {
                self.buffered.push(serde_json::to_value(row)?);
                Ok(())
            }
            Format::Csv => {
                if let Some(h) = self.csv_header.take() {
                    writeln!(self.out, "{h}")?;
                }
                writeln!(self.out, "{}", csv())
            }
        }
    }

    fn finish(self) -> io::Result<()> {
        if self.format == Format::Json {
            serde_json::to_writer(&mut *self.out, &self.buffered)?;
            writeln!(self.out)?;
        }
        self.out.flush()
    }
}

/// Reads weight lines, calling `each` on every well-formed one. Bad lines are
/// reported on `err` with their line number and processing continues.
fn for_each_weight(
    cfg: &RunConfig,
    input: &mut dyn BufRead,
    err: &mut dyn Write,
    mut each: impl FnMut(Weight) -> Result<(), Error>,
) -> io::Result<bool> {
    let mut clean = true;
    for (n, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let result = parse_weight(&line, &cfg.rank).and_then(&mut each);
        if let Err(e) = result {
            writeln!(err, "line {}: {e}", n + 1)?;
            clean = false;
        }
    }
    Ok(clean)
}

#[derive(Serialize)]
struct TracedWeight<'a> {
    lambda: &'a [i64],
    theta: &'a [i64],
    trace: &'a [StepRecord],
}

#[derive(Serialize)]
struct Classification<'a> {
    weight: &'a Weight,
    standard_dominant: bool,
    mixed_highest_weight: bool,
    relevant: bool,
}

#[derive(Serialize)]
struct RootsReport<'a> {
    word: &'a BorelWord,
    positive_roots: Vec<[usize; 2]>,
    excess_pairs: Vec<PairIndex>,
    hasse: Vec<[PairIndex; 2]>,
}

pub fn run(
    cfg: &RunConfig,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<u8> {
    let result = match &cfg.job {
        Job::Transform { direction, trace } => transform(cfg, *direction, *trace, input, out, err),
        Job::Classify => classify(cfg, input, out, err),
        Job::OrbitRep => orbit_rep(cfg, input, out, err),
        Job::Roots { word } => roots(cfg, word, out),
        Job::Enumerate { filter } => enumerate(cfg, *filter, out),
        Job::Verify { checks } => verify(cfg, checks, out),
    };
    match result {
        Ok(code) => Ok(code),
        Err(RunError::Io(e)) => Err(e),
        Err(RunError::Lib(e)) => {
            writeln!(err, "error: {e}")?;
            Ok(exit_code_for(&e))
        }
    }
}

enum RunError {
    Io(io::Error),
    Lib(Error),
}

impl From<io::Error> for RunError {
    fn from(e: io::Error) -> Self {
        RunError::Io(e)
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Lib(e)
    }
}

fn status(clean: bool) -> u8 {
    if clean {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn transform(
    cfg: &RunConfig,
    direction: Direction,
    with_trace: bool,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8, RunError> {
    let step = match direction {
        Direction::Forward => forward,
        Direction::Inverse => inverse,
    };
    let mut sink = Sink::new(out, cfg.format, Some(csv_header(&cfg.rank)));
    let mut io_err = None;
    let clean = for_each_weight(cfg, input, err, |w| {
        let (image, trace) = step(&w, cfg.p, &cfg.order, &cfg.rank)?;
        let r = if with_trace {
            let row = TracedWeight {
                lambda: &image.lambda,
                theta: &image.theta,
                trace: &trace.records,
            };
            sink.push(&row, || csv_row(&image))
        } else {
            sink.push(&image, || csv_row(&image))
        };
        if let Err(e) = r {
            io_err.get_or_insert(e);
        }
        Ok(())
    })?;
    if let Some(e) = io_err {
        return Err(e.into());
    }
    sink.finish()?;
    Ok(status(clean))
}

fn classify(
    cfg: &RunConfig,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8, RunError> {
    let header = format!(
        "{},standard_dominant,mixed_highest_weight,relevant",
        csv_header(&cfg.rank)
    );
    let mut sink = Sink::new(out, cfg.format, Some(header));
    let mut io_err = None;
    let clean = for_each_weight(cfg, input, err, |w| {
        let row = Classification {
            weight: &w,
            standard_dominant: is_standard_dominant(&w, &cfg.rank)?,
            mixed_highest_weight: is_mixed_highest_weight(&w, &cfg.rank, cfg.p)?,
            relevant: is_relevant_orbit(&w, &cfg.rank, cfg.p, cfg.convention)?,
        };
        let csv = || {
            format!(
                "{},{},{},{}",
                csv_row(row.weight),
                row.standard_dominant,
                row.mixed_highest_weight,
                row.relevant
            )
        };
        if let Err(e) = sink.push(&row, csv) {
            io_err.get_or_insert(e);
        }
        Ok(())
    })?;
    if let Some(e) = io_err {
        return Err(e.into());
    }
    sink.finish()?;
    Ok(status(clean))
}

fn orbit_rep(
    cfg: &RunConfig,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8, RunError> {
    let mut io_err = None;
    let clean = for_each_weight(cfg, input, err, |w| {
        let mat = orbit_representative(&w, &cfg.rank)?;
        let r = serde_json::to_writer(&mut *out, &mat)
            .map_err(io::Error::from)
            .and_then(|()| writeln!(out));
        if let Err(e) = r {
            io_err.get_or_insert(e);
        }
        Ok(())
    })?;
    if let Some(e) = io_err {
        return Err(e.into());
    }
    Ok(status(clean))
}

fn roots(cfg: &RunConfig, word: &BorelWord, out: &mut dyn Write) -> Result<u8, RunError> {
    let report = RootsReport {
        word,
        positive_roots: positive_roots(word, &cfg.rank)?
            .into_iter()
            .map(|Root { a, b }| [a, b])
            .collect(),
        excess_pairs: excess_pairs(&cfg.rank)?,
        hasse: hasse_covers(cfg.rank.m())
            .into_iter()
            .map(|(x, y)| [x, y])
            .collect(),
    };
    serde_json::to_writer(&mut *out, &report).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(EXIT_OK)
}

fn enumerate(cfg: &RunConfig, filter: FilterArg, out: &mut dyn Write) -> Result<u8, RunError> {
    let bx = cfg.bx.expect("validated");
    let (rank, p, g) = (cfg.rank, cfg.p, cfg.convention);
    let keep = move |w: &Weight| -> bool {
        let r = match filter {
            FilterArg::All => Ok(true),
            FilterArg::Standard => is_standard_dominant(w, &rank),
            FilterArg::Mixed => is_mixed_highest_weight(w, &rank, p),
            FilterArg::Relevant => is_relevant_orbit(w, &rank, p, g),
        };
        matches!(r, Ok(true))
    };
    let mut sink = Sink::new(out, cfg.format, Some(csv_header(&cfg.rank)));
    for w in enumerate_box(&cfg.rank, &bx, cfg.limits.enumeration, keep)? {
        sink.push(&w, || csv_row(&w))?;
    }
    sink.finish()?;
    Ok(EXIT_OK)
}

fn verify(cfg: &RunConfig, checks: &[CheckArg], out: &mut dyn Write) -> Result<u8, RunError> {
    let bx = cfg.bx.expect("validated");
    let harness = Harness {
        limits: cfg.limits,
        ..Harness::default()
    };
    let (rank, p) = (&cfg.rank, cfg.p);
    let mut all_passed = true;
    for check in checks {
        let report = match check {
            CheckArg::Image => harness.verify_image(rank, p, &bx),
            CheckArg::Roundtrip => harness.verify_roundtrip(rank, p, &bx),
            CheckArg::Order => harness.verify_order_invariance(rank, p, &bx),
            CheckArg::Theorem => harness.verify_theorem(rank, p, &bx),
            CheckArg::Trace => harness.verify_trace_invariants(rank, p, &bx),
            CheckArg::All => unreachable!("expanded during validation"),
        }?;
        all_passed &= report.passed;
        serde_json::to_writer(&mut *out, &report).map_err(io::Error::from)?;
        writeln!(out)?;
    }
    out.flush()?;
    Ok(status(all_passed))
}
