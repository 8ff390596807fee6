//! Turns parsed arguments into a validated [`RunConfig`], reporting every
//! validation problem at once.

use glmn_core::io::{parse_box, parse_step_order};
use glmn_core::oracle::Limits;
use glmn_core::{
    mixed_word, order_v1, order_v2, BorelWord, Direction, GroupConvention, Modulus, StepOrder,
    SuperRank, WeightBox,
};

use crate::args::{
    CheckArg, Cli, Command, ConventionArg, DirectionArg, FilterArg, Format, RankArgs,
};

#[derive(Debug, Clone)]
pub enum Job {
    Transform { direction: Direction, trace: bool },
    Classify,
    OrbitRep,
    Roots { word: BorelWord },
    Enumerate { filter: FilterArg },
    Verify { checks: Vec<CheckArg> },
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub rank: SuperRank,
    pub p: Modulus,
    pub convention: GroupConvention,
    pub order: StepOrder,
    pub bx: Option<WeightBox>,
    pub format: Format,
    pub limits: Limits,
    pub job: Job,
}

#[derive(Default)]
struct Problems(Vec<String>);

impl Problems {
    fn take<T, E: std::fmt::Display>(&mut self, what: &str, r: Result<T, E>) -> Option<T> {
        r.map_err(|e| self.0.push(format!("{what}: {e}"))).ok()
    }

    fn add(&mut self, msg: impl Into<String>) {
        self.0.push(msg.into());
    }
}

fn convention(c: ConventionArg) -> GroupConvention {
    match c {
        ConventionArg::Uminus => GroupConvention::UMinus,
        ConventionArg::Uplus => GroupConvention::UPlus,
    }
}

fn read_order(spec: &str, m: usize) -> Result<StepOrder, String> {
    match spec {
        "v1" => Ok(order_v1(m)),
        "v2" => Ok(order_v2(m)),
        _ => {
            let path = spec
                .strip_prefix("file:")
                .ok_or_else(|| format!("expected v1, v2 or file:PATH, got {spec:?}"))?;
            let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
            parse_step_order(&text, m).map_err(|e| e.to_string())
        }
    }
}

pub fn build(cli: Cli) -> Result<RunConfig, Vec<String>> {
    let mut problems = Problems::default();

    let rank_args: RankArgs = match &cli.command {
        Command::Transform(a) => a.rank,
        Command::Classify(a) => a.rank,
        Command::OrbitRep(a) => a.rank,
        Command::Roots(a) => a.rank,
        Command::Enumerate(a) => a.rank,
        Command::Verify(a) => a.rank,
    };
    let rank = problems.take("rank", SuperRank::new(rank_args.m, rank_args.n));
    let m = rank_args.m;

    let mut p = Modulus::GENERIC;
    let mut conv = GroupConvention::UPlus;
    let mut order = None;
    let mut bx = None;
    let mut format = Format::Jsonl;
    let mut limits = Limits::default();

    let job = match cli.command {
        Command::Transform(a) => {
            p = problems.take("--p", Modulus::new(a.p)).unwrap_or(p);
            order = problems.take("--order", read_order(&a.order, m));
            format = a.format;
            if a.trace && a.format == Format::Csv {
                problems.add("--trace cannot be written as csv");
            }
            let direction = match a.direction {
                DirectionArg::Forward => Direction::Forward,
                DirectionArg::Inverse => Direction::Inverse,
            };
            Job::Transform {
                direction,
                trace: a.trace,
            }
        }
        Command::Classify(a) => {
            p = problems.take("--p", Modulus::new(a.p)).unwrap_or(p);
            conv = convention(a.convention);
            format = a.format;
            Job::Classify
        }
        Command::OrbitRep(_) => Job::OrbitRep,
        Command::Roots(a) => {
            let word = match (a.word, rank) {
                (Some(w), Some(r)) => problems.take("--word", BorelWord::new(w, &r)),
                (None, Some(r)) => Some(mixed_word(&r)),
                (_, None) => None,
            };
            match word {
                Some(word) => Job::Roots { word },
                // discarded below: a problem has been recorded
                None => Job::OrbitRep,
            }
        }
        Command::Enumerate(a) => {
            p = problems.take("--p", Modulus::new(a.p)).unwrap_or(p);
            conv = convention(a.convention);
            bx = problems.take("--box", parse_box(&a.bx));
            format = a.format;
            if let Some(l) = a.limit {
                limits.enumeration = l;
            }
            Job::Enumerate { filter: a.filter }
        }
        Command::Verify(a) => {
            p = problems.take("--p", Modulus::new(a.p)).unwrap_or(p);
            bx = problems.take("--box", parse_box(&a.bx));
            if let Some(l) = a.limit {
                limits.enumeration = l;
            }
            if let Some(c) = a.cap {
                if c == 0 {
                    problems.add("--cap must be positive");
                }
                limits.extension_cap = c;
            }
            if let Some(f) = a.max_failures {
                limits.failure_cap = f;
            }
            let checks = match a.check {
                CheckArg::All => {
                    let mut all = vec![CheckArg::Image, CheckArg::Roundtrip, CheckArg::Order];
                    // The theorem is stated for prime p only.
                    if !p.is_generic() {
                        all.push(CheckArg::Theorem);
                    }
                    all.push(CheckArg::Trace);
                    all
                }
                CheckArg::Theorem if a.p == 0 => {
                    problems.add("--check theorem requires a prime --p");
                    vec![]
                }
                c => vec![c],
            };
            Job::Verify { checks }
        }
    };

    match (rank, problems.0.is_empty()) {
        (Some(rank), true) => Ok(RunConfig {
            rank,
            p,
            convention: conv,
            order: order.unwrap_or_else(|| order_v1(m)),
            bx,
            format,
            limits,
            job,
        }),
        _ => Err(problems.0),
    }
}
