mod args;
mod config;
mod run;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match config::build(cli) {
        Ok(cfg) => cfg,
        Err(problems) => {
            let mut err = io::stderr().lock();
            for p in problems {
                let _ = writeln!(err, "error: {p}");
            }
            return ExitCode::from(run::EXIT_USAGE);
        }
    };

    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut out = io::BufWriter::new(io::stdout().lock());
    let mut err = io::stderr().lock();
    match run::run(&cfg, &mut input, &mut out, &mut err) {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            ExitCode::from(run::EXIT_FAILED)
        }
    }
}
