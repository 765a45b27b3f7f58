mod args;
mod commands;
mod error;
mod registry;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::{Cli, Command};
use commands::Context;
use error::{CliError, CliResult, EXIT_CONFIG};

fn run(cli: &Cli, ctx: &Context) -> CliResult<commands::Output> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(CliError::new(EXIT_CONFIG, "--threads must be >= 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::new(EXIT_CONFIG, e.to_string()))?;
    }
    match &cli.command {
        Command::Compute(a) => commands::compute(ctx, a),
        Command::Sweep(a) => commands::sweep(ctx, a),
        Command::Compare(a) => commands::compare(ctx, a),
        Command::Ensemble(a) => commands::ensemble(ctx, a),
        Command::Search(a) => commands::search(ctx, a),
        Command::Saturate(a) => commands::saturate(ctx, a),
        Command::Export(a) => commands::export(ctx, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Context {
        argv: std::env::args().skip(1).collect(),
        strict: cli.strict,
        site_cap: cli.site_cap,
        started: Instant::now(),
    };
    match run(&cli, &ctx) {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(error::EXIT_UNWRITABLE as u8);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
