//! `geoslice`: build graphs, query distances and slices, run checks, export figures.

mod config;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use config::Cli;
use run::{CliError, EXIT_USAGE};

/// Size the global pool from `GEOSLICE_THREADS`, if set.
fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("GEOSLICE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::usage(format!("GEOSLICE_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::usage(format!("cannot size the thread pool: {e}")))
}

fn execute() -> Result<i32, CliError> {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return Ok(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let (cfg, dump) = cli.into_config();
    if dump {
        println!("{}", serde_json::to_string_pretty(&cfg).expect("config serializes"));
        return Ok(0);
    }
    configure_threads()?;
    let outcome = run::run(&cfg)?;
    match &cfg.output {
        Some(path) => std::fs::write(path, &outcome.output)
            .map_err(|e| CliError { status: run::EXIT_FAILURE, message: format!("cannot write {}: {e}", path.display()) })?,
        None => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(outcome.output.as_bytes());
        }
    }
    Ok(outcome.status)
}

fn main() -> ExitCode {
    match execute() {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("geoslice: {}", e.message);
            ExitCode::from(e.status as u8)
        }
    }
}
