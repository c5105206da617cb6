//! Command-line front end: parses flags and config files, runs one
//! subcommand and writes its results as CSV or JSON.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::ffi::OsString;

pub use config::{Cli, Command, Format, RunConfig};
pub use error::CliError;

/// Environment variable capping the worker pool.
pub const THREADS_ENV: &str = "COVOSC_THREADS";

/// Runs with explicit arguments (program name first) and returns the exit status.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString>,
{
    match try_run(args.into_iter().map(Into::into).collect()) {
        Ok(()) => 0,
        Err(CliError::Info(text)) => {
            print!("{text}");
            0
        }
        Err(e) => {
            eprintln!("covosc: {}", e.diagnostic());
            e.exit_code()
        }
    }
}

pub fn run_from_env() -> i32 {
    run(std::env::args_os())
}

fn try_run(args: Vec<OsString>) -> Result<(), CliError> {
    configure_threads()?;
    let cli = config::parse_cli(args)?;
    let mut cfg = RunConfig::resolve(cli)?;
    let sink = output::Sink::open(cfg.output.as_deref())?;
    let outcome = commands::execute(&mut cfg)?;
    for w in &outcome.warnings {
        eprintln!("covosc: warning: {w}");
    }
    let table = outcome.table.finalize()?;
    let config = match serde_json::to_value(&cfg).expect("config serializes") {
        serde_json::Value::Object(map) => map,
        _ => unreachable!("RunConfig serializes to an object"),
    };
    sink.commit(&output::render(cfg.format, &config, &table))
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = match raw.trim().parse() {
        Ok(n) if n > 0 => n,
        _ => {
            return Err(CliError::Usage(format!(
                "{THREADS_ENV} must be a positive integer, got '{raw}'"
            )))
        }
    };
    // a pool already built by an earlier call in the same process is kept
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}
