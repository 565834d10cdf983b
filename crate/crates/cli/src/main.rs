use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use parahitchin_cli::{run, RunOptions};

/// Run parahitchin verification suites on a scenario.
#[derive(Parser, Debug)]
#[command(version, about)]
struct Args {
    /// Scenario file (TOML).
    #[arg(short, long)]
    config: PathBuf,
    /// Report destination (JSON); stdout if omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Suite to run; repeatable. Overrides the config's list.
    #[arg(short, long = "suite")]
    suites: Vec<String>,
    /// Seed override.
    #[arg(long)]
    seed: Option<u64>,
    /// More log output (-v info, -vv debug).
    #[arg(short, long, action = clap::ArgAction::Count)]
    verbose: u8,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let level = match args.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    let opts = RunOptions {
        output: args.output,
        suites: args.suites,
        seed: args.seed,
    };
    ExitCode::from(run(&args.config, &opts) as u8)
}
