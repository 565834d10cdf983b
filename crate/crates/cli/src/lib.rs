//! Batch runner: loads a scenario, runs the selected suites, writes a JSON
//! report.

pub mod config;
pub mod report;
pub mod suites;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use config::{Scenario, ScenarioConfig, SUITES};
pub use report::{Check, Report, Status, SuiteReport, SCHEMA_VERSION};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error("suite failure: {0}")]
    SuiteFailure(String),
    #[error("cannot write report: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ConfigInvalid(_) => 2,
            CliError::SuiteFailure(_) => 1,
            CliError::Output(_) => 2,
        }
    }
}

/// Options beyond the config file.
#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub output: Option<PathBuf>,
    /// Overrides the config's suite list when non-empty.
    pub suites: Vec<String>,
    pub seed: Option<u64>,
}

/// Runs the suites in `SUITES` order. Each suite gets its own RNG stream
/// derived from the seed and its position, so selection does not change results.
pub fn run_scenario(s: &Scenario, selected: &[String]) -> Report {
    let seed = s.config.seed;
    let mut suites = Vec::new();
    let mut timings = BTreeMap::new();
    for (idx, name) in SUITES.iter().enumerate() {
        if !selected.iter().any(|x| x == name) {
            continue;
        }
        log::info!("running suite {name}");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(idx as u64);
        let start = Instant::now();
        let r = suites::run_suite(name, s, &mut rng);
        let ms = start.elapsed().as_millis() as u64;
        log::info!("suite {name}: {:?} in {ms} ms", r.status);
        for c in r.checks.iter().filter(|c| !c.pass) {
            log::warn!("{name}: {} failed: {} != {}", c.name, c.lhs, c.rhs);
        }
        timings.insert(name.to_string(), ms);
        suites.push(r);
    }
    Report {
        schema_version: SCHEMA_VERSION,
        seed,
        suites,
        timings_ms: timings,
    }
}

/// Loads, validates and runs; returns the report, or the error that maps to an exit code.
pub fn execute(config_path: &Path, opts: &RunOptions) -> Result<Report, CliError> {
    let mut cfg = ScenarioConfig::load(config_path)?;
    if !opts.suites.is_empty() {
        cfg.suites = opts.suites.clone();
    }
    if let Some(seed) = opts.seed {
        cfg.seed = seed;
    }
    let scenario = cfg.validate()?;
    let selected = scenario.config.suites.clone();
    let report = run_scenario(&scenario, &selected);
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    match &opts.output {
        Some(p) => std::fs::write(p, json + "\n")?,
        None => writeln!(std::io::stdout(), "{json}")?,
    }
    if report.all_pass() {
        Ok(report)
    } else {
        let failed: Vec<&str> = report
            .suites
            .iter()
            .filter(|s| s.status == Status::Fail)
            .map(|s| s.name.as_str())
            .collect();
        Err(CliError::SuiteFailure(failed.join(", ")))
    }
}

/// Exit code of a run: 0 on success, 1 on a failing suite, 2 on bad input.
pub fn run(config_path: &Path, opts: &RunOptions) -> i32 {
    match execute(config_path, opts) {
        Ok(_) => 0,
        Err(e) => {
            log::error!("{e}");
            e.exit_code()
        }
    }
}
