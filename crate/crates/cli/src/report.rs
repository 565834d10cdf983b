//! Report schema (JSON).

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One asserted equality, with both sides rendered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub values: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    /// Wall-clock milliseconds per suite; excluded from determinism comparisons.
    pub timings_ms: BTreeMap<String, u64>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.suites.iter().all(|s| s.status != Status::Fail)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }

    /// The report with timing fields cleared.
    pub fn without_timings(&self) -> Report {
        Report {
            timings_ms: BTreeMap::new(),
            ..self.clone()
        }
    }
}

/// Accumulates checks and values for one suite.
#[derive(Default)]
pub struct SuiteBuilder {
    checks: Vec<Check>,
    values: BTreeMap<String, Value>,
}

impl SuiteBuilder {
    pub fn eq<T: Display + PartialEq>(&mut self, name: &str, lhs: T, rhs: T) -> bool {
        let pass = lhs == rhs;
        self.checks.push(Check {
            name: name.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass,
        });
        pass
    }

    pub fn holds(&mut self, name: &str, cond: bool) -> bool {
        self.eq(name, cond, true)
    }

    pub fn value(&mut self, key: &str, v: impl Serialize) {
        self.values
            .insert(key.to_string(), serde_json::to_value(v).expect("serializable"));
    }

    pub fn finish(self, name: &str) -> SuiteReport {
        let status = if self.checks.iter().all(|c| c.pass) {
            Status::Pass
        } else {
            Status::Fail
        };
        SuiteReport {
            name: name.to_string(),
            status,
            checks: self.checks,
            values: self.values,
            error: None,
        }
    }
}
