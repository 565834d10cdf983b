//! Scenario configuration (TOML).

use std::path::Path;

use parahitchin::curve::{CurvePoint, HyperellipticCurve, MarkedCurve};
use parahitchin::kernel::rat::parse_rat;
use parahitchin::kernel::Poly;
use parahitchin::Rat;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Names accepted in `suites`, in the order suites are run and reported.
pub const SUITES: [&str; 8] = [
    "dims",
    "hitchin",
    "spectral",
    "sugawara",
    "centrality",
    "singular",
    "bridge",
    "admissibility",
];

/// A rational number written as an integer or as a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatValue {
    Int(i64),
    Str(String),
}

impl RatValue {
    fn to_rat(&self) -> Result<Rat, CliError> {
        match self {
            RatValue::Int(n) => Ok(Rat::from_integer((*n).into())),
            RatValue::Str(s) => {
                parse_rat(s).ok_or_else(|| CliError::ConfigInvalid(format!("not a rational number: {s:?}")))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    /// Coefficients of `f`, constant term first.
    pub curve_f: Vec<RatValue>,
    pub marked_points: Vec<(RatValue, RatValue)>,
    pub lambda: Vec<i64>,
    #[serde(default = "defaults::series_precision")]
    pub series_precision: usize,
    #[serde(default = "defaults::truncation_depths")]
    pub truncation_depths: Vec<i64>,
    #[serde(default = "defaults::search_budget")]
    pub search_budget: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "defaults::samples")]
    pub samples: usize,
    #[serde(default = "defaults::centrality_degree")]
    pub centrality_degree: i64,
    #[serde(default = "defaults::zero_mode_bound")]
    pub zero_mode_bound: usize,
    #[serde(default = "defaults::singular_max_degree")]
    pub singular_max_degree: i64,
    #[serde(default)]
    pub suites: Vec<String>,
}

mod defaults {
    pub fn series_precision() -> usize {
        8
    }
    pub fn truncation_depths() -> Vec<i64> {
        vec![0, 1, 2]
    }
    pub fn search_budget() -> usize {
        200
    }
    pub fn samples() -> usize {
        10
    }
    pub fn centrality_degree() -> i64 {
        4
    }
    pub fn zero_mode_bound() -> usize {
        2
    }
    pub fn singular_max_degree() -> i64 {
        6
    }
}

/// A validated configuration.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub config: ScenarioConfig,
    pub marked: MarkedCurve,
    pub lambda: Vec<Rat>,
}

impl ScenarioConfig {
    pub fn from_toml(s: &str) -> Result<Self, CliError> {
        toml::from_str(s).map_err(|e| CliError::ConfigInvalid(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let s = std::fs::read_to_string(path)
            .map_err(|e| CliError::ConfigInvalid(format!("{}: {e}", path.display())))?;
        Self::from_toml(&s)
    }

    pub fn validate(self) -> Result<Scenario, CliError> {
        let invalid = |m: String| CliError::ConfigInvalid(m);
        let coeffs = self
            .curve_f
            .iter()
            .map(RatValue::to_rat)
            .collect::<Result<Vec<_>, _>>()?;
        let curve = HyperellipticCurve::new(Poly::new(coeffs)).map_err(|e| invalid(e.to_string()))?;
        let points = self
            .marked_points
            .iter()
            .map(|(x, y)| -> Result<CurvePoint, CliError> {
                curve
                    .point(x.to_rat()?, y.to_rat()?)
                    .map_err(|e| invalid(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let marked = MarkedCurve::new(curve, points).map_err(|e| invalid(e.to_string()))?;
        if self.lambda.len() != marked.n() {
            return Err(invalid(format!(
                "lambda has {} entries for {} marked points",
                self.lambda.len(),
                marked.n()
            )));
        }
        for s in &self.suites {
            if !SUITES.contains(&s.as_str()) {
                return Err(invalid(format!("unknown suite {s:?}")));
            }
        }
        if self.truncation_depths.iter().any(|d| *d < 0) {
            return Err(invalid("truncation depths must be non-negative".into()));
        }
        let lambda = self
            .lambda
            .iter()
            .map(|l| Rat::from_integer((*l).into()))
            .collect();
        Ok(Scenario {
            config: self,
            marked,
            lambda,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const G2N2: &str = r#"
        curve_f = [1, -1, 0, 0, 0, 1]
        marked_points = [[0, 1], [1, 1]]
        lambda = [0, 2]
        suites = ["dims"]
    "#;

    #[test]
    fn parses_and_validates() {
        let c = ScenarioConfig::from_toml(G2N2).unwrap();
        assert_eq!(c.series_precision, 8);
        let s = c.validate().unwrap();
        assert_eq!(s.marked.genus(), 2);
        assert_eq!(s.marked.n(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        let bad_point = G2N2.replace("[1, 1]]", "[1, 2]]");
        assert!(ScenarioConfig::from_toml(&bad_point).unwrap().validate().is_err());
        let bad_lambda = G2N2.replace("[0, 2]", "[0]");
        assert!(ScenarioConfig::from_toml(&bad_lambda)
            .unwrap()
            .validate()
            .is_err());
        let bad_suite = G2N2.replace("\"dims\"", "\"nope\"");
        assert!(ScenarioConfig::from_toml(&bad_suite).unwrap().validate().is_err());
        let fractional = G2N2.replace("[0, 1], [1, 1]", "[\"0/3\", 1], [1, 1]");
        assert!(ScenarioConfig::from_toml(&fractional).unwrap().validate().is_ok());
        assert!(ScenarioConfig::from_toml("curve_f = 3").is_err());
    }
}
