//! Run manifests: what was run, with which tolerances and seed, and what came out.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::Context;
use serde::{Deserialize, Serialize};
use sharpnorm_core::{CheckReport, Location};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// An inequality that must hold; failures set exit code 1.
    Check,
    /// A convergence-rate target; reported but does not affect the exit code.
    Diagnostic,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LocationSummary {
    Point([f64; 2]),
    Angle(f64),
    Parameter(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub suite: String,
    pub check: String,
    pub kind: CheckKind,
    /// `None` when the margin is not finite.
    pub worst_violation: Option<f64>,
    pub location: Option<LocationSummary>,
    pub samples: usize,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckSummary {
    pub fn new(suite: &str, kind: CheckKind, report: &CheckReport) -> Self {
        let finite = |x: f64| x.is_finite().then_some(x);
        let location = match report.worst_location {
            Location::Point(z) => Some(LocationSummary::Point([z.re, z.im])),
            Location::Angle(t) => Some(LocationSummary::Angle(t)),
            Location::Parameter(x) => Some(LocationSummary::Parameter(x)),
            Location::None => None,
        };
        CheckSummary {
            suite: suite.to_string(),
            check: report.check_name.to_string(),
            kind,
            worst_violation: finite(report.worst_violation),
            location,
            samples: report.samples,
            tolerance: report.tolerance,
            pass: report.pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub tolerances: BTreeMap<String, f64>,
    pub seed: u64,
    pub timestamp: String,
    pub results: Vec<CheckSummary>,
}

impl RunManifest {
    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        let text = serde_json::to_string_pretty(self)?;
        std::fs::write(path, text + "\n").with_context(|| format!("writing manifest {}", path.display()))
    }

    pub fn read(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading manifest {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing manifest {}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_exact() {
        let report = CheckReport::from_margin("x", 0.1 + 0.2, Location::Angle(1.0 / 3.0), 7, 1e-9);
        let m = RunManifest {
            command: "certify".into(),
            parameters: BTreeMap::from([("p".into(), "1.5".into())]),
            tolerances: BTreeMap::from([("majorization".into(), 1e-10)]),
            seed: 3,
            timestamp: "t".into(),
            results: vec![CheckSummary::new("s", CheckKind::Check, &report)],
        };
        let back: RunManifest = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(back, m);
    }
}
