//! Default tolerances of the check suites, in one place.
//!
//! Values are resolved in three layers: built-in defaults, then an optional
//! `key = value` file named by `SHARPNORM_TOLERANCES`, then `--set key=value`
//! flags.

use std::collections::BTreeMap;
use std::path::Path;

use thiserror::Error;

pub const ENV_VAR: &str = "SHARPNORM_TOLERANCES";

#[derive(Debug, Error)]
pub enum ToleranceError {
    #[error("unknown tolerance key `{0}`")]
    UnknownKey(String),
    #[error("tolerance `{key}` has invalid value `{value}`")]
    BadValue { key: String, value: String },
    #[error("line {line}: expected `key = value`")]
    BadLine { line: usize },
    #[error("cannot read tolerance file {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

const DEFAULTS: &[(&str, f64)] = &[
    ("sharp_constant", 1e-12),
    ("majorization", 1e-10),
    ("exterior_identity", 1e-9),
    ("mean_value", 1e-8),
    ("mean_value_selftest", 1e-10),
    ("zero_sum", 1e-9),
    ("profile", 1e-10),
    ("extremal_gap", 0.02),
    ("extremal_upper_slack", 1e-9),
    ("quad_rel", 1e-12),
    ("boundary_integral", 1e-6),
    ("circle_residual", 1e-6),
    ("circle_convergence", 0.01),
    ("circle_slope", 0.3),
    ("norm_bound", 1e-6),
    ("extremal_approach", 0.95),
];

#[derive(Debug, Clone, PartialEq)]
pub struct Tolerances {
    values: BTreeMap<String, f64>,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { values: DEFAULTS.iter().map(|(k, v)| (k.to_string(), *v)).collect() }
    }
}

impl Tolerances {
    /// Built-ins overridden by the file in `SHARPNORM_TOLERANCES`, if set.
    pub fn from_env() -> Result<Self, ToleranceError> {
        let mut t = Tolerances::default();
        if let Some(path) = std::env::var_os(ENV_VAR) {
            t.apply_file(Path::new(&path))?;
        }
        Ok(t)
    }

    pub fn get(&self, key: &str) -> f64 {
        *self.values.get(key).unwrap_or_else(|| panic!("tolerance `{key}` has no default"))
    }

    pub fn set(&mut self, key: &str, value: f64) -> Result<(), ToleranceError> {
        match self.values.get_mut(key) {
            Some(v) if value.is_finite() && value >= 0.0 => {
                *v = value;
                Ok(())
            }
            Some(_) => Err(ToleranceError::BadValue { key: key.into(), value: value.to_string() }),
            None => Err(ToleranceError::UnknownKey(key.into())),
        }
    }

    /// Applies one `key=value` assignment.
    pub fn apply_assignment(&mut self, text: &str) -> Result<(), ToleranceError> {
        let (key, value) = text.split_once('=').ok_or(ToleranceError::BadLine { line: 1 })?;
        let (key, value) = (key.trim(), value.trim());
        let parsed = value
            .parse::<f64>()
            .map_err(|_| ToleranceError::BadValue { key: key.into(), value: value.into() })?;
        self.set(key, parsed)
    }

    pub fn apply_str(&mut self, text: &str) -> Result<(), ToleranceError> {
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if !line.contains('=') {
                return Err(ToleranceError::BadLine { line: i + 1 });
            }
            self.apply_assignment(line)?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), ToleranceError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ToleranceError::Io { path: path.display().to_string(), source })?;
        self.apply_str(&text)
    }

    pub fn entries(&self) -> &BTreeMap<String, f64> {
        &self.values
    }

    pub fn keys() -> impl Iterator<Item = &'static str> {
        DEFAULTS.iter().map(|(k, _)| *k)
    }
}
