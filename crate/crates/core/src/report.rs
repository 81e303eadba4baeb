//! Machine-readable run reports for the CLI: command, parameters, output
//! files, and named checks with measured values against their tolerances.

use serde::Serialize;
use std::collections::BTreeMap;

/// One named check: the measured value must be finite, and `pass` records
/// whether it met `tolerance`.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub measured: f64,
    pub tolerance: f64,
}

impl Check {
    /// A gap-style check: passes when `measured <= tolerance`.
    pub fn gap(name: impl Into<String>, measured: f64, tolerance: f64) -> Self {
        assert!(measured.is_finite(), "check requires a finite measurement");
        Self {
            name: name.into(),
            pass: measured <= tolerance,
            measured,
            tolerance,
        }
    }

    /// A predicate check; `measured` encodes the observation (1 = expected
    /// outcome seen, 0 = not).
    pub fn flag(name: impl Into<String>, ok: bool) -> Self {
        Self {
            name: name.into(),
            pass: ok,
            measured: if ok { 1.0 } else { 0.0 },
            tolerance: 1.0,
        }
    }
}

/// Serializable record of one CLI run.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub outputs: Vec<String>,
    pub checks: Vec<Check>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            parameters: BTreeMap::new(),
            outputs: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn parameter(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.into(), value.to_string());
        self
    }

    pub fn output(&mut self, path: impl Into<String>) {
        self.outputs.push(path.into());
    }

    pub fn check(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend_checks(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}
