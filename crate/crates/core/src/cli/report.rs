//! Run configuration and the JSON report every command emits.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::dataset::DatasetError;

/// The effective settings of a run, echoed into its report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub prime: u64,
    pub seed: u64,
    pub samples: usize,
    pub degree_bound: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
    /// Command-specific options such as a projection centre or a node count.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub extra: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantCheck {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl InvariantCheck {
    pub fn new(name: &str, passed: bool) -> Self {
        Self { name: name.to_string(), passed, detail: None }
    }

    pub fn with_detail(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self { name: name.to_string(), passed, detail: Some(detail.into()) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub config: RunConfig,
    pub results: Value,
    pub invariants: Vec<InvariantCheck>,
    /// Wall-clock seconds; present only when requested, so default reports
    /// are reproducible byte for byte.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.invariants.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.invariants.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

pub fn store_report(path: &Path, report: &Report) -> std::io::Result<()> {
    std::fs::write(path, report.to_json())
}

pub fn load_report(path: &Path) -> Result<Report, DatasetError> {
    let source = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| DatasetError {
        source: source.clone(),
        line: None,
        column: None,
        field: None,
        message: e.to_string(),
    })?;
    serde_json::from_str(&text).map_err(|e| DatasetError {
        source,
        line: Some(e.line()),
        column: Some(e.column()),
        field: None,
        message: e.to_string(),
    })
}
