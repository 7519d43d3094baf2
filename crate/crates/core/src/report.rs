//! The JSON envelope shared by every CLI command.

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub version: String,
    pub schema: String,
    /// Wall-clock time; the only field that may differ between identical runs.
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value, elapsed_ms: u64) -> Report {
        Report {
            command: command.into(),
            inputs,
            results,
            version: env!("CARGO_PKG_VERSION").into(),
            schema: SCHEMA_VERSION.into(),
            elapsed_ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports are always serializable")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    /// Equality ignoring the timing field.
    pub fn same_content(&self, other: &Report) -> bool {
        Report {
            elapsed_ms: 0,
            ..self.clone()
        } == Report {
            elapsed_ms: 0,
            ..other.clone()
        }
    }
}
