use serde_json::{json, Value};

use crate::args::Format;
use crate::error::CliError;

/// What a command produced, in every format it supports.
pub struct Outcome {
    pub params: Value,
    pub seed: Option<u64>,
    pub result: Value,
    pub pretty: String,
    pub csv: Option<String>,
}

impl Outcome {
    pub fn new(params: Value, result: Value, pretty: String) -> Self {
        Self { params, seed: None, result, pretty, csv: None }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }
}

/// Serializes a run. JSON objects keep sorted keys, so fixed inputs give
/// byte-identical output.
pub fn emit(command: &str, outcome: &Outcome, format: Format, wall_ms: Option<u128>) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let mut manifest = json!({
                "version": env!("CARGO_PKG_VERSION"),
                "command": command,
                "params": outcome.params,
                "seed": outcome.seed,
                "result": outcome.result,
            });
            if let Some(ms) = wall_ms {
                manifest["wall_clock_ms"] = json!(ms);
            }
            Ok(format!("{}\n", serde_json::to_string_pretty(&manifest).expect("values serialize")))
        }
        Format::Csv => outcome
            .csv
            .clone()
            .ok_or_else(|| CliError::Usage(format!("`{command}` has no CSV output; use --format json or pretty"))),
        Format::Pretty => Ok(outcome.pretty.clone()),
    }
}
