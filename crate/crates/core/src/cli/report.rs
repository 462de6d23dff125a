use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::verdict::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::InputError => 2,
            Status::Inconclusive => 3,
        }
    }
}

/// Machine-readable result of one subcommand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub input: Option<String>,
    pub status: Status,
    pub exit_code: i32,
    pub verdict: Verdict,
    /// Command-specific output (zero sets, complements, search statistics).
    pub data: Value,
    pub elapsed_ms: f64,
}

impl ReportDocument {
    pub fn new(command: &str, input: Option<&str>) -> Self {
        Self {
            command: command.to_string(),
            input: input.map(str::to_string),
            status: Status::Pass,
            exit_code: 0,
            verdict: Verdict::new(),
            data: Value::Null,
            elapsed_ms: 0.0,
        }
    }

    /// Sets status from the verdict unless an inconclusive outcome was already recorded.
    pub fn settle(&mut self) {
        if !self.verdict.pass() {
            self.status = Status::Fail;
        }
        self.exit_code = self.status.exit_code();
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The JSON form with timing removed, for byte-level comparisons.
    pub fn to_json_untimed(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_ms = 0.0;
        copy.to_json()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        if let Some(input) = &self.input {
            let _ = writeln!(out, "  input: {input}");
        }
        for c in &self.verdict.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            let _ = write!(out, "  [{mark}] {}: {}", c.name, c.detail);
            if !c.witness.is_empty() {
                let _ = write!(out, "  witness {:?}", c.witness);
            }
            out.push('\n');
        }
        for (k, v) in &self.verdict.notes {
            let _ = writeln!(out, "  note {k}: {v}");
        }
        if !self.data.is_null() {
            let body = serde_json::to_string_pretty(&self.data).expect("data serializes");
            for line in body.lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        let _ = writeln!(
            out,
            "  result: {:?} (exit {}) in {:.1} ms",
            self.status, self.exit_code, self.elapsed_ms
        );
        out
    }
}

/// Lists below this length are always printed in full.
pub const ELIDE_ABOVE: usize = 40;

/// A full array, or a count with the first and last few entries.
pub fn listing<T: Serialize + Clone>(items: &[T], full: bool) -> Value {
    if full || items.len() <= ELIDE_ABOVE {
        return json!(items);
    }
    json!({
        "count": items.len(),
        "first": items[..10].to_vec(),
        "last": items[items.len() - 10..].to_vec(),
    })
}
