use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;
pub const EXIT_DIAGRAM: i32 = 4;

/// Exit code for a library error.
pub fn exit_code(e: &singcoh::Error) -> i32 {
    use singcoh::Error::*;
    match e {
        BoxTooLarge { .. } => EXIT_BUDGET,
        Invariant(_) | NonTermination(_) => EXIT_INVARIANT,
        Diagram(_) => EXIT_DIAGRAM,
        Parse { .. }
        | Disconnected
        | NotATree
        | NotDefinite
        | NotGorenstein
        | IndexMismatch { .. }
        | InvalidPath(_)
        | InvalidArgument(_) => EXIT_PARSE,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub input_sha256: String,
    pub results: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    pub skipped: Vec<String>,
}

impl Report {
    pub fn new(command: String, inputs: &[&[u8]]) -> Self {
        let mut h = Sha256::new();
        for i in inputs {
            h.update((i.len() as u64).to_le_bytes());
            h.update(i);
        }
        Report {
            command,
            input_sha256: hex::encode(h.finalize()),
            ..Default::default()
        }
    }

    pub fn set(&mut self, name: impl Into<String>, value: impl ToString) {
        self.results.insert(name.into(), value.to_string());
    }

    pub fn check(&mut self, name: impl Into<String>, got: impl ToString, expected: impl ToString) {
        let (got, expected) = (got.to_string(), expected.to_string());
        self.checks.push(Check {
            name: name.into(),
            pass: got == expected,
            expected,
            got,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Exit code from the checks and budget skips.
    pub fn exit_code(&self) -> i32 {
        if !self.all_pass() {
            EXIT_INVARIANT
        } else if !self.skipped.is_empty() {
            EXIT_BUDGET
        } else {
            EXIT_OK
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command);
        let _ = writeln!(s, "input sha256: {}", self.input_sha256);
        if !self.results.is_empty() {
            let w = self.results.keys().map(|k| k.len()).max().unwrap_or(0);
            let _ = writeln!(s, "results:");
            for (k, v) in &self.results {
                let _ = writeln!(s, "  {k:<w$}  {v}");
            }
        }
        if !self.checks.is_empty() {
            let _ = writeln!(s, "checks:");
            for c in &self.checks {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "  [{tag}] {}: expected {}, got {}", c.name, c.expected, c.got);
            }
        }
        for sk in &self.skipped {
            let _ = writeln!(s, "budget-skipped: {sk}");
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }
}
