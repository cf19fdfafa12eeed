//! Machine-readable reports: every check suite produces a tree of named
//! pass/fail results with human-auditable certificate strings, serialized
//! as JSON with a stable field order so that fixed seeds give
//! byte-identical output.

use serde::{Deserialize, Serialize};

/// One named check with its outcome and a short certificate (residual
/// values, ranks, kernel dimensions, ...).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

impl CheckResult {
    pub fn new(name: &str, pass: bool, details: String) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            pass,
            details,
        }
    }
}

/// All checks run against a single database entry (or a single named
/// sub-suite of a module check).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EntryReport {
    pub id: String,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

impl EntryReport {
    pub fn from_checks(id: &str, checks: Vec<CheckResult>) -> EntryReport {
        EntryReport {
            id: id.to_string(),
            pass: checks.iter().all(|c| c.pass),
            checks,
        }
    }
}

/// Top-level report for one command invocation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub command: String,
    pub seed: u64,
    pub samples: usize,
    pub pass: bool,
    pub entries: Vec<EntryReport>,
}

impl SuiteReport {
    pub fn new(command: &str, seed: u64, samples: usize, entries: Vec<EntryReport>) -> SuiteReport {
        SuiteReport {
            command: command.to_string(),
            seed,
            samples,
            pass: entries.iter().all(|e| e.pass),
            entries,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{} (seed {}, samples {}): {}\n",
            self.command,
            self.seed,
            self.samples,
            if self.pass { "PASS" } else { "FAIL" }
        ));
        for e in &self.entries {
            out.push_str(&format!(
                "  {} {}\n",
                if e.pass { "ok  " } else { "FAIL" },
                e.id
            ));
            for c in &e.checks {
                out.push_str(&format!(
                    "    {} {}: {}\n",
                    if c.pass { "ok  " } else { "FAIL" },
                    c.name,
                    c.details
                ));
            }
        }
        out
    }
}
