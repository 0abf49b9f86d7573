//! Command reports and their text and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    fn label(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "skip",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, witness: Option<String>) -> Check {
        Check {
            name: name.into(),
            status: if passed { CheckStatus::Pass } else { CheckStatus::Fail },
            witness: if passed { None } else { witness },
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: CheckStatus::Skipped,
            witness: Some(reason.into()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Overall {
    Pass,
    Fail,
}

/// Outcome of one command. `status` is `pass` exactly when no check
/// failed; skipped checks do not count as failures.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub command: String,
    pub status: Overall,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub resource_limit: bool,
    pub checks: Vec<Check>,
    pub artifacts: BTreeMap<String, Value>,
    /// Human-readable lines for the text rendering.
    #[serde(skip)]
    pub summary: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            status: Overall::Pass,
            resource_limit: false,
            checks: Vec::new(),
            artifacts: BTreeMap::new(),
            summary: Vec::new(),
        }
    }

    pub fn check(&mut self, c: Check) {
        if c.status == CheckStatus::Fail {
            self.status = Overall::Fail;
        }
        self.checks.push(c);
    }

    pub fn artifact(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("artifacts serialize");
        self.artifacts.insert(key.to_string(), v);
    }

    pub fn line(&mut self, line: impl Into<String>) {
        self.summary.push(line.into());
    }

    pub fn passed(&self) -> bool {
        self.status == Overall::Pass
    }

    /// 0 when every check passed, 1 when some failed, 3 when a search
    /// limit stopped the computation.
    pub fn exit_code(&self) -> i32 {
        if self.resource_limit {
            3
        } else if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Text => self.to_text(),
        }
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "pass" } else { "FAIL" };
        let _ = writeln!(out, "{}: {status}", self.command);
        if self.resource_limit {
            let _ = writeln!(out, "resource limit reached");
        }
        for c in &self.checks {
            let _ = write!(out, "  [{}] {}", c.status.label(), c.name);
            if let Some(w) = &c.witness {
                let _ = write!(out, ": {w}");
            }
            out.push('\n');
        }
        for l in &self.summary {
            let _ = writeln!(out, "{l}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_tracks_failures() {
        let mut r = Report::new("verify");
        r.check(Check::new("a", true, None));
        r.check(Check::skipped("b", "not applicable"));
        assert!(r.passed());
        assert_eq!(r.exit_code(), 0);
        r.check(Check::new("c", false, Some("here".into())));
        assert_eq!(r.exit_code(), 1);
        assert!(r.emit(Format::Text).contains("[FAIL] c: here"));
    }

    #[test]
    fn structured_round_trip() {
        let mut r = Report::new("type");
        r.check(Check::new("sum_of_squares", true, None));
        r.artifact("coalgebra_type", "(1, 4)");
        let text = r.emit(Format::Structured);
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back.emit(Format::Structured), text);
    }
}
