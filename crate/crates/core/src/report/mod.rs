//! Verification reports: JSON and plain-text rendering.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

/// JSON schema every report validates against.
pub const REPORT_SCHEMA: &str = include_str!("../../schema/report.schema.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// a known discrepancy with a display, matching the recorded residual
    Ledger,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Ledger => "ledger",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub paper_ref: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BTreeMap<String, String>>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub ledger_entries: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub tool_version: String,
    pub context_hashes: BTreeMap<String, String>,
}

impl Summary {
    pub fn of(checks: &[Check]) -> Self {
        let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
        Summary {
            total: checks.len(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            ledger_entries: count(Status::Ledger),
        }
    }
}

impl VerificationReport {
    pub fn new(suite: &str, checks: Vec<Check>, context_hashes: BTreeMap<String, String>) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            summary: Summary::of(&checks),
            checks,
            tool_version: format!("qbound {}", env!("CARGO_PKG_VERSION")),
            context_hashes,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Copy with every `elapsed_ms` set to zero.
    pub fn without_timing(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.elapsed_ms = 0;
        }
        r
    }

    /// Pretty JSON, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Plain 7-bit text, one line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        writeln!(out, "suite {} ({})", self.suite, self.tool_version).unwrap();
        for c in &self.checks {
            writeln!(out, "{:<6} {:<w$} {}", c.status.as_str().to_uppercase(), c.id, c.paper_ref).unwrap();
            if c.status != Status::Pass {
                if let Some(r) = &c.residual {
                    writeln!(out, "       residual: {r}").unwrap();
                }
            }
            if let Some(wit) = &c.witness {
                let parts: Vec<String> = wit.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(out, "       {}", parts.join(", ")).unwrap();
            }
        }
        let s = &self.summary;
        writeln!(out, "total {}, passed {}, failed {}, ledger {}", s.total, s.passed, s.failed, s.ledger_entries).unwrap();
        ascii_only(&out)
    }
}

/// Replaces anything outside 7-bit ASCII by `?`.
fn ascii_only(s: &str) -> String {
    s.chars().map(|c| if c.is_ascii() { c } else { '?' }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        let checks = vec![
            Check { id: "a".into(), paper_ref: "x".into(), status: Status::Pass, residual: None, witness: None, elapsed_ms: 3 },
            Check {
                id: "b".into(),
                paper_ref: "y".into(),
                status: Status::Fail,
                residual: Some("d - 1".into()),
                witness: None,
                elapsed_ms: 1,
            },
        ];
        VerificationReport::new("t", checks, BTreeMap::new())
    }

    #[test]
    fn summary_counts() {
        let r = sample();
        assert_eq!(r.summary, Summary { total: 2, passed: 1, failed: 1, ledger_entries: 0 });
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let j = r.to_json();
        assert!(j.ends_with('\n'));
        let back: VerificationReport = serde_json::from_str(&j).unwrap();
        assert_eq!(back, r);
        assert!(!j.contains("\"witness\""));
    }

    #[test]
    fn text_is_ascii() {
        let t = sample().to_text();
        assert!(t.is_ascii());
        assert!(t.contains("FAIL   b y"));
        assert!(t.contains("residual: d - 1"));
    }
}
