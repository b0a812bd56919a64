//! Deterministic task reports.
//!
//! A report is a plain value: engine version, a digest of the input bytes,
//! one outcome per executed task, and a tally.  Serialization is stable —
//! struct fields keep declaration order, maps are sorted, witness lists are
//! sorted by the validators — so identical inputs produce identical bytes.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

use crate::check::Violation;

pub const ENGINE: &str = concat!("catkit ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TaskStatus {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaskOutcome {
    pub name: String,
    pub op: String,
    pub status: TaskStatus,
    /// Law violations behind a `fail`, witness tuples sorted.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<Violation>,
    /// Message behind an `error`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Set when the error was a resource-limit refusal.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub resource_limit: bool,
    /// Summary facts about what the task derived: counts, names,
    /// invertibility decisions.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
}

impl TaskOutcome {
    pub fn new(name: &str, op: &str) -> Self {
        TaskOutcome {
            name: name.to_string(),
            op: op.to_string(),
            status: TaskStatus::Pass,
            violations: Vec::new(),
            error: None,
            resource_limit: false,
            details: BTreeMap::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub engine: String,
    /// Hex SHA-256 of the exact input bytes.
    pub input_digest: String,
    pub tasks: Vec<TaskOutcome>,
    pub summary: Summary,
}

impl Report {
    pub fn assemble(input_digest: String, tasks: Vec<TaskOutcome>) -> Report {
        let mut summary = Summary::default();
        for t in &tasks {
            match t.status {
                TaskStatus::Pass => summary.pass += 1,
                TaskStatus::Fail => summary.fail += 1,
                TaskStatus::Error => summary.error += 1,
            }
        }
        Report {
            engine: ENGINE.to_string(),
            input_digest,
            tasks,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0
    }

    pub fn hit_resource_limit(&self) -> bool {
        self.tasks.iter().any(|t| t.resource_limit)
    }
}

pub fn digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("{:x}", hasher.finalize())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "text" => Ok(ReportFormat::Text),
            other => Err(format!("unknown format {other:?}, expected json or text")),
        }
    }
}

pub fn emit_report(report: &Report, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Json => {
            let mut bytes =
                serde_json::to_vec_pretty(report).expect("reports always serialize");
            bytes.push(b'\n');
            bytes
        }
        ReportFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!("engine: {}\n", report.engine));
            out.push_str(&format!("input: sha256:{}\n", report.input_digest));
            for t in &report.tasks {
                match t.status {
                    TaskStatus::Pass => {
                        out.push_str(&format!("PASS  {} ({})\n", t.name, t.op));
                    }
                    TaskStatus::Fail => {
                        out.push_str(&format!("FAIL  {} ({})\n", t.name, t.op));
                        for v in &t.violations {
                            out.push_str(&format!(
                                "      {} [{}] {}\n",
                                v.law,
                                v.witness.join(", "),
                                v.detail
                            ));
                        }
                    }
                    TaskStatus::Error => {
                        out.push_str(&format!(
                            "ERROR {} ({}): {}\n",
                            t.name,
                            t.op,
                            t.error.as_deref().unwrap_or("unspecified")
                        ));
                    }
                }
                for (k, v) in &t.details {
                    out.push_str(&format!("      {k}: {v}\n"));
                }
            }
            out.push_str(&format!(
                "summary: {} pass, {} fail, {} error\n",
                report.summary.pass, report.summary.fail, report.summary.error
            ));
            out.into_bytes()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut fail = TaskOutcome::new("meet-hopf", "hopf-mnd");
        fail.status = TaskStatus::Fail;
        fail.violations.push(Violation::new(
            "hopf-invertibility",
            vec!["(1,0)".into(), "0<=1".into()],
            "component is not invertible",
        ));
        Report::assemble(digest(b"{}"), vec![TaskOutcome::new("ok", "em"), fail])
    }

    #[test]
    fn json_reports_round_trip() {
        let report = sample();
        let bytes = emit_report(&report, ReportFormat::Json);
        let back: Report = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn identical_inputs_emit_identical_bytes() {
        let a = emit_report(&sample(), ReportFormat::Json);
        let b = emit_report(&sample(), ReportFormat::Json);
        assert_eq!(a, b);
    }

    #[test]
    fn text_reports_tally_and_flag() {
        let text = String::from_utf8(emit_report(&sample(), ReportFormat::Text)).unwrap();
        assert!(text.contains("PASS  ok (em)"));
        assert!(text.contains("FAIL  meet-hopf (hopf-mnd)"));
        assert!(text.contains("hopf-invertibility [(1,0), 0<=1]"));
        assert!(text.ends_with("summary: 1 pass, 1 fail, 0 error\n"));
    }
}
