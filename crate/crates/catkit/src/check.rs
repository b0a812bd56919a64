//! Violation records shared by every validator.
//!
//! A check either passes or produces witnesses: the offending identifiers in
//! a canonical order, so two runs over the same input report the same bytes.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Short stable code for the violated law, e.g. "identity-left".
    pub law: String,
    /// Offending identifiers, innermost first.
    pub witness: Vec<String>,
    pub detail: String,
}

impl Violation {
    pub fn new(law: &str, witness: Vec<String>, detail: impl Into<String>) -> Self {
        Violation {
            law: law.to_string(),
            witness,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    /// What was checked, e.g. the category or transformation name.
    pub subject: String,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn new(subject: impl Into<String>) -> Self {
        CheckReport {
            subject: subject.into(),
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.violations.extend(other.violations);
    }

    /// Sort witnesses into canonical order; call once after collection.
    pub fn finish(mut self) -> Self {
        self.violations
            .sort_by(|a, b| (&a.law, &a.witness).cmp(&(&b.law, &b.witness)));
        self
    }

    pub fn first_line(&self) -> String {
        match self.violations.first() {
            Some(v) => format!("{} [{}]", v.law, v.witness.join(", ")),
            None => "none".to_string(),
        }
    }

    /// Turn a completed report into a result, keeping witnesses on failure.
    pub fn into_result(self) -> crate::error::Result<()> {
        if self.passed() {
            Ok(())
        } else {
            Err(crate::error::Error::Law(Box::new(self.finish())))
        }
    }
}
