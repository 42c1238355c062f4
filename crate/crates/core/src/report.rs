//! Structured pass/fail records shared by every verifier in the crate.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The source formulation is ambiguous; the row records the reading used.
    Ambiguous,
}

/// One verified claim: a name, an optional anchor into the claim catalog,
/// the outcome, and a witness string on failure (or a note on ambiguity).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anchor: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// A batch of check rows about one subject (a parameter tuple, an action
/// assignment, a scenario, ...).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: String,
    pub rows: Vec<CheckRow>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, witness: Option<String>) {
        self.rows.push(CheckRow {
            name: name.into(),
            anchor: None,
            status,
            witness,
        });
    }

    pub fn push_anchored(
        &mut self,
        name: impl Into<String>,
        anchor: impl Into<String>,
        status: Status,
        witness: Option<String>,
    ) {
        self.rows.push(CheckRow {
            name: name.into(),
            anchor: Some(anchor.into()),
            status,
            witness,
        });
    }

    /// Record a boolean check, with the witness attached only on failure.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.push(name, Status::Pass, None);
        } else {
            self.push(name, Status::Fail, Some(witness()));
        }
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.status != Status::Fail)
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut pass = 0;
        let mut fail = 0;
        let mut amb = 0;
        for r in &self.rows {
            match r.status {
                Status::Pass => pass += 1,
                Status::Fail => fail += 1,
                Status::Ambiguous => amb += 1,
            }
        }
        (pass, fail, amb)
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.rows.extend(other.rows);
    }

    /// First failing row, if any.
    pub fn first_failure(&self) -> Option<&CheckRow> {
        self.rows.iter().find(|r| r.status == Status::Fail)
    }
}
