//! Pass/fail records for identity checks.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One named check. `suite` groups checks for `--suite` selection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub suite: String,
    pub description: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Violations beyond this many are summarized.
const MAX_LISTED: usize = 40;

impl Check {
    pub fn from_violations(
        suite: &str,
        id: &str,
        description: &str,
        mut violations: Vec<String>,
    ) -> Check {
        let status = if violations.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        if violations.len() > MAX_LISTED {
            let extra = violations.len() - MAX_LISTED;
            violations.truncate(MAX_LISTED);
            violations.push(format!("... and {extra} more"));
        }
        Check {
            id: id.into(),
            suite: suite.into(),
            description: description.into(),
            status,
            violations,
            note: None,
        }
    }

    pub fn skipped(suite: &str, id: &str, description: &str, reason: impl Into<String>) -> Check {
        Check {
            id: id.into(),
            suite: suite.into(),
            description: description.into(),
            status: Status::Skipped,
            violations: Vec::new(),
            note: Some(reason.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Check {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// `all`, a suite name, or a check id.
    pub fn selected_by(&self, selector: &str) -> bool {
        selector == "all" || selector == self.suite || selector == self.id
    }
}

/// Collects messages for a sequence of boolean checks.
#[derive(Debug, Default)]
pub struct Violations(pub Vec<String>);

impl Violations {
    pub fn new() -> Self {
        Violations(Vec::new())
    }

    pub fn require(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.0.push(msg());
        }
    }

    pub fn extend(&mut self, more: impl IntoIterator<Item = String>) {
        self.0.extend(more);
    }

    pub fn into_vec(self) -> Vec<String> {
        self.0
    }
}
