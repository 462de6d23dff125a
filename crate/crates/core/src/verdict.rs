use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Outcome of one named condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Concrete values backing the outcome. Never empty on failure.
    pub witness: Vec<i64>,
    pub detail: String,
}

/// A list of checks; passes iff every check passed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<String, String>,
}

impl Verdict {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn ok(&mut self, name: impl Into<String>, witness: Vec<i64>, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: true,
            witness,
            detail: detail.into(),
        });
    }

    /// Records a failed check. Panics if `witness` is empty.
    pub fn fail(&mut self, name: impl Into<String>, witness: Vec<i64>, detail: impl Into<String>) {
        assert!(!witness.is_empty(), "failed checks must carry a witness");
        self.checks.push(Check {
            name: name.into(),
            passed: false,
            witness,
            detail: detail.into(),
        });
    }

    pub fn record(
        &mut self,
        name: impl Into<String>,
        passed: bool,
        witness: Vec<i64>,
        detail: impl Into<String>,
    ) {
        if passed {
            self.ok(name, witness, detail);
        } else {
            self.fail(name, witness, detail);
        }
    }

    pub fn note(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.notes.insert(key.into(), value.into());
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// Appends all checks of `other`, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Verdict) {
        for mut c in other.checks {
            c.name = format!("{prefix}: {}", c.name);
            self.checks.push(c);
        }
        for (k, v) in other.notes {
            self.notes.insert(format!("{prefix}: {k}"), v);
        }
    }
}
