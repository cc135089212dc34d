use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    /// What was compared on a pass; the counterexample on a failure.
    pub witness: String,
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: &str, ok: bool, witness: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            anchor: anchor.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: witness.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub n: usize,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} (n = {})", self.suite, self.n);
        for c in &self.checks {
            let tag = if c.passed() { "pass" } else { "FAIL" };
            let _ = writeln!(out, "{tag}  {}  [{}]", c.id, c.anchor);
            for line in c.witness.lines() {
                let _ = writeln!(out, "      {line}");
            }
        }
        let _ = writeln!(
            out,
            "{} checks, {} failed, {} ms",
            self.checks.len(),
            self.failures(),
            self.elapsed_ms
        );
        out
    }
}
