//! Check reports shared by every checker in the crate.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A redundancy or theorem harness found a counterexample to a claimed
    /// implication. Only those harnesses emit this.
    Falsification,
}

/// One named check: how many instances were examined and, on failure, the
/// first witnessing identifiers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub tag: String,
    pub status: Status,
    pub instances: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub structural: Vec<String>,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            ..Default::default()
        }
    }

    pub fn structural_error(subject: impl Into<String>, msg: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            structural: vec![msg.into()],
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, entry: Entry) {
        self.entries.push(entry);
    }

    /// Appends another report's entries (and structural errors).
    pub fn extend(&mut self, other: Report) {
        self.structural.extend(other.structural);
        self.entries.extend(other.entries);
    }

    pub fn has_structural_errors(&self) -> bool {
        !self.structural.is_empty()
    }

    /// No structural errors and every entry passes.
    pub fn all_pass(&self) -> bool {
        self.structural.is_empty() && self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn has_falsification(&self) -> bool {
        self.entries.iter().any(|e| e.status == Status::Falsification)
    }

    pub fn entry(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.entry(name).is_some_and(|e| e.status == Status::Pass)
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|e| e.status != Status::Pass)
            .map(|e| e.name.as_str())
            .collect()
    }

    /// Human-readable multi-line summary.
    pub fn summary(&self) -> String {
        let mut s = format!("{}\n", self.subject);
        for err in &self.structural {
            s.push_str(&format!("  STRUCTURAL  {err}\n"));
        }
        for e in &self.entries {
            let st = match e.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Falsification => "FALSIFICATION",
            };
            s.push_str(&format!("  {st:<13} {} ({} instances)", e.name, e.instances));
            if !e.witness.is_empty() {
                s.push_str(&format!("  witness: {}", e.witness.join(", ")));
            }
            s.push('\n');
        }
        s
    }
}

/// Accumulates instances of one check, keeping the first failure's witness.
#[derive(Debug)]
pub struct Tally {
    name: String,
    tag: String,
    instances: usize,
    witness: Option<Vec<String>>,
    on_failure: Status,
}

impl Tally {
    pub fn new(name: &str, tag: &str) -> Self {
        Tally {
            name: name.into(),
            tag: tag.into(),
            instances: 0,
            witness: None,
            on_failure: Status::Fail,
        }
    }

    /// Failures are reported as falsifications.
    pub fn falsifying(mut self) -> Self {
        self.on_failure = Status::Falsification;
        self
    }

    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Vec<String>) {
        self.instances += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub fn ok(&self) -> bool {
        self.witness.is_none()
    }

    pub fn finish(self) -> Entry {
        let status = if self.witness.is_none() {
            Status::Pass
        } else {
            self.on_failure
        };
        Entry {
            name: self.name,
            tag: self.tag,
            status,
            instances: self.instances,
            witness: self.witness.unwrap_or_default(),
        }
    }
}
