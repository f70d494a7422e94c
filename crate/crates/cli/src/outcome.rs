//! The result of one command: a report, an optional constructed document,
//! and the exit status derived from them.

use std::fmt;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use skewcat_core::format::FormatError;
use skewcat_core::{Report, Status, StructureError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_LAW: i32 = 1;
pub const EXIT_STRUCTURAL: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_FALSIFIED: i32 = 4;

/// An error that stops a command, with the input file and JSON path it
/// concerns when known.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    #[serde(skip)]
    pub code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    pub message: String,
}

impl Failure {
    pub fn structural(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_STRUCTURAL,
            file: None,
            path: None,
            message: message.into(),
        }
    }

    pub fn in_file(mut self, file: &Path) -> Self {
        self.file.get_or_insert_with(|| file.display().to_string());
        self
    }

    pub fn at(mut self, path: &str) -> Self {
        self.path.get_or_insert_with(|| path.to_string());
        self
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.file, &self.path) {
            (Some(file), Some(path)) => write!(f, "{file} at {path}: {}", self.message),
            (Some(file), None) => write!(f, "{file}: {}", self.message),
            (None, Some(path)) => write!(f, "{path}: {}", self.message),
            (None, None) => f.write_str(&self.message),
        }
    }
}

impl From<StructureError> for Failure {
    fn from(e: StructureError) -> Self {
        let code = match e {
            StructureError::Precondition(_) | StructureError::BoundExceeded(_) => EXIT_PRECONDITION,
            StructureError::Falsified(_) => EXIT_FALSIFIED,
            _ => EXIT_STRUCTURAL,
        };
        Failure {
            code,
            file: None,
            path: None,
            message: e.to_string(),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::from(e.error).at(&e.path)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(path: &Path, bytes: &[u8]) -> Self {
        InputDigest {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

/// What a successful run produced.
#[derive(Debug, Default)]
pub struct Outcome {
    pub report: Report,
    pub result: Option<Value>,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn new(report: Report) -> Self {
        Outcome {
            report,
            ..Default::default()
        }
    }

    pub fn with_result(mut self, doc: impl Serialize) -> Self {
        self.result = Some(serde_json::to_value(doc).expect("documents serialize"));
        self
    }

    pub fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }

    pub fn exit_code(&self) -> i32 {
        let r = &self.report;
        if r.has_structural_errors() {
            EXIT_STRUCTURAL
        } else if r.has_falsification() {
            EXIT_FALSIFIED
        } else if r.entries.iter().any(|e| e.status == Status::Fail) {
            EXIT_LAW
        } else {
            EXIT_PASS
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub falsification: usize,
}

impl Counts {
    pub fn of(r: &Report) -> Self {
        let count = |s| r.entries.iter().filter(|e| e.status == s).count();
        Counts {
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            falsification: count(Status::Falsification),
        }
    }
}

/// The machine-readable output of a run.
#[derive(Debug, Serialize)]
pub struct Envelope<'a> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'a str,
    pub inputs: &'a [InputDigest],
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<Counts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<&'a Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<&'a Value>,
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    pub notes: &'a [String],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<&'a Failure>,
}
