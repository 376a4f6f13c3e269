//! Validation reports shared by every checker in the crate.
//!
//! Validators never panic on bad mathematical input: they return a report
//! listing each violated law instance. An empty report means the input
//! satisfies every checked axiom.

use serde::Serialize;

/// A single violated law instance or structural defect.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Short machine-stable tag, e.g. `"pentagon"`, `"structural"`, `"coh"`.
    pub kind: String,
    /// Human-readable detail naming the witnessing ids.
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ValidationReport {
    pub context: String,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn new(context: impl Into<String>) -> Self {
        ValidationReport {
            context: context.into(),
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, kind: &str, detail: impl Into<String>) {
        self.violations.push(Violation {
            kind: kind.to_string(),
            detail: detail.into(),
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Stable line-oriented rendering, one line per violation.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("context: {}\n", self.context));
        out.push_str(&format!("violations: {}\n", self.violations.len()));
        for v in &self.violations {
            out.push_str(&format!("  [{}] {}\n", v.kind, v.detail));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {}\n", n));
        }
        out
    }
}
