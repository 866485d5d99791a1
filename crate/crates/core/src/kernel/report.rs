//! Structured diagnostics with replayable witnesses.

use std::fmt;

use super::element::ElementRef;
use crate::symbol::Symbol;

/// How a finding affects the verdict. `Violation` fails the subject;
/// `Incomplete` marks data beyond the presentable fragment (virtual
/// identity coercions, depth-truncated composites) and is reported
/// without failing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Violation,
    Incomplete,
}

/// One diagnostic: the rule that fired, the witness elements that
/// reproduce it through the public query operations, and a sentence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Finding {
    pub rule: String,
    pub severity: Severity,
    pub witness: Vec<ElementRef>,
    pub message: String,
}

impl Finding {
    pub fn violation(rule: &str, witness: Vec<ElementRef>, message: impl Into<String>) -> Self {
        Finding {
            rule: rule.to_owned(),
            severity: Severity::Violation,
            witness,
            message: message.into(),
        }
    }

    pub fn incomplete(rule: &str, witness: Vec<ElementRef>, message: impl Into<String>) -> Self {
        Finding {
            rule: rule.to_owned(),
            severity: Severity::Incomplete,
            witness,
            message: message.into(),
        }
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.severity {
            Severity::Violation => "FAIL",
            Severity::Incomplete => "NOTE",
        };
        write!(f, "{} {} witness=(", tag, self.rule)?;
        for (i, w) in self.witness.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ") :: {}", self.message)
    }
}

/// Outcome of checking one subject. The verdict passes exactly when no
/// finding has `Violation` severity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub subject: Symbol,
    pub findings: Vec<Finding>,
}

impl Report {
    pub fn new(subject: impl Into<Symbol>) -> Self {
        Report {
            subject: subject.into(),
            findings: Vec::new(),
        }
    }

    pub fn push(&mut self, finding: Finding) {
        self.findings.push(finding);
    }

    /// Sorts and deduplicates findings so reports are byte-deterministic.
    pub fn normalize(&mut self) {
        self.findings.sort();
        self.findings.dedup();
    }

    pub fn passed(&self) -> bool {
        !self
            .findings
            .iter()
            .any(|f| f.severity == Severity::Violation)
    }

    pub fn violations(&self) -> impl Iterator<Item = &Finding> {
        self.findings
            .iter()
            .filter(|f| f.severity == Severity::Violation)
    }

    /// Merges another report's findings under this subject.
    pub fn absorb(&mut self, other: Report) {
        self.findings.extend(other.findings);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            writeln!(f, "PASS {}", self.subject)?;
        } else {
            writeln!(
                f,
                "FAIL {} ({} findings)",
                self.subject,
                self.violations().count()
            )?;
        }
        for finding in &self.findings {
            writeln!(f, "{finding}")?;
        }
        Ok(())
    }
}
