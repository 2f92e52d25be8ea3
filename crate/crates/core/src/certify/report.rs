//! Per-relation results and the report they roll up into.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::fock::{Coefficient, Operator};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Holds only under a stated interpretation, or a printed form that
    /// deviates while its corrected form is checked separately.
    Flagged,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Flagged => "flagged",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The first nonzero residual entry found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Index tuple or generator labels of the failing instance.
    pub indices: String,
    /// Basis label of the row (codomain) state.
    pub row: String,
    /// Basis label of the column (domain) state.
    pub column: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationResult {
    /// Short identifier, used by family filters.
    pub id: String,
    /// Human-readable statement.
    pub name: String,
    /// Which group of relations this belongs to.
    pub anchor: String,
    pub indices_checked: u64,
    pub status: Status,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
}

impl RelationResult {
    pub fn new(id: impl Into<String>, name: impl Into<String>, anchor: impl Into<String>) -> Self {
        RelationResult {
            id: id.into(),
            name: name.into(),
            anchor: anchor.into(),
            indices_checked: 0,
            status: Status::Pass,
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Counts one instance; the first nonzero residual becomes the witness.
    pub fn record<S>(&mut self, indices: impl FnOnce() -> String, residual: &Operator<S>)
    where
        S: Coefficient + fmt::Display,
    {
        self.indices_checked += 1;
        if self.witness.is_some() {
            return;
        }
        if let Some((r, c, v)) = residual.first_nonzero() {
            self.witness = Some(Witness {
                indices: indices(),
                row: residual.codomain().label(r),
                column: residual.domain().label(c),
                value: v.to_string(),
            });
            self.status = Status::Fail;
        }
    }

    /// Records a failure that has no residual operator (for example an error
    /// raised while evaluating one side).
    pub fn record_failure(&mut self, indices: impl Into<String>, reason: impl Into<String>) {
        self.indices_checked += 1;
        if self.witness.is_none() {
            self.witness = Some(Witness {
                indices: indices.into(),
                row: String::new(),
                column: String::new(),
                value: reason.into(),
            });
            self.status = Status::Fail;
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Zero residuals become `Flagged`: the statement was transcribed under an interpretation.
    pub fn flag_if_passing(mut self, note: impl Into<String>) -> Self {
        if self.status == Status::Pass {
            self.status = Status::Flagged;
        }
        self.notes.push(note.into());
        self
    }

    /// A known deviation: failures become `Flagged` and keep their witness.
    pub fn expect_deviation(mut self, note: impl Into<String>) -> Self {
        if self.status == Status::Fail {
            self.status = Status::Flagged;
        }
        self.notes.push(note.into());
        self
    }
}

impl fmt::Display for RelationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<7} {} [{}] ({} checked)", self.status, self.name, self.anchor, self.indices_checked)?;
        if let Some(w) = &self.witness {
            write!(f, "\n        witness {}: <{}|R|{}> = {}", w.indices, w.row, w.column, w.value)?;
        }
        for note in &self.notes {
            write!(f, "\n        note: {note}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReportConfig {
    /// `"algebra"` for a rank-`n` run, `"embedding"` for a `k1×k2` run.
    pub check: String,
    pub n: Option<usize>,
    pub k1: Option<usize>,
    pub k2: Option<usize>,
    pub level: u32,
    /// Root denominator `D` of `t = q^(1/D)`.
    pub root: u32,
}

impl fmt::Display for ReportConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.check)?;
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        if let (Some(k1), Some(k2)) = (self.k1, self.k2) {
            write!(f, " k1={k1} k2={k2}")?;
        }
        write!(f, " level={} D={}", self.level, self.root)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Summary {
    pub relations: usize,
    pub passed: usize,
    pub failed: usize,
    pub flagged: usize,
    pub indices_checked: u64,
    /// `Fail` iff some relation failed; flagged relations do not fail a run.
    pub status: Status,
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} relations, {} passed, {} failed, {} flagged, {} instances",
            self.status, self.relations, self.passed, self.failed, self.flagged, self.indices_checked
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RelationReport {
    pub config: ReportConfig,
    pub notes: Vec<String>,
    pub relations: Vec<RelationResult>,
}

impl RelationReport {
    pub fn new(config: ReportConfig) -> Self {
        RelationReport { config, notes: Vec::new(), relations: Vec::new() }
    }

    pub fn summary(&self) -> Summary {
        summarize(&self.relations)
    }

    pub fn passed(&self) -> bool {
        self.summary().status != Status::Fail
    }

    pub fn find(&self, id: &str) -> Option<&RelationResult> {
        self.relations.iter().find(|r| r.id == id)
    }
}

pub fn summarize(relations: &[RelationResult]) -> Summary {
    let count = |s: Status| relations.iter().filter(|r| r.status == s).count();
    let failed = count(Status::Fail);
    Summary {
        relations: relations.len(),
        passed: count(Status::Pass),
        failed,
        flagged: count(Status::Flagged),
        indices_checked: relations.iter().map(|r| r.indices_checked).sum(),
        status: if failed == 0 { Status::Pass } else { Status::Fail },
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "config: {}", self.config)?;
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        for r in &self.relations {
            writeln!(f, "{r}")?;
        }
        write!(f, "{}", self.summary())
    }
}

/// Relation ids to run; empty means all. An entry matches ids it prefixes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filter {
    prefixes: Vec<String>,
}

impl Filter {
    pub fn all() -> Self {
        Filter::default()
    }

    pub fn new<I, T>(prefixes: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        Filter { prefixes: prefixes.into_iter().map(Into::into).filter(|p: &String| !p.is_empty()).collect() }
    }

    pub fn allows(&self, id: &str) -> bool {
        self.prefixes.is_empty() || self.prefixes.iter().any(|p| id.starts_with(p.as_str()))
    }

    /// Whether any id beginning with `group` could match.
    pub fn touches(&self, group: &str) -> bool {
        self.prefixes.is_empty() || self.prefixes.iter().any(|p| p.starts_with(group) || group.starts_with(p.as_str()))
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.prefixes.is_empty() {
            f.write_str("all")
        } else {
            f.write_str(&self.prefixes.join(","))
        }
    }
}

pub(crate) fn tuple_label(names: &[char], values: &[usize]) -> String {
    let parts: Vec<String> = names.iter().zip(values).map(|(n, v)| format!("{n}={v}")).collect();
    parts.join(",")
}
