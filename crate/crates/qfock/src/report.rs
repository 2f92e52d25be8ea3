//! Report documents: one per certify run, possibly spanning several levels.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use qfock_core::certify::{self, RelationReport, RelationResult, Status};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub indices: String,
    pub row: String,
    pub column: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub id: String,
    pub name: String,
    pub anchor: String,
    pub level: u32,
    pub indices_checked: u64,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl RelationJson {
    pub fn from_result(r: &RelationResult, level: u32) -> Self {
        RelationJson {
            id: r.id.clone(),
            name: r.name.clone(),
            anchor: r.anchor.clone(),
            level,
            indices_checked: r.indices_checked,
            status: r.status.as_str().into(),
            witness: r.witness.as_ref().map(|w| WitnessJson {
                indices: w.indices.clone(),
                row: w.row.clone(),
                column: w.column.clone(),
                value: w.value.clone(),
            }),
            notes: r.notes.clone(),
        }
    }

    pub fn status(&self) -> Status {
        match self.status.as_str() {
            "pass" => Status::Pass,
            "flagged" => Status::Flagged,
            _ => Status::Fail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigJson {
    /// `"algebra"` or `"embedding"`.
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k1: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k2: Option<usize>,
    pub levels: Vec<u32>,
    pub root: u32,
    pub families: String,
    pub version: String,
}

impl ConfigJson {
    /// Short column label, `n=3` or `3x2`.
    pub fn label(&self) -> String {
        match (self.n, self.k1, self.k2) {
            (_, Some(k1), Some(k2)) => format!("{k1}x{k2}"),
            (Some(n), _, _) => format!("n={n}"),
            _ => self.check.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryJson {
    pub status: String,
    pub relations: usize,
    pub passed: usize,
    pub failed: usize,
    pub flagged: usize,
    pub indices_checked: u64,
}

impl From<certify::Summary> for SummaryJson {
    fn from(s: certify::Summary) -> Self {
        SummaryJson {
            status: s.status.as_str().into(),
            relations: s.relations,
            passed: s.passed,
            failed: s.failed,
            flagged: s.flagged,
            indices_checked: s.indices_checked,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelTiming {
    pub level: u32,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub total_seconds: f64,
    pub levels: Vec<LevelTiming>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub config: ConfigJson,
    pub notes: Vec<String>,
    pub relations: Vec<RelationJson>,
    pub summary: SummaryJson,
    /// Wall time; `null` with `--no-timing`, which makes the document byte-reproducible.
    pub timing: Option<Timing>,
}

impl ReportDocument {
    /// Concatenates per-level reports in level order.
    pub fn assemble(config: ConfigJson, reports: &[(u32, RelationReport)], timing: Option<Timing>) -> Self {
        let mut notes: Vec<String> = Vec::new();
        let mut relations = Vec::new();
        let mut all = Vec::new();
        for (level, report) in reports {
            for note in &report.notes {
                if !notes.contains(note) {
                    notes.push(note.clone());
                }
            }
            relations.extend(report.relations.iter().map(|r| RelationJson::from_result(r, *level)));
            all.extend(report.relations.iter().cloned());
        }
        let summary = certify::summarize(&all).into();
        ReportDocument { config, notes, relations, summary, timing }
    }

    pub fn failed(&self) -> bool {
        self.summary.failed > 0
    }

    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut out = String::new();
        let levels: Vec<String> = c.levels.iter().map(u32::to_string).collect();
        let _ =
            writeln!(out, "{} {} levels {} D={} families {}", c.check, c.label(), levels.join(","), c.root, c.families);
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        for r in &self.relations {
            let _ = writeln!(
                out,
                "{:<7} m={} {:<32} {} [{}] ({} checked)",
                r.status, r.level, r.id, r.name, r.anchor, r.indices_checked
            );
            if let Some(w) = &r.witness {
                let _ = writeln!(out, "        witness {}: <{}|R|{}> = {}", w.indices, w.row, w.column, w.value);
            }
            for note in &r.notes {
                let _ = writeln!(out, "        note: {note}");
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "summary: {} ({} relations, {} passed, {} failed, {} flagged, {} instances)",
            s.status, s.relations, s.passed, s.failed, s.flagged, s.indices_checked
        );
        if let Some(t) = &self.timing {
            let _ = writeln!(out, "time: {:.3}s", t.total_seconds);
        }
        out
    }
}

/// Relation id × configuration table over several documents.
pub fn merge_table(docs: &[ReportDocument]) -> (String, bool) {
    let mut columns: Vec<String> = Vec::new();
    let mut rows: Vec<String> = Vec::new();
    let mut cells: BTreeMap<(String, String), Status> = BTreeMap::new();
    let mut failures: Vec<String> = Vec::new();
    for doc in docs {
        for r in &doc.relations {
            let column = format!("{} m={}", doc.config.label(), r.level);
            if !columns.contains(&column) {
                columns.push(column.clone());
            }
            if !rows.contains(&r.id) {
                rows.push(r.id.clone());
            }
            let status = r.status();
            let cell = cells.entry((r.id.clone(), column.clone())).or_insert(status);
            if status == Status::Fail {
                *cell = Status::Fail;
                if let Some(w) = &r.witness {
                    failures
                        .push(format!("{} [{column}]: {}: <{}|R|{}> = {}", r.id, w.indices, w.row, w.column, w.value));
                } else {
                    failures.push(format!("{} [{column}]", r.id));
                }
            }
        }
    }
    let id_width = rows.iter().map(String::len).max().unwrap_or(8).max(8);
    let col_width = columns.iter().map(String::len).max().unwrap_or(4).max(4);
    let mut out = String::new();
    let _ = write!(out, "{:<id_width$}", "relation");
    for c in &columns {
        let _ = write!(out, "  {c:<col_width$}");
    }
    out.push('\n');
    for row in &rows {
        let _ = write!(out, "{row:<id_width$}");
        for c in &columns {
            let cell = match cells.get(&(row.clone(), c.clone())) {
                Some(Status::Pass) => "PASS",
                Some(Status::Fail) => "FAIL",
                Some(Status::Flagged) => "FLAG",
                None => "-",
            };
            let _ = write!(out, "  {cell:<col_width$}");
        }
        out.push('\n');
    }
    let failed = !failures.is_empty();
    let _ = writeln!(out, "overall: {}", if failed { "FAIL" } else { "PASS" });
    for f in failures {
        let _ = writeln!(out, "  {f}");
    }
    (out, failed)
}
