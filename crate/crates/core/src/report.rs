//! Verification reports and their on-disk layout.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::minor::{Witness, SCHEMA_VERSION};

pub const REPORTS_ENV: &str = "MINORSMITH_REPORTS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    DataMissing,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DataMissing => "data-missing",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseOutcome {
    pub index: usize,
    pub description: String,
    /// The case graph in graph6, when the case is a graph.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    pub passed: bool,
    /// Which alternative of the conclusion held, or why it failed.
    pub detail: String,
    /// Raw cases represented by this one when symmetry is factored out.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Catalog name of the pattern a minor or subdivision witness refers to.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_pattern: Option<String>,
}

impl CaseOutcome {
    pub fn new(index: usize, description: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CaseOutcome {
            index,
            description: description.into(),
            graph6: None,
            passed,
            detail: detail.into(),
            orbit_size: None,
            witness: None,
            witness_pattern: None,
        }
    }

    pub fn with_graph6(mut self, g6: impl Into<String>) -> Self {
        self.graph6 = Some(g6.into());
        self
    }

    pub fn with_orbit_size(mut self, n: usize) -> Self {
        self.orbit_size = Some(n);
        self
    }

    pub fn with_witness(mut self, w: Witness, pattern: Option<String>) -> Self {
        self.witness = Some(w);
        self.witness_pattern = pattern;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub statement_id: String,
    pub status: Status,
    pub cases_total: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cases_up_to_symmetry: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_cases: Option<usize>,
    pub cases: Vec<CaseOutcome>,
    /// graph6 of the first failing case.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Wall-clock time; not part of the verdict.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepCounts>,
}

/// Tallies of a corpus sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCounts {
    pub scanned: usize,
    pub filtered_in: usize,
    pub passed: usize,
    pub failed: usize,
    pub timed_out: usize,
}

impl VerificationReport {
    pub fn new(statement_id: impl Into<String>) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            statement_id: statement_id.into(),
            status: Status::Pass,
            cases_total: 0,
            cases_up_to_symmetry: None,
            expected_cases: None,
            cases: Vec::new(),
            counterexample: None,
            notes: Vec::new(),
            elapsed_ms: None,
            sweep: None,
        }
    }

    pub fn data_missing(statement_id: impl Into<String>, why: impl Into<String>) -> Self {
        let mut r = VerificationReport::new(statement_id);
        r.status = Status::DataMissing;
        r.notes.push(why.into());
        r
    }

    /// Records a case and downgrades the status on failure.
    pub fn push(&mut self, case: CaseOutcome) {
        if !case.passed && self.status != Status::DataMissing {
            if self.status == Status::Pass {
                self.counterexample = case.graph6.clone().or_else(|| Some(case.description.clone()));
            }
            self.status = Status::Fail;
        }
        self.cases.push(case);
    }

    pub fn fail(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
        if self.status == Status::Pass {
            self.status = Status::Fail;
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failing_cases(&self) -> impl Iterator<Item = &CaseOutcome> {
        self.cases.iter().filter(|c| !c.passed)
    }

    pub fn summary_line(&self) -> String {
        let sym = self.cases_up_to_symmetry.map(|s| format!(", {s} up to symmetry")).unwrap_or_default();
        format!("{}: {} ({} cases{})", self.statement_id, self.status, self.cases_total, sym)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexEntry {
    pub statement_id: String,
    pub status: Status,
    pub cases_total: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cases_up_to_symmetry: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportIndex {
    pub schema_version: u32,
    pub all_passed: bool,
    pub statements: Vec<IndexEntry>,
}

/// `MINORSMITH_REPORTS` if set, otherwise `reports`.
pub fn default_reports_dir() -> PathBuf {
    std::env::var_os(REPORTS_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("reports"))
}

/// Writes `<dir>/<id>.json` per report plus `<dir>/index.json`.
pub fn write_reports(dir: &Path, reports: &[VerificationReport]) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    for r in reports {
        let name = format!("{}.json", file_stem(&r.statement_id));
        fs::write(dir.join(name), serde_json::to_string_pretty(r).expect("report serialises") + "\n")?;
    }
    let index = ReportIndex {
        schema_version: SCHEMA_VERSION,
        all_passed: reports.iter().all(|r| r.status != Status::Fail),
        statements: reports
            .iter()
            .map(|r| IndexEntry {
                statement_id: r.statement_id.clone(),
                status: r.status,
                cases_total: r.cases_total,
                cases_up_to_symmetry: r.cases_up_to_symmetry,
            })
            .collect(),
    };
    fs::write(dir.join("index.json"), serde_json::to_string_pretty(&index).expect("index serialises") + "\n")
}

/// Statement ids contain `+`; keep file names portable.
pub fn file_stem(id: &str) -> String {
    id.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else if c == '+' { 'p' } else { '_' }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_records_counterexample() {
        let mut r = VerificationReport::new("demo");
        r.push(CaseOutcome::new(0, "ok", true, "").with_graph6("C~"));
        assert!(r.passed());
        r.push(CaseOutcome::new(1, "bad", false, "").with_graph6("Bw"));
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.counterexample.as_deref(), Some("Bw"));
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"schema_version\":1"));
        assert!(json.contains("\"status\":\"fail\""));
    }

    #[test]
    fn reports_on_disk() {
        let dir = tempfile::tempdir().unwrap();
        let r = VerificationReport::data_missing("archdeacon-19", "no file");
        write_reports(dir.path(), &[r]).unwrap();
        let idx: ReportIndex = serde_json::from_str(&fs::read_to_string(dir.path().join("index.json")).unwrap()).unwrap();
        assert!(idx.all_passed);
        assert_eq!(idx.statements[0].status, Status::DataMissing);
        assert!(dir.path().join("archdeacon-19.json").exists());
        assert_eq!(file_stem("E20+Y-clique"), "E20pY-clique");
    }
}
