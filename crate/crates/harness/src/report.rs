//! Suite reports and their CSV, JSON and text-table renderings.

use std::fmt;

use serde::{Deserialize, Serialize};
use turan_core::Validity;

/// Bumped whenever the CSV columns change.
pub const SCHEMA_VERSION: &str = "v1";

pub const CSV_HEADER: [&str; 9] = ["n", "k", "s", "l", "formula", "construction", "oracle", "free", "status"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "reason", rename_all = "UPPERCASE")]
pub enum Status {
    Match,
    Mismatch,
    Skipped(String),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Match => f.write_str("MATCH"),
            Status::Mismatch => f.write_str("MISMATCH"),
            Status::Skipped(reason) => write!(f, "SKIPPED({reason})"),
        }
    }
}

/// The oracle column: a value, an explicit skip with its cause, or nothing
/// when the suite never consults the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleCell {
    NotRun,
    Value(u64),
    Skipped(String),
}

impl OracleCell {
    pub fn value(&self) -> Option<u64> {
        match self {
            OracleCell::Value(v) => Some(*v),
            _ => None,
        }
    }
}

impl fmt::Display for OracleCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleCell::NotRun => Ok(()),
            OracleCell::Value(v) => write!(f, "{v}"),
            OracleCell::Skipped(reason) => write!(f, "SKIPPED({reason})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub n: usize,
    pub k: Option<usize>,
    pub s: Option<usize>,
    pub l: Option<usize>,
    pub formula: Option<u64>,
    pub validity: Option<Validity>,
    pub construction: Option<u64>,
    pub oracle: OracleCell,
    pub free: Option<bool>,
    pub status: Status,
    pub notes: Vec<String>,
}

impl Row {
    pub fn key(&self) -> (usize, Option<usize>, Option<usize>, Option<usize>) {
        (self.n, self.k, self.s, self.l)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub version: String,
    /// UNIX seconds.
    pub timestamp: u64,
    pub rows: Vec<Row>,
    /// Fresh oracle enumerations performed for this report.
    pub oracle_runs: u64,
    /// Oracle results served from the cache or the in-process memo.
    pub cache_hits: u64,
    /// Isomorphism classes generated by the fresh enumerations.
    pub graphs_visited: u64,
    /// Sweep only: smallest n from which oracle and formula agree to the end of the sweep.
    pub first_agreement: Option<usize>,
    pub warnings: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, timestamp: u64) -> Self {
        SuiteReport {
            suite: suite.into(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp,
            rows: Vec::new(),
            oracle_runs: 0,
            cache_hits: 0,
            graphs_visited: 0,
            first_agreement: None,
            warnings: Vec::new(),
        }
    }

    pub fn sort_rows(&mut self) {
        self.rows.sort_by_key(Row::key);
    }

    pub fn count(&self, pred: impl Fn(&Status) -> bool) -> usize {
        self.rows.iter().filter(|r| pred(&r.status)).count()
    }

    pub fn mismatches(&self) -> usize {
        self.count(|s| *s == Status::Mismatch)
    }

    /// True when every row is MATCH or SKIPPED.
    pub fn passed(&self) -> bool {
        self.mismatches() == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
    Table,
}

fn opt<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn cells(row: &Row) -> [String; 9] {
    [
        row.n.to_string(),
        opt(&row.k),
        opt(&row.s),
        opt(&row.l),
        opt(&row.formula),
        opt(&row.construction),
        row.oracle.to_string(),
        opt(&row.free),
        row.status.to_string(),
    ]
}

fn sorted_rows(report: &SuiteReport) -> Vec<&Row> {
    let mut rows: Vec<&Row> = report.rows.iter().collect();
    rows.sort_by_key(|r| r.key());
    rows
}

/// Renders `report`. Rows come out ordered by `(n, k, s, l)` whatever the
/// order in `report.rows`.
pub fn emit_report(report: &SuiteReport, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Csv => emit_csv(report),
        ReportFormat::Json => {
            let mut sorted = report.clone();
            sorted.sort_rows();
            let mut out = serde_json::to_vec_pretty(&sorted).expect("report serializes");
            out.push(b'\n');
            out
        }
        ReportFormat::Table => emit_table(report).into_bytes(),
    }
}

fn emit_csv(report: &SuiteReport) -> Vec<u8> {
    let mut out = format!(
        "# schema={SCHEMA_VERSION} suite={} version={} generated={}\n",
        report.suite, report.version, report.timestamp
    )
    .into_bytes();
    let mut w = csv::Writer::from_writer(&mut out);
    w.write_record(CSV_HEADER).expect("write to memory");
    for row in sorted_rows(report) {
        w.write_record(cells(row)).expect("write to memory");
    }
    w.flush().expect("write to memory");
    drop(w);
    out
}

fn emit_table(report: &SuiteReport) -> String {
    let mut header: Vec<String> = CSV_HEADER.iter().map(|s| s.to_string()).collect();
    header.push("notes".into());
    let body: Vec<Vec<String>> = sorted_rows(report)
        .into_iter()
        .map(|r| {
            let mut c = cells(r).to_vec();
            c.push(r.notes.join("; "));
            c
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &body {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cols: &[String]| {
        let mut s = String::new();
        for (c, w) in cols.iter().zip(&widths) {
            s.push_str(c);
            s.extend(std::iter::repeat_n(' ', w - c.chars().count() + 2));
        }
        s.trim_end().to_string() + "\n"
    };

    let mut out = format!(
        "suite {} (version {}, generated {})\n",
        report.suite, report.version, report.timestamp
    );
    out += &line(&header);
    for row in &body {
        out += &line(row);
    }
    let skipped = report.count(|s| matches!(s, Status::Skipped(_)));
    out += &format!(
        "{} rows: {} match, {} mismatch, {} skipped; oracle runs {}, cache hits {}, classes visited {}\n",
        report.rows.len(),
        report.count(|s| *s == Status::Match),
        report.mismatches(),
        skipped,
        report.oracle_runs,
        report.cache_hits,
        report.graphs_visited
    );
    if let Some(n) = report.first_agreement {
        out += &format!("first agreement at n = {n}\n");
    }
    for w in &report.warnings {
        out += &format!("warning: {w}\n");
    }
    out
}
