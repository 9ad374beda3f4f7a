//! Run reports: JSON for machines, text for people.

use std::fmt::Write as _;

use gint_core::CheckReport;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::interp::{execute, RunOptions};
use crate::syntax::parse_script;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct StatementReport {
    pub line: usize,
    pub statement: String,
    pub kind: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<CheckReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunError {
    pub line: usize,
    pub statement: String,
    pub message: String,
    pub cap_exceeded: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub script: String,
    pub sha256: String,
    pub field: String,
    pub seed: Option<u64>,
    pub passed: bool,
    pub statements: Vec<StatementReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<RunError>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

/// Exit status following the command line contract.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    AssertionFailed = 1,
    Usage = 2,
    CapExceeded = 3,
}

impl RunReport {
    pub fn status(&self) -> Status {
        match &self.error {
            Some(e) if e.cap_exceeded => Status::CapExceeded,
            Some(_) => Status::Usage,
            None if self.passed => Status::Pass,
            None => Status::AssertionFailed,
        }
    }

    pub fn to_text(&self, verbose: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "script {} (sha256 {})", self.script, &self.sha256[..12]);
        for s in &self.statements {
            let mark = if s.passed { "ok  " } else { "FAIL" };
            let _ = write!(out, "  {mark} line {:>3}: {}", s.line, s.statement);
            if let Some(r) = &s.report {
                let _ = write!(out, " -> {}", r.conclusion.as_str());
            }
            if let Some(d) = &s.detail {
                let _ = write!(out, " [{d}]");
            }
            out.push('\n');
            if let (true, Some(r)) = (verbose, &s.report) {
                for h in &r.hypotheses {
                    let _ = write!(out, "         hypothesis {}: {}", h.name, h.holds);
                    if !h.evidence.is_empty() {
                        let _ = write!(out, " ({})", h.evidence);
                    }
                    out.push('\n');
                }
                for (k, v) in &r.evidence {
                    let _ = writeln!(out, "         {k} = {v}");
                }
                for n in &r.notes {
                    let _ = writeln!(out, "         note: {n}");
                }
            }
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "  error at line {}: {}", e.line, e.message);
        }
        if let Some(t) = self.timing_ms {
            let _ = writeln!(out, "  time {t} ms");
        }
        let _ = writeln!(out, "{}", if self.passed { "PASSED" } else { "FAILED" });
        out
    }
}

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Parse and run `text`; parse errors become usage errors in the report.
pub fn run_text(name: &str, text: &str, opts: &RunOptions, timing: bool) -> RunReport {
    let start = std::time::Instant::now();
    let sha256 = sha256_hex(text);
    let mut report = match parse_script(text) {
        Err(e) => RunReport {
            schema_version: SCHEMA_VERSION,
            script: name.to_string(),
            sha256,
            field: String::new(),
            seed: opts.seed,
            passed: false,
            statements: Vec::new(),
            error: Some(RunError {
                line: e.line,
                statement: String::new(),
                message: e.to_string(),
                cap_exceeded: false,
            }),
            timing_ms: None,
        },
        Ok(script) => {
            let ex = execute(&script, opts, None);
            let passed = ex.error.is_none() && ex.statements.iter().all(|s| s.passed);
            RunReport {
                schema_version: SCHEMA_VERSION,
                script: name.to_string(),
                sha256,
                field: ex.field,
                seed: ex.seed,
                passed,
                statements: ex.statements,
                error: ex.error,
                timing_ms: None,
            }
        }
    };
    if timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    report
}

/// Several script reports with an overall verdict.
#[derive(Clone, Debug, Serialize)]
pub struct AggregateReport {
    pub schema_version: u32,
    pub passed: bool,
    pub reports: Vec<RunReport>,
}

impl AggregateReport {
    pub fn new(reports: Vec<RunReport>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            passed: reports.iter().all(|r| r.passed),
            reports,
        }
    }

    /// The most severe status among the scripts.
    pub fn status(&self) -> Status {
        let ss: Vec<Status> = self.reports.iter().map(|r| r.status()).collect();
        [Status::CapExceeded, Status::Usage, Status::AssertionFailed]
            .into_iter()
            .find(|s| ss.contains(s))
            .unwrap_or(Status::Pass)
    }
}
