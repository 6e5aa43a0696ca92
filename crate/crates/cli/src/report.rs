//! Machine-readable verification reports: a versioned JSON schema with a
//! deterministic check list and a pure-text rendering.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Error,
    /// Checked and reported, but excluded from the pass/fail gate; used for
    /// results that are documented as chart-dependent.
    Qualified,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
            Status::Qualified => "qualified",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    /// What the check verifies, in formula form; "plumbing" for
    /// infrastructure checks.
    pub citation: String,
    pub status: Status,
    pub details: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub seed: u64,
    pub tol: f64,
    pub toolchain: String,
    /// Unix seconds at generation time; the only nondeterministic field.
    pub timestamp: u64,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new(suite: &str, seed: u64, tol: f64) -> VerificationReport {
        VerificationReport {
            schema: SCHEMA_VERSION,
            suite: suite.to_string(),
            seed,
            tol,
            toolchain: format!("drinfeld {}", env!("CARGO_PKG_VERSION")),
            timestamp: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
    }

    /// Deterministic ordered merge by check id.
    pub fn finalize(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn all_pass(&self) -> bool {
        self.checks
            .iter()
            .all(|c| matches!(c.status, Status::Pass | Status::Qualified))
    }

    /// 0 all-pass, 1 any check fails or errors.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable rendering: a pure function of the JSON content.
    pub fn render_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite {} (seed {}, tol {:.1e}) — {}",
            self.suite, self.seed, self.tol, self.toolchain
        );
        for c in &self.checks {
            let residual = c
                .residual
                .map(|r| format!(" [residual {r:.3e}]"))
                .unwrap_or_default();
            let _ = writeln!(out, "  [{}] {}: {}{}", c.status, c.id, c.details, residual);
        }
        let verdict = if self.all_pass() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{} ({} checks, {} failing)",
            verdict,
            self.checks.len(),
            self.checks
                .iter()
                .filter(|c| matches!(c.status, Status::Fail | Status::Error))
                .count()
        );
        out
    }
}

/// Record builders used throughout the suites.
pub fn pass(id: &str, citation: &str, details: &str) -> CheckRecord {
    CheckRecord {
        id: id.to_string(),
        citation: citation.to_string(),
        status: Status::Pass,
        details: details.to_string(),
        residual: None,
    }
}

pub fn check(id: &str, citation: &str, ok: bool, details: &str) -> CheckRecord {
    CheckRecord {
        id: id.to_string(),
        citation: citation.to_string(),
        status: if ok { Status::Pass } else { Status::Fail },
        details: details.to_string(),
        residual: None,
    }
}

pub fn numeric(id: &str, citation: &str, residual: f64, tol: f64, details: &str) -> CheckRecord {
    CheckRecord {
        id: id.to_string(),
        citation: citation.to_string(),
        status: if residual < tol {
            Status::Pass
        } else {
            Status::Fail
        },
        details: details.to_string(),
        residual: Some(residual),
    }
}

pub fn error(id: &str, citation: &str, err: impl std::fmt::Display) -> CheckRecord {
    CheckRecord {
        id: id.to_string(),
        citation: citation.to_string(),
        status: Status::Error,
        details: format!("{err}"),
        residual: None,
    }
}
