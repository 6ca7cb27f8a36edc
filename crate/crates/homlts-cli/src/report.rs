//! Run reports: one structured result per invocation, rendered as text or
//! JSON. The JSON form is byte-deterministic for identical inputs and is a
//! superset of the text form's content.

use homlts::{AxiomCheck, AxiomReport, Witness};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessOut {
    pub tuple: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOut {
    pub id: String,
    pub passed: bool,
    pub failure_count: usize,
    pub witnesses: Vec<WitnessOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: String,
    pub input_digest: String,
    /// `pass`, `fail`, or `error`.
    pub status: String,
    pub checks: Vec<CheckOut>,
    /// Command-specific payload (dimensions, class coordinates, generated
    /// tensors, ...), already in deterministic form.
    pub data: Value,
}

impl RunReport {
    pub fn new(command: &str, input: &str, digest: &str) -> Self {
        RunReport {
            tool: "homlts".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            input: input.into(),
            input_digest: digest.into(),
            status: "pass".into(),
            checks: Vec::new(),
            data: Value::Null,
        }
    }

    pub fn push_axiom_report(&mut self, report: &AxiomReport) {
        for check in &report.checks {
            self.push_check(check);
        }
    }

    pub fn push_check(&mut self, check: &AxiomCheck) {
        self.checks.push(CheckOut {
            id: check.axiom.clone(),
            passed: check.passed(),
            failure_count: check.failure_count,
            witnesses: check.witnesses.iter().map(witness_out).collect(),
        });
    }

    pub fn push_flag(&mut self, id: &str, passed: bool) {
        self.checks.push(CheckOut {
            id: id.into(),
            passed,
            failure_count: usize::from(!passed),
            witnesses: Vec::new(),
        });
    }

    pub fn finalize_status(&mut self) {
        if self.checks.iter().all(|c| c.passed) {
            self.status = "pass".into();
        } else {
            self.status = "fail".into();
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status.as_str() {
            "pass" => 0,
            "fail" => 1,
            _ => 2,
        }
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => serde_json::to_string_pretty(self).expect("report serializes"),
            ReportFormat::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "homlts {}: {} on {}",
            self.version, self.command, self.input
        );
        let _ = writeln!(out, "input digest: {}", self.input_digest);
        for check in &self.checks {
            let verdict = if check.passed { "ok" } else { "FAIL" };
            let _ = write!(out, "  [{verdict}] {}", check.id);
            if check.failure_count > 0 {
                let _ = write!(out, " ({} failing tuples)", check.failure_count);
            }
            let _ = writeln!(out);
            for w in &check.witnesses {
                let _ = writeln!(
                    out,
                    "        witness {:?}: lhs = [{}], rhs = [{}]",
                    w.tuple,
                    w.lhs.join(", "),
                    w.rhs.join(", ")
                );
            }
        }
        if !self.data.is_null() {
            let _ = writeln!(
                out,
                "data: {}",
                serde_json::to_string_pretty(&self.data).expect("data serializes")
            );
        }
        let _ = writeln!(out, "status: {}", self.status);
        out
    }
}

pub fn witness_out(w: &Witness) -> WitnessOut {
    WitnessOut {
        tuple: w.tuple.clone(),
        lhs: w.lhs.iter().map(|v| v.to_string()).collect(),
        rhs: w.rhs.iter().map(|v| v.to_string()).collect(),
    }
}

pub fn digest_hex(bytes: &[u8]) -> String {
    use sha2::{Digest, Sha256};
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("sha256:{:x}", hasher.finalize())
}
