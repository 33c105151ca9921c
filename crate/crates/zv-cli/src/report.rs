//! Report structures and serialization. JSON and CSV outputs are
//! byte-identical across runs for equal inputs and tool version.

use anyhow::Result;
use serde::Serialize;

use zv_core::{CheckResult, EvenScan};

use crate::config::SweepConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Record {
    pub kind: String,
    pub params: String,
    pub prime: u64,
    pub lhs: u64,
    pub rhs: u64,
    pub pass: bool,
    pub elapsed_us: u64,
}

impl From<&CheckResult> for Record {
    fn from(check: &CheckResult) -> Self {
        Record {
            kind: check.kind.name().to_string(),
            params: check.params.clone(),
            prime: check.prime,
            lhs: check.lhs,
            rhs: check.rhs,
            pass: check.pass,
            elapsed_us: check.elapsed_us,
        }
    }
}

/// Semantic parts of the configuration. Execution details (worker count,
/// output paths) are deliberately excluded so reports from different runs
/// compare byte-for-byte.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ConfigEcho {
    pub kinds: Vec<String>,
    pub weight_max: u32,
    pub depth_max: u32,
    pub shift_max: u32,
    pub prime_lo: u64,
    pub prime_hi: u64,
    pub boundary_scan: bool,
    pub even_explore: bool,
    pub stable: bool,
}

impl ConfigEcho {
    pub fn from_config(config: &SweepConfig) -> Self {
        ConfigEcho {
            kinds: config
                .normalized_kinds()
                .iter()
                .map(|k| k.name().to_string())
                .collect(),
            weight_max: config.weight_max,
            depth_max: config.depth_max,
            shift_max: config.shift_max,
            prime_lo: config.prime_lo,
            prime_hi: config.prime_hi,
            boundary_scan: config.boundary_scan,
            even_explore: config.even_explore,
            stable: config.stable,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub checks: u64,
    pub pass: u64,
    pub fail: u64,
    pub skipped: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_checks: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_anomalies: Option<u64>,
    pub wall_ms: u64,
    pub counterexamples: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct EvenRecord {
    pub k: u32,
    pub r: u32,
    pub i: u32,
    pub j: u32,
    pub prime: u64,
    pub value: u64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct EvenExploration {
    pub weight_max: u32,
    pub scanned: u64,
    pub z_all_zero: bool,
    pub nonzero_samples: Vec<EvenRecord>,
}

impl EvenExploration {
    pub fn from_scan(weight_max: u32, scan: &EvenScan) -> Self {
        EvenExploration {
            weight_max,
            scanned: scan.scanned,
            z_all_zero: scan.z_all_zero,
            nonzero_samples: scan
                .samples
                .iter()
                .map(|s| EvenRecord {
                    k: s.k,
                    r: s.r,
                    i: s.i,
                    j: s.j,
                    prime: s.prime,
                    value: s.value,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub version: String,
    pub config: ConfigEcho,
    pub records: Vec<Record>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_records: Option<Vec<Record>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub even_exploration: Option<EvenExploration>,
    pub summary: Summary,
}

impl VerificationReport {
    /// 0 when every asserted check passed, 1 otherwise. Boundary-scan and
    /// even-exploration records never affect the exit code.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail == 0 {
            0
        } else {
            1
        }
    }
}

/// Serializes a report. JSON and CSV have stable schemas; text is
/// human-oriented and non-contractual.
pub fn emit_report(report: &VerificationReport, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report)?;
            s.push('\n');
            Ok(s)
        }
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            for record in &report.records {
                writer.serialize(record)?;
            }
            writer.flush()?;
            Ok(String::from_utf8(writer.into_inner()?)?)
        }
        OutputFormat::Text => Ok(render_text(report)),
    }
}

fn render_text(report: &VerificationReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let c = &report.config;
    let s = &report.summary;
    let _ = writeln!(out, "zv verify v{}", report.version);
    let _ = writeln!(out, "kinds: {}", c.kinds.join(","));
    let _ = writeln!(
        out,
        "bounds: weight <= {}, depth <= {}, shift <= {}, primes {}..{}",
        c.weight_max, c.depth_max, c.shift_max, c.prime_lo, c.prime_hi
    );
    let _ = writeln!(
        out,
        "checks: {} | pass: {} | fail: {} | skipped: {} | wall: {} ms",
        s.checks, s.pass, s.fail, s.skipped, s.wall_ms
    );
    for counterexample in &s.counterexamples {
        let _ = writeln!(out, "COUNTEREXAMPLE: {counterexample}");
    }
    if let Some(boundary) = &report.boundary_records {
        let anomalies = s.boundary_anomalies.unwrap_or(0);
        let _ = writeln!(
            out,
            "boundary scan: {} checks, {} anomalies (non-asserting)",
            boundary.len(),
            anomalies
        );
        for record in boundary.iter().filter(|r| !r.pass) {
            let _ = writeln!(
                out,
                "  boundary mismatch: {} {} p={} lhs={} rhs={}",
                record.kind, record.params, record.prime, record.lhs, record.rhs
            );
        }
    }
    if let Some(even) = &report.even_exploration {
        let _ = writeln!(
            out,
            "even-weight scan: {} tuples, Z(k) all zero: {}, nonzero sums: {}",
            even.scanned,
            even.z_all_zero,
            even.nonzero_samples.len()
        );
        for sample in even.nonzero_samples.iter().take(20) {
            let _ = writeln!(
                out,
                "  S(k={},r={},i={},j={}) = {} (mod {})",
                sample.k, sample.r, sample.i, sample.j, sample.value, sample.prime
            );
        }
        if even.nonzero_samples.len() > 20 {
            let _ = writeln!(out, "  ... {} more", even.nonzero_samples.len() - 20);
        }
    }
    let _ = writeln!(out, "status: {}", if s.fail == 0 { "PASS" } else { "FAIL" });
    out
}
