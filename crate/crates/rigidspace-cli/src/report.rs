//! Report types shared by every subcommand.
//!
//! JSON output is the machine interface and must be byte-identical across
//! reruns with the same config, so nothing time- or environment-dependent
//! goes into it; wall-clock runtime is shown in text output only.

use serde::Serialize;

/// Version tag carried by every JSON document the tool emits.
pub const SCHEMA: &str = "rigidspace-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
            Status::Skipped => write!(f, "skipped"),
        }
    }
}

/// One verified claim. `computed` and `expected` are rendered values; the
/// claim passes iff they match under the claim's own comparator, which is
/// applied before the report is built.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    pub anchor: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Effective run configuration after defaults are applied.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    /// Exhaustive bound for double-kind (signed) checks.
    pub max_n: usize,
    pub tolerance: f64,
    pub seed: u64,
    #[serde(skip)]
    pub format: Format,
}

impl RunConfig {
    /// Simple-kind (plain permutation) checks go one degree further.
    pub fn simple_max(&self) -> usize {
        self.max_n + 1
    }
}

#[derive(Serialize)]
pub struct VerifyDocument<'a> {
    pub schema: &'static str,
    pub command: &'static str,
    pub suite: &'a str,
    pub config: &'a RunConfig,
    pub reports: &'a [VerificationReport],
}

pub fn render_reports_text(reports: &[VerificationReport], runtime_ms: u128) -> String {
    let mut out = String::new();
    let wide = reports.iter().map(|r| r.claim_id.len()).max().unwrap_or(0);
    for r in reports {
        out.push_str(&format!(
            "{:7} {:wide$}  computed: {} | expected: {} | {}\n",
            r.status.to_string(),
            r.claim_id,
            r.computed,
            r.expected,
            r.anchor,
        ));
    }
    let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    let skipped = reports.iter().filter(|r| r.status == Status::Skipped).count();
    out.push_str(&format!(
        "{} pass, {} fail, {} skipped in {} ms\n",
        passed, failed, skipped, runtime_ms
    ));
    out
}
