use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// One counterexample: which case, what the identity predicted, what came out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub key: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    pub fn new(key: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        Failure { key: key.into(), expected: expected.to_string(), actual: actual.to_string() }
    }
}

/// Configuration as echoed into a report. Parallelism is deliberately absent
/// so that reports do not depend on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub m1: String,
    pub m2: String,
    pub s1: String,
    pub s2: String,
    pub a1: String,
    pub a2: String,
    pub variant: String,
    pub rep: String,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub config: ConfigEcho,
    pub cases: usize,
    /// The first [`Report::MAX_FAILURES`] failures in case order.
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
    pub pass: bool,
}

impl Report {
    pub const MAX_FAILURES: usize = 100;

    /// True when the outcome is what the check is designed to produce:
    /// a clean pass, or at least one failure for the negative control.
    pub fn as_expected(&self) -> bool {
        if self.check == "negative-control" {
            !self.pass
        } else {
            self.pass
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        render_text(std::slice::from_ref(self))
    }
}

pub fn reports_to_json(reports: &[Report]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

/// Human-readable table, one row per report, followed by counterexamples.
pub fn render_text(reports: &[Report]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<20} {:<10} {:<10} {:<17} {:>8} {:>8} {:>9}  result",
        "check", "a", "variant", "rep", "cases", "failed", "ms"
    );
    for r in reports {
        let module_check = matches!(r.check.as_str(), "jet-axioms" | "negative-control");
        let (a, variant, rep) = if module_check {
            (format!("({},{})", r.config.a1, r.config.a2), r.config.variant.as_str(), r.config.rep.as_str())
        } else {
            ("-".to_string(), "-", "-")
        };
        let result = match (r.pass, r.as_expected()) {
            (true, _) => "pass",
            (false, true) => "fail (expected)",
            (false, false) => "FAIL",
        };
        let _ = writeln!(
            out,
            "{:<20} {:<10} {:<10} {:<17} {:>8} {:>8} {:>9}  {}",
            r.check,
            a,
            variant,
            rep,
            r.cases,
            r.failures.len(),
            r.elapsed_ms,
            result
        );
    }
    for r in reports.iter().filter(|r| !r.pass) {
        let _ = writeln!(out, "\n{} counterexamples:", r.check);
        for f in &r.failures {
            let _ = writeln!(out, "  {}\n    expected: {}\n    actual:   {}", f.key, f.expected, f.actual);
        }
    }
    out
}
