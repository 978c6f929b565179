//! Suite reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Expected failure that did fail.
    Xfail,
    /// Expected failure that passed.
    Xpass,
}

impl Status {
    pub fn ok(self) -> bool {
        matches!(self, Status::Pass | Status::Xfail)
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Xfail => "XFAIL",
            Status::Xpass => "XPASS",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub anchor: String,
    pub trials: usize,
    pub failures: usize,
    /// Trials inside the tolerance band around a boundary, not counted either way.
    #[serde(default)]
    pub skipped: usize,
    pub worst_defect: f64,
    pub expected_fail: bool,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteSection {
    pub name: String,
    pub backend: String,
    pub checks: Vec<CheckReport>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub xfail: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub total_ms: f64,
    /// Elapsed milliseconds per suite.
    pub suites: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub backend: String,
    pub dim: usize,
    pub trials: usize,
    pub tol_eq: f64,
    pub suites: Vec<SuiteSection>,
    pub summary: Summary,
    /// Wall-clock data; excluded from determinism comparisons.
    pub timing: Timing,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// The report without its timing field, as pretty JSON.
    pub fn deterministic_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("serializable");
        if let Some(o) = v.as_object_mut() {
            o.remove("timing");
        }
        serde_json::to_string_pretty(&v).expect("serializable")
    }

    /// One line per check.
    pub fn summary_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for s in &self.suites {
            for c in &s.checks {
                out.push(format!(
                    "{:<5} {}/{} [{}] trials={} failures={} worst={:.3e} :: {}",
                    c.status.label(),
                    s.name,
                    c.name,
                    s.backend,
                    c.trials,
                    c.failures,
                    c.worst_defect,
                    c.anchor
                ));
            }
        }
        out
    }
}

/// Accumulator for one check.
#[derive(Debug, Clone)]
pub struct Tally {
    pub name: String,
    pub anchor: String,
    pub trials: usize,
    pub failures: usize,
    pub skipped: usize,
    pub worst_defect: f64,
    pub expected_fail: bool,
    pub note: Option<String>,
}

impl Tally {
    pub fn new(name: &str, anchor: &str) -> Self {
        Tally {
            name: name.to_string(),
            anchor: anchor.to_string(),
            trials: 0,
            failures: 0,
            skipped: 0,
            worst_defect: 0.0,
            expected_fail: false,
            note: None,
        }
    }

    pub fn expect_failure(mut self) -> Self {
        self.expected_fail = true;
        self
    }

    /// Records one trial; a non-finite defect counts as a failure.
    pub fn record(&mut self, ok: bool, defect: f64) {
        self.trials += 1;
        if !defect.is_finite() {
            self.failures += 1;
            return;
        }
        if !ok {
            self.failures += 1;
        }
        self.worst_defect = self.worst_defect.max(defect);
    }

    /// Records `defect ≤ bound`.
    pub fn bound(&mut self, defect: f64, bound: f64) {
        self.record(defect <= bound, defect);
    }

    pub fn flag(&mut self, ok: bool) {
        self.record(ok, 0.0);
    }

    /// Counts a trial skipped as boundary-ambiguous without failing it.
    pub fn skip(&mut self) {
        self.trials += 1;
        self.skipped += 1;
    }

    pub fn fail_with<E: std::fmt::Debug>(&mut self, e: E) {
        self.trials += 1;
        self.failures += 1;
        if self.note.is_none() {
            self.note = Some(format!("{e:?}"));
        }
    }

    pub fn finish(self) -> CheckReport {
        let failed = self.failures > 0;
        let status = match (self.expected_fail, failed) {
            (false, false) => Status::Pass,
            (false, true) => Status::Fail,
            (true, true) => Status::Xfail,
            (true, false) => Status::Xpass,
        };
        CheckReport {
            name: self.name,
            anchor: self.anchor,
            trials: self.trials,
            failures: self.failures,
            skipped: self.skipped,
            worst_defect: self.worst_defect,
            expected_fail: self.expected_fail,
            status,
            note: self.note,
        }
    }
}
