use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// A single violated assertion.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    /// The graph the assertion was about, when there is one.
    pub graph6: Option<String>,
    pub reason: String,
    /// Signed amount by which the assertion missed, when it is numeric.
    pub margin: Option<f64>,
}

/// Smallest radius in a scanned pool and its distance to the next class.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Minimizer {
    pub graph6: String,
    pub radius: f64,
    pub runner_up_graph6: Option<String>,
    pub runner_up_radius: Option<f64>,
    /// `runner_up_radius − radius`, absent when the pool has a single class.
    pub gap: Option<f64>,
}

/// Outcome of one verification suite. Field order and map ordering are
/// fixed, so equal inputs give byte-identical JSON.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub parameters: BTreeMap<String, Value>,
    pub graphs_scanned: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub excluded_no_k_matching: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pool_size: Option<usize>,
    /// Number of individual assertions evaluated.
    pub checks: usize,
    pub failures: Vec<Failure>,
    pub minimizer: Option<Minimizer>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub records: Vec<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            parameters: BTreeMap::new(),
            graphs_scanned: 0,
            excluded_no_k_matching: None,
            pool_size: None,
            checks: 0,
            failures: Vec::new(),
            minimizer: None,
            records: Vec::new(),
            notes: Vec::new(),
            passed: true,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    /// Records one assertion; a false `ok` becomes a failure.
    pub fn check(&mut self, ok: bool, graph6: Option<String>, reason: impl FnOnce() -> String, margin: Option<f64>) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                graph6,
                reason: reason(),
                margin,
            });
        }
    }

    /// Sets `passed` from the failure list. Call once all checks are in.
    pub fn finish(mut self) -> Self {
        self.passed = self.failures.is_empty();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report fields are serializable")
    }
}
