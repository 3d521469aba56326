//! Verification reports: a count of checked cases and the counterexamples.

use serde::Serialize;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub check: String,
    pub lambda: Partition,
    pub n: usize,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Report {
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one check; `failure` is `None` when it passed.
    pub fn record(&mut self, failure: Option<Failure>) {
        self.checked += 1;
        self.failures.extend(failure);
    }

    pub fn merge(mut self, other: Report) -> Report {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl Failure {
    pub fn new(check: &str, lambda: &Partition, n: usize, detail: impl Into<String>) -> Self {
        Failure {
            check: check.to_string(),
            lambda: lambda.clone(),
            n,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: impl Serialize) -> Self {
        self.witness = serde_json::to_value(witness).ok();
        self
    }
}
