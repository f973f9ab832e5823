//! Outcome of checking one claim on one instance.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::formats::to_graph6;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Hypothesis and conclusion both true.
    Holds,
    /// Some hypothesis of the claim is false on this instance.
    Vacuous,
    /// Hypothesis true, conclusion false.
    Counterexample,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Vacuous => "vacuous",
            Status::Counterexample => "counterexample",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimVerdict {
    pub claim_id: String,
    pub instance: String,
    pub status: Status,
    /// Which hypothesis failed, for vacuous verdicts.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    /// Data sufficient to re-check a counterexample by hand. Holding
    /// verdicts may also carry the computed quantities.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Value>,
}

impl ClaimVerdict {
    pub fn holds(claim_id: &str, instance: impl Into<String>) -> Self {
        ClaimVerdict {
            claim_id: claim_id.to_string(),
            instance: instance.into(),
            status: Status::Holds,
            note: None,
            witness: None,
        }
    }

    pub fn vacuous(claim_id: &str, instance: impl Into<String>, note: impl Into<String>) -> Self {
        ClaimVerdict {
            claim_id: claim_id.to_string(),
            instance: instance.into(),
            status: Status::Vacuous,
            note: Some(note.into()),
            witness: None,
        }
    }

    pub fn counterexample(claim_id: &str, instance: impl Into<String>, witness: Value) -> Self {
        ClaimVerdict {
            claim_id: claim_id.to_string(),
            instance: instance.into(),
            status: Status::Counterexample,
            note: None,
            witness: Some(witness),
        }
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn is_holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn is_vacuous(&self) -> bool {
        self.status == Status::Vacuous
    }

    pub fn is_counterexample(&self) -> bool {
        self.status == Status::Counterexample
    }
}

/// Instance descriptor for a single graph, e.g. `G=Bw`.
pub fn describe_graph(g: &Graph) -> String {
    format!("G={}", to_graph6(g))
}

pub fn describe_pair(g: &Graph, h: &Graph) -> String {
    format!("G={},H={}", to_graph6(g), to_graph6(h))
}

pub fn describe_with_clique(g: &Graph, n: usize) -> String {
    format!("G={},n={n}", to_graph6(g))
}
