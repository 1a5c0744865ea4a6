//! The versioned JSON report emitted by the command-line tool. Field order
//! is fixed by declaration and every set serializes as a sorted index
//! array, so re-serializing a report is byte-stable.

use serde::{Deserialize, Serialize};

use crate::breakdown::DifferentialBreakdown;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::{InvariantResult, Witness};
use crate::theorems::{CheckOutcome, Counterexample};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub graph: GraphRecord,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub results: Vec<ResultRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub n: usize,
    pub edge_list: Vec<(usize, usize)>,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub invariant: String,
    pub value: i64,
    pub method: String,
    pub witness: WitnessRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub breakdown: Option<BreakdownRecord>,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessRecord {
    Set { vertices: Vec<usize> },
    Function { weights: Vec<u8> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BreakdownRecord {
    pub set: Vec<usize>,
    pub external: Vec<usize>,
    pub weak: Vec<usize>,
    pub strong: Vec<usize>,
    pub differential: i64,
    pub strong_differential: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleRecord>,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub graph: GraphRecord,
    pub witnesses: Vec<(String, Vec<usize>)>,
}

impl Report {
    pub fn new(graph: &Graph, source: impl Into<String>) -> Report {
        Report {
            schema_version: SCHEMA_VERSION.to_string(),
            graph: GraphRecord::new(graph, source),
            results: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Report> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            position: e.column(),
            message: format!("invalid report JSON: {e}"),
        })
    }
}

impl GraphRecord {
    pub fn new(graph: &Graph, source: impl Into<String>) -> GraphRecord {
        GraphRecord {
            n: graph.order(),
            edge_list: graph.edges().to_vec(),
            source: source.into(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.n, &self.edge_list)
    }
}

impl ResultRecord {
    pub fn new(result: &InvariantResult, elapsed_ms: u128) -> ResultRecord {
        let witness = match &result.witness {
            Witness::Set(s) => WitnessRecord::Set {
                vertices: s.to_vec(),
            },
            Witness::Function(f) => WitnessRecord::Function {
                weights: f.weights().to_vec(),
            },
        };
        ResultRecord {
            invariant: result.invariant.id().to_string(),
            value: result.value,
            method: result.method.id().to_string(),
            witness,
            breakdown: result.breakdown.as_ref().map(BreakdownRecord::new),
            elapsed_ms,
        }
    }

    /// Flat CSV row: graph id, invariant, value, witness joined by `;`.
    pub fn csv_row(&self, graph_id: &str) -> String {
        let witness = match &self.witness {
            WitnessRecord::Set { vertices } => vertices
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(";"),
            WitnessRecord::Function { weights } => weights
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(";"),
        };
        format!("{graph_id},{},{},{witness}", self.invariant, self.value)
    }
}

impl BreakdownRecord {
    pub fn new(bd: &DifferentialBreakdown) -> BreakdownRecord {
        BreakdownRecord {
            set: bd.set.to_vec(),
            external: bd.external.to_vec(),
            weak: bd.weak.to_vec(),
            strong: bd.strong.to_vec(),
            differential: bd.differential,
            strong_differential: bd.strong_differential,
        }
    }
}

impl CheckRecord {
    pub fn new(outcome: &CheckOutcome, elapsed_ms: u128) -> CheckRecord {
        CheckRecord {
            id: outcome.id.clone(),
            status: outcome.status.id().to_string(),
            lhs: outcome.lhs,
            rhs: outcome.rhs,
            detail: outcome.detail.clone(),
            counterexample: outcome
                .counterexample
                .as_ref()
                .map(CounterexampleRecord::new),
            elapsed_ms,
        }
    }
}

impl CounterexampleRecord {
    pub fn new(ce: &Counterexample) -> CounterexampleRecord {
        let source = ce
            .source
            .as_ref()
            .map(|s| s.to_string())
            .unwrap_or_else(|| "unknown".to_string());
        CounterexampleRecord {
            graph: GraphRecord::new(&ce.graph, source),
            witnesses: ce
                .witnesses
                .iter()
                .map(|(name, set)| (name.clone(), set.to_vec()))
                .collect(),
        }
    }
}
