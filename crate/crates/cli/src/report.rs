//! Report types and the canonical JSON schema.
//!
//! Top level is always `{command, input, result, timing}`. Vertex sets
//! are sorted id arrays; product vertices appear both flattened and as
//! `[g, h]` pairs. The `timing` object carries deterministic work
//! counters (steps simulated, candidate sets explored, cases run) so
//! identical configurations produce byte-identical output.

use serde::Serialize;

use spreadlab::bounds::BoundReport;
use spreadlab::engine::{ConversionTimes, Trace};
use spreadlab::graph::{product_coords, Graph};

#[derive(Serialize)]
pub struct Envelope<I: Serialize, R: Serialize> {
    pub command: &'static str,
    pub input: I,
    pub result: R,
    pub timing: Timing,
}

#[derive(Serialize, Default)]
pub struct Timing {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub explored: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simulations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cases: Option<usize>,
}

#[derive(Serialize)]
pub struct GraphInput {
    /// The family string, or `file:<path>` for graphs read from disk.
    pub source: String,
    pub n: usize,
    pub m: usize,
}

impl GraphInput {
    pub fn new(source: impl Into<String>, g: &Graph) -> Self {
        GraphInput { source: source.into(), n: g.vertex_count(), m: g.edge_count() }
    }
}

#[derive(Serialize)]
pub struct SimulateInput {
    pub graph: GraphInput,
    pub rule: String,
    pub seed: Vec<usize>,
}

#[derive(Serialize)]
pub struct SimulateResult {
    pub converted: bool,
    pub steps: usize,
    pub waves: Vec<Vec<usize>>,
    pub times: Vec<Option<usize>>,
}

impl SimulateResult {
    pub fn new(trace: &Trace, times: &ConversionTimes) -> Self {
        SimulateResult {
            converted: trace.converted,
            steps: trace.steps,
            waves: trace.waves.iter().map(|w| w.to_vec()).collect(),
            times: times.as_slice().to_vec(),
        }
    }
}

#[derive(Serialize)]
pub struct SolveInput {
    pub graph: GraphInput,
    pub rule: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    pub solver_limit: usize,
}

#[derive(Serialize)]
pub struct SolveReport {
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    pub explored: u64,
}

#[derive(Serialize)]
pub struct BoundInput {
    pub product: &'static str,
    pub left: GraphInput,
    pub right: GraphInput,
    pub rule: String,
    pub theorems: Vec<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left_seed: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_seed: Option<Vec<usize>>,
}

#[derive(Serialize)]
pub struct BoundItem {
    pub theorem: u8,
    pub construction: &'static str,
    pub bound: usize,
    pub witness: Vec<usize>,
    pub witness_pairs: Vec<[usize; 2]>,
    pub verified: bool,
    pub steps: usize,
}

impl BoundItem {
    pub fn new(report: &BoundReport, right_vertices: usize) -> Self {
        let witness = report.witness.to_vec();
        let witness_pairs = witness
            .iter()
            .map(|&id| {
                let (g, h) = product_coords(id, right_vertices);
                [g, h]
            })
            .collect();
        BoundItem {
            theorem: report.construction.id(),
            construction: report.construction.name(),
            bound: report.bound,
            witness,
            witness_pairs,
            verified: report.verified,
            steps: report.steps,
        }
    }
}

#[derive(Serialize)]
pub struct GenResult {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GenResult {
    pub fn new(g: &Graph) -> Self {
        GenResult {
            n: g.vertex_count(),
            m: g.edge_count(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub code: &'static str,
    pub message: String,
}

#[derive(Serialize)]
pub struct ErrorReport {
    pub command: &'static str,
    pub error: ErrorBody,
}

/// Renders any envelope as the canonical JSON document: pretty-printed,
/// trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}
