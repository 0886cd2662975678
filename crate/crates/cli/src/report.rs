use serde::{Deserialize, Serialize};

use seaweed_core::SpectrumReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UTurnJson {
    pub orbit: Vec<usize>,
    pub start: Option<usize>,
    pub right: usize,
    pub left: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummand {
    #[serde(rename = "type")]
    pub lie_type: String,
    /// Ambient index of each local root.
    pub labels: Vec<usize>,
    pub pi1: Vec<usize>,
    pub pi2: Vec<usize>,
    pub frobenius: bool,
    pub orbits: Vec<Vec<usize>>,
    pub u_turns: Vec<UTurnJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub pi1: Vec<usize>,
    pub pi2: Vec<usize>,
    pub pi_union: Vec<usize>,
    pub frobenius: bool,
    pub summands: Vec<CheckSummand>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub side: String,
    #[serde(rename = "type")]
    pub shape: String,
    pub roots: Vec<usize>,
    /// Eigenvalues on the component, sorted.
    pub eigenvalues: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumSummand {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub labels: Vec<usize>,
    pub pi1: Vec<usize>,
    pub pi2: Vec<usize>,
    pub simple_eigenvalues: Vec<i64>,
    pub components: Vec<ComponentJson>,
    pub spectrum: SpectrumReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumOutput {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub pi1: Vec<usize>,
    pub pi2: Vec<usize>,
    pub summands: Vec<SpectrumSummand>,
    pub spectrum: SpectrumReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOutput {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub pi1: Vec<usize>,
    pub pi2: Vec<usize>,
    pub dimension: usize,
    pub seed: u64,
    pub index: usize,
    pub samples: usize,
    pub meander_frobenius: bool,
    pub combinatorial: Option<SpectrumReport>,
    pub oracle: Vec<SpectrumReport>,
    pub agree: bool,
}
