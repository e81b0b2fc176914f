//! JSON report shapes. Field order is part of the output contract, and
//! quantities that may exceed 53-bit float precision (polynomial
//! coefficients and set counts) are emitted as decimal strings.

use serde::Serialize;

#[derive(Serialize)]
pub struct AnalysisReport {
    pub graph: GraphMeta,
    pub k: usize,
    pub include_empty: bool,
    pub recon: ReconMeta,
    pub alpha: usize,
    pub polynomial: Vec<String>,
    pub eval_at_1: String,
    pub eval_at_minus_1: String,
    pub components: ComponentsMeta,
    pub bipartition: BipartitionMeta,
    pub girth: Option<usize>,
    pub degrees: DegreesMeta,
    pub forest: ForestMeta,
    pub hamiltonian: HamMeta,
}

#[derive(Serialize)]
pub struct GraphMeta {
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

#[derive(Serialize)]
pub struct ReconMeta {
    pub order: usize,
    pub size: usize,
}

#[derive(Serialize)]
pub struct ComponentsMeta {
    pub count: usize,
    pub sizes: Vec<usize>,
}

#[derive(Serialize)]
pub struct BipartitionMeta {
    pub even: usize,
    pub odd: usize,
}

#[derive(Serialize)]
pub struct DegreesMeta {
    pub min: usize,
    pub max: usize,
    pub regular: bool,
}

#[derive(Serialize)]
pub struct ForestMeta {
    pub is_forest: bool,
    pub is_tree: bool,
}

#[derive(Serialize)]
pub struct HamMeta {
    pub status: &'static str,
    pub method: &'static str,
}

#[derive(Serialize)]
pub struct PolyReport {
    pub alpha: usize,
    pub coeffs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eval: Option<PolyEval>,
}

#[derive(Serialize)]
pub struct PolyEval {
    pub x: i64,
    pub value: String,
}

#[derive(Serialize)]
pub struct BuildReport {
    pub base: BaseMeta,
    pub k: usize,
    pub include_empty: bool,
    pub order: usize,
    pub size: usize,
    pub nodes: Vec<Vec<usize>>,
    pub edges: Vec<(u32, u32)>,
}

#[derive(Serialize)]
pub struct BaseMeta {
    pub n: usize,
    pub m: usize,
}

#[derive(Serialize)]
pub struct ClaimCountsOut {
    pub pass: usize,
    pub vacuous: usize,
    pub fail: usize,
    pub error: usize,
}
