//! Machine-readable analysis reports: constants with exact and decimal
//! renderings, spectrum, witnesses, check results, timings, and a canonical
//! adjacency hash used as a regression anchor.

use crate::combinatorics::{CutWitness, EnumConfig};
use crate::graph::RegularMultigraph;
use crate::harness::{CheckReport, HarnessError, InstanceData, Verdict};
use crate::ratio::ExactRatio;
use crate::spec_doc::{GraphSpecDocument, ResolvedSpec};
use crate::spectral::SpectrumReport;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::time::Instant;

pub const REPORT_SCHEMA_VERSION: &str = "1";

/// Stable digest of the adjacency matrix in row-major vertex-label order.
pub fn canonical_hash(gr: &RegularMultigraph) -> String {
    let mut hasher = Sha256::new();
    hasher.update(b"adjacency-v1|");
    hasher.update(gr.n().to_le_bytes());
    hasher.update(gr.degree().to_le_bytes());
    for &x in gr.adjacency() {
        hasher.update(x.to_le_bytes());
    }
    hex_string(&hasher.finalize())
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphIdentity {
    pub family: String,
    pub description: String,
    pub n: usize,
    pub d: u64,
    pub adjacency_hash: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstantsBlock {
    pub edge_cheeger: Option<ExactRatio>,
    pub vertex_cheeger: Option<ExactRatio>,
    pub edge_bipartiteness: Option<ExactRatio>,
    pub vertex_bipartiteness: Option<ExactRatio>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSets {
    Subset { set: Vec<usize> },
    Pair { left: Vec<usize>, right: Vec<usize> },
}

impl From<&CutWitness> for WitnessSets {
    fn from(w: &CutWitness) -> Self {
        match w {
            CutWitness::Subset { set, .. } => WitnessSets::Subset {
                set: set.to_indices(),
            },
            CutWitness::Pair { left, right, .. } => WitnessSets::Pair {
                left: left.to_indices(),
                right: right.to_indices(),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessBlock {
    pub edge_cheeger: Option<WitnessSets>,
    pub vertex_cheeger: Option<WitnessSets>,
    pub edge_bipartiteness: Option<WitnessSets>,
    pub vertex_bipartiteness: Option<WitnessSets>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timings {
    pub build_ms: f64,
    pub constants_ms: f64,
    pub spectrum_ms: f64,
    pub checks_ms: f64,
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub schema_version: String,
    pub graph: GraphIdentity,
    /// Echo of the input document; re-analyzing it reproduces the hash.
    pub spec: GraphSpecDocument,
    pub constants: ConstantsBlock,
    pub witnesses: WitnessBlock,
    pub spectrum: SpectrumReport,
    pub checks: Vec<CheckReport>,
    pub timing: Timings,
}

/// Runs the full pipeline on a resolved spec document.
pub fn analyze(
    resolved: &ResolvedSpec,
    cfg: &EnumConfig,
    seed: u64,
    build_ms: f64,
    corrupt_spectrum: bool,
) -> Result<AnalysisReport, HarnessError> {
    let constants_start = Instant::now();
    let mut data = InstanceData::compute(
        "analysis",
        &resolved.gr,
        &resolved.group,
        &resolved.action,
        cfg,
    )?;
    let constants_ms = constants_start.elapsed().as_secs_f64() * 1e3;

    let spectrum_start = Instant::now();
    if corrupt_spectrum {
        data.spectrum = crate::spectral::normalized_spectrum(&complete_graph(resolved.gr.n()))?;
    }
    let spectrum_ms = spectrum_start.elapsed().as_secs_f64() * 1e3;

    let checks_start = Instant::now();
    let checks = crate::harness::full_suite(&data, seed)?;
    let checks_ms = checks_start.elapsed().as_secs_f64() * 1e3;

    Ok(AnalysisReport {
        schema_version: REPORT_SCHEMA_VERSION.to_string(),
        graph: GraphIdentity {
            family: resolved.gr.provenance().family.as_str().to_string(),
            description: resolved.gr.provenance().description.clone(),
            n: resolved.gr.n(),
            d: resolved.gr.degree(),
            adjacency_hash: canonical_hash(&resolved.gr),
        },
        spec: resolved.doc.clone(),
        constants: ConstantsBlock {
            edge_cheeger: data.edge_cheeger.as_ref().map(|x| x.0.clone()),
            vertex_cheeger: data.vertex_cheeger.as_ref().map(|x| x.0.clone()),
            edge_bipartiteness: data.beta_edge.as_ref().map(|x| x.0.clone()),
            vertex_bipartiteness: data.beta_vert.as_ref().map(|x| x.0.clone()),
        },
        witnesses: WitnessBlock {
            edge_cheeger: data.edge_cheeger.as_ref().map(|x| (&x.1).into()),
            vertex_cheeger: data.vertex_cheeger.as_ref().map(|x| (&x.1).into()),
            edge_bipartiteness: data.beta_edge.as_ref().map(|x| (&x.1).into()),
            vertex_bipartiteness: data.beta_vert.as_ref().map(|x| (&x.1).into()),
        },
        spectrum: data.spectrum,
        checks,
        timing: Timings {
            build_ms,
            constants_ms,
            spectrum_ms,
            checks_ms,
        },
    })
}

/// A complete graph stand-in used by the spectrum-corruption debug flag: a
/// valid regular graph whose spectrum is inconsistent with the analyzed one,
/// so the harness must flag failures.
fn complete_graph(n: usize) -> RegularMultigraph {
    use crate::graph::{Family, Provenance};
    let mut adj = vec![1u32; n * n];
    for v in 0..n {
        adj[v * n + v] = 0;
    }
    RegularMultigraph::from_adjacency(
        n,
        adj,
        Provenance {
            family: Family::Cayley,
            description: "debug-corrupt-complete".into(),
        },
    )
    .expect("complete graph is regular")
}

fn opt_num(r: &Option<ExactRatio>) -> (String, String) {
    match r {
        Some(x) => (x.numer().to_string(), x.denom().to_string()),
        None => (String::new(), String::new()),
    }
}

pub const CSV_HEADER: &str = "family,n,d,h_edge_num,h_edge_den,h_vert_num,h_vert_den,\
beta_edge_num,beta_edge_den,beta_vert_num,beta_vert_den,mu2,mu_n,verdicts,status,name";

/// One CSV row per analysis; the sweep writes one per instance.
#[allow(clippy::too_many_arguments)]
pub fn csv_row(
    family: &str,
    n: usize,
    d: u64,
    constants: &ConstantsBlock,
    mu2: f64,
    mu_n: f64,
    verdicts: &[(String, Verdict)],
    status: &str,
    name: &str,
) -> String {
    let (he_n, he_d) = opt_num(&constants.edge_cheeger);
    let (hv_n, hv_d) = opt_num(&constants.vertex_cheeger);
    let (be_n, be_d) = opt_num(&constants.edge_bipartiteness);
    let (bv_n, bv_d) = opt_num(&constants.vertex_bipartiteness);
    let verdict_cell = verdicts
        .iter()
        .map(|(id, v)| {
            let tag = match v {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
                Verdict::Inapplicable => "inapplicable",
            };
            format!("{id}={tag}")
        })
        .collect::<Vec<_>>()
        .join(";");
    format!(
        "{family},{n},{d},{he_n},{he_d},{hv_n},{hv_d},{be_n},{be_d},{bv_n},{bv_d},\
         {mu2:.12},{mu_n:.12},{verdict_cell},{status},{name}"
    )
}
