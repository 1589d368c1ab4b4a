//! JSON documents written by the CLI. Every document carries `schema: 1`.

use serde::Serialize;
use sha2::{Digest, Sha256};

use sak_core::alliance::{AllianceCertificate, ComponentBounds, Condition};
use sak_core::snd::{ClassKind, SndPartition};
use sak_core::solver::dispatch::Phase;
use sak_core::{DegreeProfile, Sign, SignedGraph};

pub const SCHEMA: u32 = 1;

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn labels(g: &SignedGraph, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
    vs.into_iter().map(|v| g.label(v).to_string()).collect()
}

#[derive(Debug, Serialize)]
pub struct Stats {
    pub n: usize,
    pub pos_edges: usize,
    pub neg_edges: usize,
    /// Candidate sets or search nodes examined by the final phase.
    pub explored: u64,
}

/// Result of `sak solve`. Apart from `phases[].millis`, re-running
/// `command` on the same input reproduces the report byte for byte.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    pub input_sha256: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition_sha256: Option<String>,
    pub strategy: String,
    /// `yes` when an alliance within the budget (if any) was found.
    pub status: &'static str,
    pub budget: Option<usize>,
    pub optimum: Option<usize>,
    pub witness: Option<Vec<String>>,
    pub phases: Vec<Phase>,
    pub stats: Stats,
}

#[derive(Debug, Serialize)]
pub struct ViolationOut {
    pub vertex: String,
    pub failed: Vec<Condition>,
    pub profile: DegreeProfile,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub verdict: &'static str,
    pub alliance: Vec<String>,
    pub boundary: Vec<String>,
    /// The set is a union of whole components.
    pub boundary_empty: bool,
    pub violations: Vec<ViolationOut>,
}

impl VerifyReport {
    pub fn new(g: &SignedGraph, cert: &AllianceCertificate) -> Self {
        VerifyReport {
            schema: SCHEMA,
            verdict: if cert.accepted() { "accepted" } else { "rejected" },
            alliance: labels(g, cert.alliance.iter()),
            boundary: labels(g, cert.boundary.iter()),
            boundary_empty: cert.boundary.is_empty(),
            violations: cert
                .violations
                .iter()
                .map(|v| ViolationOut {
                    vertex: g.label(v.vertex).to_string(),
                    failed: v.failed.clone(),
                    profile: v.profile,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassOut {
    pub kind: ClassKind,
    pub members: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct SndReport {
    pub schema: u32,
    pub classes: usize,
    pub partition: Vec<ClassOut>,
    /// Sign between every pair of classes (`null`: not adjacent or same
    /// class).
    pub inter_sign: Vec<Vec<Option<Sign>>>,
}

impl SndReport {
    pub fn new(g: &SignedGraph, p: &SndPartition) -> Self {
        SndReport {
            schema: SCHEMA,
            classes: p.k(),
            partition: p
                .classes
                .iter()
                .zip(&p.kinds)
                .map(|(c, &kind)| ClassOut {
                    kind,
                    members: labels(g, c.iter().copied()),
                })
                .collect(),
            inter_sign: p.inter_sign.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ComponentOut {
    pub vertices: Vec<String>,
    pub min_pos_degree: usize,
    pub max_pos_degree: usize,
    pub min_neg_degree: usize,
    pub max_neg_degree: usize,
    /// `Δ- >= ceil((δ+ + 1) / 2)`; when false only the whole component is
    /// an alliance.
    pub existence_precondition: bool,
    /// `δ+ + 1`.
    pub size_lower_bound: usize,
    /// Vertices that could lie on the boundary of some alliance.
    pub attackable: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct BoundsReport {
    pub schema: u32,
    pub components: Vec<ComponentOut>,
}

impl BoundsReport {
    pub fn new(g: &SignedGraph, comps: Vec<ComponentBounds>) -> Self {
        BoundsReport {
            schema: SCHEMA,
            components: comps
                .into_iter()
                .map(|c| ComponentOut {
                    vertices: labels(g, c.vertices),
                    min_pos_degree: c.min_pos_degree,
                    max_pos_degree: c.max_pos_degree,
                    min_neg_degree: c.min_neg_degree,
                    max_neg_degree: c.max_neg_degree,
                    existence_precondition: c.existence_precondition,
                    size_lower_bound: c.size_lower_bound,
                    attackable: labels(g, c.attackable),
                })
                .collect(),
        }
    }
}
