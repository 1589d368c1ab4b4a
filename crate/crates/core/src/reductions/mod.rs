//! Hardness reductions as instance generators with planted witnesses.
//!
//! Each construction turns a source instance (unsigned graph, cubic graph,
//! hypergraph) with parameter `k` into a signed graph and budget `k'`, and
//! records which vertex groups came from which gadget so that a source
//! solution can be mapped to an alliance of the target.
//!
//! The `source_*` helpers solve the small source problems exhaustively; they
//! exist for equivalence testing and for planting witnesses from the CLI.

mod hitting_set;
mod unsigned_oa;
mod vertex_cover;

use std::collections::BTreeMap;

use serde::Serialize;

pub use hitting_set::reduce_hitting_set;
pub use unsigned_oa::{reduce_unsigned_oa, UoaVariant};
pub use vertex_cover::{reduce_vertex_cover, VcVariant, VcWitness};

use crate::alliance::{is_offensive_alliance, AllianceCertificate};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, UnsignedGraph};
use crate::vset::{Combinations, VertexSet};

/// A hypergraph on vertices `0..n` with non-empty, duplicate-free
/// hyperedges. Vertex labels default to `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut clean = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyHyperedge(i + 1));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            e.sort_unstable();
            e.dedup();
            clean.push(e);
        }
        Ok(Hypergraph {
            n,
            edges: clean,
            labels: (1..=n).map(|i| i.to_string()).collect(),
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = labels;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_hitting_set(&self, s: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.iter().any(|&v| s.contains(v)))
    }
}

/// Which construction produced an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "source")]
pub enum ReductionKind {
    UnsignedOa { k: usize, variant: UoaVariant },
    VertexCover { k: usize, variant: VcVariant, witness: VcWitness },
    HittingSet { k: usize },
}

#[derive(Debug, Clone)]
pub struct ReductionInstance {
    pub graph: SignedGraph,
    pub budget: usize,
    pub kind: ReductionKind,
    /// Image of source vertex `i` in the constructed graph.
    pub source_vertices: Vec<usize>,
    /// Gadget vertex groups by name; together with `source_vertices` they
    /// partition the constructed vertex set.
    pub groups: BTreeMap<String, Vec<usize>>,
    /// Vertices added alongside source vertex `i` when it is in the source
    /// solution.
    companions: Vec<Vec<usize>>,
    /// Vertices in every mapped witness.
    fixed: Vec<usize>,
}

impl ReductionInstance {
    /// Maps a source solution (source vertex indices) to the planted
    /// alliance of the constructed graph.
    pub fn map_witness(&self, solution: &[usize]) -> Result<VertexSet> {
        let n = self.graph.n();
        let mut s = VertexSet::from_iter(n, self.fixed.iter().copied());
        for &v in solution {
            let &img = self.source_vertices.get(v).ok_or(Error::VertexOutOfRange {
                vertex: v,
                n: self.source_vertices.len(),
            })?;
            s.insert(img);
            for &c in &self.companions[v] {
                s.insert(c);
            }
        }
        if s.is_empty() {
            return Err(Error::InvalidSourceSolution(
                "maps to the empty set".into(),
            ));
        }
        Ok(s)
    }

    /// Maps and verifies a source solution.
    pub fn certify(&self, solution: &[usize]) -> Result<AllianceCertificate> {
        is_offensive_alliance(&self.graph, &self.map_witness(solution)?)
    }

    /// Group name of every constructed vertex (`"source"` for copies of
    /// source vertices).
    pub fn group_of(&self) -> Vec<&str> {
        let mut out = vec!["source"; self.graph.n()];
        for (name, vs) in &self.groups {
            for &v in vs {
                out[v] = name;
            }
        }
        out
    }
}

/// Incremental builder for labelled, grouped constructions.
struct Builder {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    edges: Vec<(usize, usize, Sign)>,
    groups: BTreeMap<String, Vec<usize>>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            labels: Vec::new(),
            index: BTreeMap::new(),
            edges: Vec::new(),
            groups: BTreeMap::new(),
        }
    }

    /// Adds a vertex; `group` is `None` for copies of source vertices.
    fn vertex(&mut self, label: String, group: Option<&str>) -> Result<usize> {
        let id = self.labels.len();
        if self.index.insert(label.clone(), id).is_some() {
            return Err(Error::BadParameter(format!(
                "constructed label `{label}` is not unique; rename source vertices"
            )));
        }
        self.labels.push(label);
        if let Some(g) = group {
            self.groups.entry(g.to_string()).or_default().push(id);
        }
        Ok(id)
    }

    fn pos(&mut self, u: usize, v: usize) {
        self.edges.push((u, v, Sign::Pos));
    }

    fn neg(&mut self, u: usize, v: usize) {
        self.edges.push((u, v, Sign::Neg));
    }

    fn finish(
        self,
        budget: usize,
        kind: ReductionKind,
        source_vertices: Vec<usize>,
        companions: Vec<Vec<usize>>,
        fixed: Vec<usize>,
    ) -> Result<ReductionInstance> {
        let graph = SignedGraph::new(self.labels.len(), &self.edges)?.with_labels(self.labels);
        Ok(ReductionInstance {
            graph,
            budget,
            kind,
            source_vertices,
            groups: self.groups,
            companions,
            fixed,
        })
    }
}

/// First (lexicographic) minimum unsigned offensive alliance, if one of
/// size at most `budget` exists.
pub fn source_unsigned_oa(g: &UnsignedGraph, budget: Option<usize>) -> Option<Vec<usize>> {
    let n = g.n();
    let cap = budget.unwrap_or(n).min(n);
    (1..=cap).find_map(|size| {
        first_subset(n, size, |s| {
            s.iter().all(|v| {
                g.neighbors(v).iter().all(|&u| {
                    s.contains(u) || {
                        let inside = g.degree_in(u, s);
                        inside >= g.degree(u) - inside + 1
                    }
                })
            })
        })
    })
}

/// First minimum vertex cover of size at most `budget`.
pub fn source_vertex_cover(g: &UnsignedGraph, budget: Option<usize>) -> Option<Vec<usize>> {
    let n = g.n();
    let edges = g.edges();
    let cap = budget.unwrap_or(n).min(n);
    (0..=cap).find_map(|size| {
        first_subset(n, size, |s| edges.iter().all(|&(u, v)| s.contains(u) || s.contains(v)))
    })
}

/// First minimum hitting set of size at most `budget`.
pub fn source_hitting_set(h: &Hypergraph, budget: Option<usize>) -> Option<Vec<usize>> {
    let n = h.n();
    let cap = budget.unwrap_or(n).min(n);
    (0..=cap).find_map(|size| first_subset(n, size, |s| h.is_hitting_set(s)))
}

fn first_subset(n: usize, size: usize, mut ok: impl FnMut(&VertexSet) -> bool) -> Option<Vec<usize>> {
    if size == 0 {
        return ok(&VertexSet::new(n)).then(Vec::new);
    }
    let mut combos = Combinations::new(n, size);
    while let Some(idx) = combos.current() {
        let s = VertexSet::from_iter(n, idx.iter().copied());
        if ok(&s) {
            return Some(idx.to_vec());
        }
        combos.advance();
    }
    None
}
