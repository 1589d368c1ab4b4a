//! Exact minimum offensive alliance solvers.
//!
//! [`brute`] is the reference oracle; [`branch`] is an exact branching search
//! for larger sparse instances; [`small`] recognises optima of size one and
//! two directly; [`dispatch`] picks a route the way the CLI does.

pub mod branch;
pub mod brute;
pub mod dispatch;
pub mod small;

use serde::Serialize;

use crate::alliance::{is_offensive_alliance, AllianceCertificate};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::vset::VertexSet;

pub use branch::min_offensive_alliance_branching;
pub use brute::{min_offensive_alliance_bruteforce, BruteForce};
pub use small::{small_alliance_check, SmallAlliances};

/// Which algorithm produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Brute,
    Branch,
    Small,
    Closed,
    Ilp,
    Dp,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Brute => "brute",
            Strategy::Branch => "branch",
            Strategy::Small => "small",
            Strategy::Closed => "closed",
            Strategy::Ilp => "ilp",
            Strategy::Dp => "dp",
        }
    }
}

/// A minimum non-empty offensive alliance together with its certificate.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub optimum: usize,
    pub witness: AllianceCertificate,
    pub strategy: Strategy,
    /// Candidate sets (or search nodes) examined.
    pub explored: u64,
}

impl SolveResult {
    /// Verifies `set` and wraps it; a rejected set is reported as
    /// [`Error::VerificationFailed`].
    pub fn verified(
        g: &SignedGraph,
        set: VertexSet,
        strategy: Strategy,
        explored: u64,
    ) -> Result<Self> {
        let cert = is_offensive_alliance(g, &set)?;
        if !cert.accepted() {
            return Err(Error::VerificationFailed(format!(
                "{} produced {:?}, rejected at {:?}",
                strategy.name(),
                set,
                cert.violations.iter().map(|v| v.vertex).collect::<Vec<_>>()
            )));
        }
        Ok(SolveResult {
            optimum: set.len(),
            witness: cert,
            strategy,
            explored,
        })
    }

    pub fn set(&self) -> &VertexSet {
        &self.witness.alliance
    }
}

/// Answer to the decision/optimisation problem under an optional budget.
#[derive(Debug, Clone)]
pub enum Outcome {
    Found(SolveResult),
    /// Every non-empty offensive alliance has more than `budget` vertices.
    NoneWithinBudget { budget: usize, explored: u64 },
}

impl Outcome {
    pub fn found(self) -> Option<SolveResult> {
        match self {
            Outcome::Found(r) => Some(r),
            Outcome::NoneWithinBudget { .. } => None,
        }
    }

    pub fn as_found(&self) -> Option<&SolveResult> {
        match self {
            Outcome::Found(r) => Some(r),
            Outcome::NoneWithinBudget { .. } => None,
        }
    }

    pub fn optimum(&self) -> Option<usize> {
        self.as_found().map(|r| r.optimum)
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn explored(&self) -> u64 {
        match self {
            Outcome::Found(r) => r.explored,
            Outcome::NoneWithinBudget { explored, .. } => *explored,
        }
    }

    pub(crate) fn apply_budget(self, budget: Option<usize>) -> Self {
        match (self, budget) {
            (Outcome::Found(r), Some(b)) if r.optimum > b => Outcome::NoneWithinBudget {
                budget: b,
                explored: r.explored,
            },
            (o, _) => o,
        }
    }
}

/// Smallest component (ties to the lexicographically smaller vertex list):
/// the trivial alliance that always exists.
pub(crate) fn smallest_component(g: &SignedGraph) -> Option<VertexSet> {
    g.components()
        .into_iter()
        .map(|c| VertexSet::from_iter(g.n(), c))
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
}

/// Keeps the better of two candidates: smaller size first, then the
/// lexicographically smaller vertex list.
pub(crate) fn better(a: Option<VertexSet>, b: VertexSet) -> VertexSet {
    match a {
        Some(a) if (a.len(), &a) <= (b.len(), &b) => a,
        _ => b,
    }
}
