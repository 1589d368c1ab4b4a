//! Minimum offensive alliances in signed graphs.
//!
//! A set `S` of vertices is an offensive alliance when every vertex on its
//! boundary is *successfully attacked*: it has at least as many negative as
//! positive neighbours inside `S`, and strictly more negative neighbours in
//! `S` than positive neighbours outside `S`. The crate provides the
//! verification predicate, an exhaustive solver used as the oracle for every
//! other route, closed forms for (anti-)balanced complete graphs, an integer
//! program over the signed neighbourhood-diversity partition, a dynamic
//! program over domino tree decompositions, and constructions of hardness
//! reductions with planted witnesses.

pub mod alliance;
pub mod complete;
pub mod domino;
pub mod error;
pub mod samples;
pub mod gen;
pub mod graph;
pub mod io;
pub mod reductions;
pub mod snd;
pub mod solver;
pub mod vset;

pub use alliance::{
    attackable, boundary, degree_profile, existence_precondition, is_offensive_alliance,
    is_offensive_alliance_unsigned, size_lower_bound, AllianceCertificate, Condition, Verdict,
    Violation,
};
pub use error::{Error, Result};
pub use graph::{DegreeProfile, Sign, SignedGraph, UnsignedGraph};
pub use solver::{SolveResult, Strategy};
pub use vset::VertexSet;
