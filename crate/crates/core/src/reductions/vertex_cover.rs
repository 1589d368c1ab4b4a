//! Vertex cover on cubic graphs → signed offensive alliance.
//!
//! Source edges become negative. Each source vertex `v` gets two positive
//! neighbours `v_1, v_2` that lead into an all-positive chain longer than
//! the budget, and two private attackers `v^1, v^2` joined negatively to
//! both. A cover `S` maps to `S ∪ {v^1, v^2 | v ∈ S}` of size `3|S|`: every
//! uncovered vertex sees its three source neighbours in the set against its
//! two positive helpers.

use serde::Serialize;

use super::{Builder, ReductionInstance, ReductionKind};
use crate::error::{Error, Result};
use crate::graph::UnsignedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VcVariant {
    /// One chain `v'_1..v'_{3k+1}` per source vertex.
    #[default]
    PerVertex,
    /// A single chain `c'_1..c'_{3k+1}` shared by all vertices; the output
    /// has exactly `5n + 3k + 1` vertices.
    Shared,
}

/// How a cover is mapped to an alliance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VcWitness {
    /// `S ∪ {v^1, v^2 | v ∈ S}` with budget `3k`.
    #[default]
    Cover,
    /// `V ∪ {v^1, v^2 | v ∈ S}` with budget `n + 2k`. Kept for comparison:
    /// for `v ∉ S` the helper `v_1` then has a friend in the set and no
    /// enemy, so this set is never an alliance when `S ≠ V`.
    AllVertices,
}

pub fn reduce_vertex_cover(
    g: &UnsignedGraph,
    k: usize,
    variant: VcVariant,
    witness: VcWitness,
) -> Result<ReductionInstance> {
    let max = g.max_degree();
    if max > 3 {
        return Err(Error::DegreeTooHigh(max));
    }
    let n = g.n();
    let chain_len = 3 * k + 1;
    let mut b = Builder::new();
    let source: Vec<usize> = (0..n)
        .map(|v| b.vertex(g.label(v).to_string(), None))
        .collect::<Result<_>>()?;
    let shared = match variant {
        VcVariant::Shared => Some(chain(&mut b, "@c", chain_len)?),
        VcVariant::PerVertex => None,
    };
    let mut companions = vec![Vec::new(); n];
    for v in 0..n {
        let name = g.label(v);
        let a1 = b.vertex(format!("{name}@^1"), Some("attacker"))?;
        let a2 = b.vertex(format!("{name}@^2"), Some("attacker"))?;
        let h1 = b.vertex(format!("{name}@1"), Some("helper"))?;
        let h2 = b.vertex(format!("{name}@2"), Some("helper"))?;
        let own;
        let c = match &shared {
            Some(c) => c,
            None => {
                own = chain(&mut b, &format!("{name}@c"), chain_len)?;
                &own
            }
        };
        b.pos(source[v], h1);
        b.pos(source[v], h2);
        b.pos(h1, c[0]);
        b.pos(h2, c[chain_len - 1]);
        for h in [h1, h2] {
            b.neg(h, a1);
            b.neg(h, a2);
        }
        companions[v] = vec![a1, a2];
    }
    for (u, v) in g.edges() {
        b.neg(source[u], source[v]);
    }
    let (budget, fixed) = match witness {
        VcWitness::Cover => (3 * k, Vec::new()),
        VcWitness::AllVertices => (n + 2 * k, source.clone()),
    };
    b.finish(
        budget,
        ReductionKind::VertexCover { k, variant, witness },
        source,
        companions,
        fixed,
    )
}

fn chain(b: &mut Builder, prefix: &str, len: usize) -> Result<Vec<usize>> {
    let c: Vec<usize> = (1..=len)
        .map(|i| b.vertex(format!("{prefix}:{i}"), Some("chain")))
        .collect::<Result<_>>()?;
    for w in c.windows(2) {
        b.pos(w[0], w[1]);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alliance::accepts;

    fn k4() -> UnsignedGraph {
        UnsignedGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn cover_witness_on_k4() {
        for variant in [VcVariant::PerVertex, VcVariant::Shared] {
            let r = reduce_vertex_cover(&k4(), 3, variant, VcWitness::Cover).unwrap();
            let w = r.map_witness(&[0, 1, 2]).unwrap();
            assert_eq!(w.len(), 9);
            assert!(accepts(&r.graph, &w));
        }
    }

    #[test]
    fn all_vertices_witness_is_rejected() {
        let r = reduce_vertex_cover(&k4(), 3, VcVariant::PerVertex, VcWitness::AllVertices).unwrap();
        assert_eq!(r.budget, 10);
        let cert = r.certify(&[0, 1, 2]).unwrap();
        assert!(!cert.accepted());
        // The helper of the uncovered vertex fails.
        let bad = r.graph.index_of("4@1").unwrap();
        assert!(cert.violations.iter().any(|v| v.vertex == bad));
    }

    #[test]
    fn shared_size_and_degree_limit() {
        let r = reduce_vertex_cover(&k4(), 2, VcVariant::Shared, VcWitness::Cover).unwrap();
        assert_eq!(r.graph.n(), 5 * 4 + 3 * 2 + 1);
        let star = UnsignedGraph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(matches!(
            reduce_vertex_cover(&star, 1, VcVariant::PerVertex, VcWitness::Cover),
            Err(Error::DegreeTooHigh(4))
        ));
    }

    #[test]
    fn empty_source_with_zero_budget() {
        let g = UnsignedGraph::new(2, &[]).unwrap();
        let r = reduce_vertex_cover(&g, 0, VcVariant::PerVertex, VcWitness::AllVertices).unwrap();
        // The empty cover maps to the source vertices themselves.
        assert_eq!(r.map_witness(&[]).unwrap().len(), 2);
        let r = reduce_vertex_cover(&g, 0, VcVariant::PerVertex, VcWitness::Cover).unwrap();
        assert!(matches!(r.map_witness(&[]), Err(Error::InvalidSourceSolution(_))));
    }
}
