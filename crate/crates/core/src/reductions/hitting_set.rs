//! Hitting set → signed offensive alliance, budget `k + 3`.
//!
//! A hub `w` is the enemy of every element and of one vertex `v_e` per
//! hyperedge; `v_e` is the enemy of the elements of `e`. Each `v_e` and
//! each element helper `v_1` hangs off an all-positive block of `5k`
//! vertices, and `p, q` attack every `v_1`. A hitting set `S` maps to
//! `S ∪ {w, p, q}`.

use super::{Builder, Hypergraph, ReductionInstance, ReductionKind};
use crate::error::{Error, Result};

pub fn reduce_hitting_set(h: &Hypergraph, k: usize) -> Result<ReductionInstance> {
    if k == 0 {
        return Err(Error::BadParameter("k must be at least 1".into()));
    }
    let n = h.n();
    let block = 5 * k;
    let mut b = Builder::new();
    let source: Vec<usize> = (0..n)
        .map(|v| b.vertex(h.labels()[v].clone(), None))
        .collect::<Result<_>>()?;
    let w = b.vertex("w".into(), Some("w"))?;
    let p = b.vertex("p".into(), Some("p"))?;
    let q = b.vertex("q".into(), Some("q"))?;
    for v in 0..n {
        let name = &h.labels()[v];
        let v1 = b.vertex(format!("{name}@1"), Some("helper"))?;
        let m = block_vertices(&mut b, name, block)?;
        b.pos(w, v1);
        b.pos(v1, m[0]);
        b.neg(w, source[v]);
        b.neg(p, v1);
        b.neg(q, v1);
    }
    for (i, e) in h.edges().iter().enumerate() {
        let name = format!("e{}", i + 1);
        let ve = b.vertex(format!("{name}@ve"), Some("edge"))?;
        let m = block_vertices(&mut b, &name, block)?;
        b.pos(ve, m[0]);
        b.neg(w, ve);
        for &v in e {
            b.neg(source[v], ve);
        }
    }
    b.finish(
        k + 3,
        ReductionKind::HittingSet { k },
        source,
        vec![Vec::new(); n],
        vec![w, p, q],
    )
}

/// `x^1..x^len`, with `x^1` and `x^2` each joined to all of `x^3..x^len`.
fn block_vertices(b: &mut Builder, name: &str, len: usize) -> Result<Vec<usize>> {
    let m: Vec<usize> = (1..=len)
        .map(|j| b.vertex(format!("{name}@M:{j}"), Some("block")))
        .collect::<Result<_>>()?;
    for &l in &m[2..] {
        b.pos(m[0], l);
        b.pos(m[1], l);
    }
    Ok(m)
}
