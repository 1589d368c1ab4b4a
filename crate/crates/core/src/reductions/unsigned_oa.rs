//! Unsigned offensive alliance → signed offensive alliance, budget `3k`.
//!
//! Every source vertex `v` keeps its edges (now negative) and receives
//! `d'(v) - 1 = ceil((deg v + 1)/2) - 1` positive "handles" `v'_i`, each tied
//! to a large all-positive block `M_v` that no small alliance can enter, and
//! attacked through two private helpers `v_1, v_2`.

use serde::Serialize;

use super::{Builder, ReductionInstance, ReductionKind};
use crate::error::{Error, Result};
use crate::graph::UnsignedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UoaVariant {
    /// Helpers `v_1, v_2` only for vertices that have handles. Without
    /// handles the helpers would be isolated vertices, each an alliance of
    /// size one on its own.
    #[default]
    HandledHelpers,
    /// Helpers for every vertex, including those that end up isolated.
    AllHelpers,
}

pub fn reduce_unsigned_oa(g: &UnsignedGraph, k: usize, variant: UoaVariant) -> Result<ReductionInstance> {
    if k == 0 {
        return Err(Error::BadParameter("k must be at least 1".into()));
    }
    let n = g.n();
    let block = 3 * k + 1;
    let mut b = Builder::new();
    let source: Vec<usize> = (0..n)
        .map(|v| b.vertex(g.label(v).to_string(), None))
        .collect::<Result<_>>()?;
    let mut companions = vec![Vec::new(); n];
    for v in 0..n {
        let name = g.label(v);
        let handles = (g.degree(v) + 1).div_ceil(2) - 1;
        if handles == 0 && variant == UoaVariant::HandledHelpers {
            continue;
        }
        let v1 = b.vertex(format!("{name}@1"), Some("helper"))?;
        let v2 = b.vertex(format!("{name}@2"), Some("helper"))?;
        companions[v] = vec![v1, v2];
        for i in 1..=handles {
            let h = b.vertex(format!("{name}@h:{i}"), Some("handle"))?;
            let m: Vec<usize> = (1..=block)
                .map(|j| b.vertex(format!("{name}@M:{i}:{j}"), Some("block")))
                .collect::<Result<_>>()?;
            b.pos(source[v], h);
            b.pos(h, m[0]);
            for &l in &m[2..] {
                b.pos(m[0], l);
                b.pos(m[1], l);
            }
            b.neg(v1, h);
            b.neg(v2, h);
        }
    }
    for (u, v) in g.edges() {
        b.neg(source[u], source[v]);
    }
    b.finish(
        3 * k,
        ReductionKind::UnsignedOa { k, variant },
        source,
        companions,
        Vec::new(),
    )
}
