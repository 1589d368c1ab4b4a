//! Direct recognition of optima of size one and two.

use serde::Serialize;

use crate::graph::SignedGraph;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SmallAlliances {
    /// A vertex whose neighbours all have positive degree zero.
    pub size1: Option<usize>,
    /// Only searched when `size1` is absent.
    pub size2: Option<(usize, usize)>,
}

impl SmallAlliances {
    pub fn optimum(&self) -> Option<usize> {
        if self.size1.is_some() {
            Some(1)
        } else {
            self.size2.map(|_| 2)
        }
    }
}

/// Tests the degree characterisation of `a_so(G) = 1` and `a_so(G) = 2`.
///
/// `{v}` is an alliance iff every neighbour of `v` has no positive edge.
/// `{u, v}` is an alliance iff every vertex adjacent to exactly one of them
/// has no positive edge and every common neighbour has at most one.
pub fn small_alliance_check(g: &SignedGraph) -> SmallAlliances {
    let n = g.n();
    let size1 = (0..n).find(|&v| {
        g.pos_neighbors(v)
            .iter()
            .chain(g.neg_neighbors(v))
            .all(|&u| g.deg_pos(u) == 0)
    });
    if size1.is_some() {
        return SmallAlliances { size1, size2: None };
    }
    let neighbors: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    let size2 = (0..n)
        .flat_map(|v| (v + 1..n).map(move |u| (v, u)))
        .find(|&(v, u)| pair_ok(g, &neighbors[v], &neighbors[u], v, u));
    SmallAlliances { size1: None, size2 }
}

fn pair_ok(g: &SignedGraph, nv: &[usize], nu: &[usize], v: usize, u: usize) -> bool {
    // Merge the two sorted neighbourhoods, skipping the pair itself.
    let (mut i, mut j) = (0, 0);
    loop {
        let (w, common) = match (nv.get(i), nu.get(j)) {
            (None, None) => return true,
            (Some(&a), None) => {
                i += 1;
                (a, false)
            }
            (None, Some(&b)) => {
                j += 1;
                (b, false)
            }
            (Some(&a), Some(&b)) if a == b => {
                i += 1;
                j += 1;
                (a, true)
            }
            (Some(&a), Some(&b)) if a < b => {
                i += 1;
                (a, false)
            }
            (Some(_), Some(&b)) => {
                j += 1;
                (b, false)
            }
        };
        if w == v || w == u {
            continue;
        }
        let limit = if common { 1 } else { 0 };
        if g.deg_pos(w) > limit {
            return false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alliance::accepts;
    use crate::gen::gen_random_signed;
    use crate::vset::VertexSet;

    #[test]
    fn negative_triangle_has_size_one() {
        let g = SignedGraph::from_lists(3, &[], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(small_alliance_check(&g).size1, Some(0));
    }

    #[test]
    fn positive_path_has_neither() {
        let g = SignedGraph::from_lists(3, &[(0, 1), (1, 2)], &[]).unwrap();
        assert_eq!(small_alliance_check(&g), SmallAlliances::default());
    }

    #[test]
    fn positive_edge_with_negative_pendants() {
        // v=0 – u=1 positive; pendants 1–2 and 0–3 negative.
        let g = SignedGraph::from_lists(4, &[(0, 1)], &[(1, 2), (0, 3)]).unwrap();
        let r = small_alliance_check(&g);
        // Brute force over sizes one and two.
        let singles: Vec<usize> = (0..4)
            .filter(|&v| accepts(&g, &VertexSet::from_iter(4, [v])))
            .collect();
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
            .filter(|&(a, b)| accepts(&g, &VertexSet::from_iter(4, [a, b])))
            .collect();
        // Every singleton has a neighbour with a positive edge.
        assert!(singles.is_empty());
        assert_eq!(r.size1, None);
        assert_eq!(pairs.first().copied(), Some((0, 1)));
        assert_eq!(r.size2, Some((0, 1)));
    }

    #[test]
    fn agrees_with_enumeration_on_random_graphs() {
        for seed in 0..200 {
            let n = 2 + (seed as usize % 9);
            let g = gen_random_signed(n, 0.25, 0.4, seed).unwrap();
            let r = small_alliance_check(&g);
            let single = (0..n).find(|&v| accepts(&g, &VertexSet::from_iter(n, [v])));
            assert_eq!(r.size1, single, "seed {seed}");
            if single.is_none() {
                let pair = (0..n)
                    .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                    .find(|&(a, b)| accepts(&g, &VertexSet::from_iter(n, [a, b])));
                assert_eq!(r.size2, pair, "seed {seed}");
            }
        }
    }
}
