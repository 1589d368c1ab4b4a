//! Tables `c[t, A]` and `c[t, ∅]`.
//!
//! `c[t, A]` (for non-empty `A ⊆ X_t`) is the smallest `S_t` inside the
//! subtree of `t` with `S_t ∩ X_t = A` that successfully attacks every
//! boundary vertex except those shared with the parent bag; each child
//! subtree is either untouched or meets its bag. `c[t, ∅]` is the smallest
//! full alliance living strictly below the parent bag.
//!
//! Because a type 1 vertex is shared with exactly one child, the attack
//! checks split by child and the minimum over child tuples decomposes into
//! one independent minimum per child.

use serde::Serialize;

use super::{validate_domino, DominoDecomposition};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::solver::{SolveResult, Strategy};
use crate::vset::VertexSet;

/// Where the value `c[t, ∅]` came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EmptySource {
    Infeasible,
    /// `c[t_j, ∅]` of the child at this position.
    Child(usize),
    /// A selection of `X_t` avoiding the parent bag.
    Own(u32),
}

#[derive(Debug, Clone, Serialize)]
pub struct NodeTable {
    pub bag: Vec<usize>,
    /// `c[t, A]` indexed by the bitmask of `A` over `bag` (index 0 unused).
    pub cost: Vec<Option<usize>>,
    pub empty: Option<usize>,
    pub empty_source: EmptySource,
    /// Per mask, the chosen mask of every child (same order as children).
    choice: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DpTable {
    pub nodes: Vec<NodeTable>,
    pub width: usize,
}

impl DpTable {
    /// `S_t` realising `c[t, A]`.
    pub fn realise(&self, d: &DominoDecomposition, t: usize, mask: u32, n: usize) -> VertexSet {
        let mut s = VertexSet::new(n);
        self.collect(d, t, mask, &mut s);
        s
    }

    fn collect(&self, d: &DominoDecomposition, t: usize, mask: u32, s: &mut VertexSet) {
        let node = &self.nodes[t];
        for (i, &v) in node.bag.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.insert(v);
            }
        }
        for (j, &c) in d.children(t).iter().enumerate() {
            let cm = node.choice[mask as usize][j];
            if cm != 0 {
                self.collect(d, c, cm, s);
            }
        }
    }

    /// The alliance realising `c[t, ∅]`.
    pub fn realise_empty(&self, d: &DominoDecomposition, t: usize, n: usize) -> Option<VertexSet> {
        match self.nodes[t].empty_source {
            EmptySource::Infeasible => None,
            EmptySource::Child(j) => self.realise_empty(d, d.children(t)[j], n),
            EmptySource::Own(mask) => Some(self.realise(d, t, mask, n)),
        }
    }
}

/// Whether `u ∉ S` is either untouched by `S` or successfully attacked.
fn fine(g: &SignedGraph, u: usize, member: &[bool]) -> bool {
    if member[u] {
        return true;
    }
    let pos_in = g.pos_neighbors(u).iter().filter(|&&w| member[w]).count();
    let neg_in = g.neg_neighbors(u).iter().filter(|&&w| member[w]).count();
    if pos_in + neg_in == 0 {
        return true;
    }
    let pos_out = g.deg_pos(u) - pos_in;
    neg_in >= pos_in && neg_in > pos_out
}

fn mark(member: &mut [bool], bag: &[usize], mask: u32, on: bool) {
    for (i, &v) in bag.iter().enumerate() {
        if mask >> i & 1 == 1 {
            member[v] = on;
        }
    }
}

fn contains(bag: &[usize], v: usize) -> bool {
    bag.binary_search(&v).is_ok()
}

pub fn dp_tables(g: &SignedGraph, d: &DominoDecomposition) -> Result<DpTable> {
    let width = validate_domino(g, d)?;
    if width >= 31 {
        return Err(Error::BadParameter(format!("width {width} is too large for the table")));
    }
    let n = g.n();
    let mut nodes: Vec<Option<NodeTable>> = vec![None; d.num_nodes()];
    let mut member = vec![false; n];
    for t in d.postorder() {
        let bag = d.bag(t).to_vec();
        let b = bag.len();
        let parent_bag: &[usize] = d.parent(t).map_or(&[], |p| d.bag(p));
        let children = d.children(t);
        let shared_with_child = |c: usize| -> Vec<usize> {
            bag.iter().copied().filter(|&v| contains(d.bag(c), v)).collect()
        };
        let type1: Vec<Vec<usize>> = children.iter().map(|&c| shared_with_child(c)).collect();
        let type2: Vec<usize> = bag.iter().copied().filter(|&v| contains(parent_bag, v)).collect();
        let type3: Vec<usize> = bag
            .iter()
            .copied()
            .filter(|&v| !contains(parent_bag, v) && !type1.iter().any(|s| s.contains(&v)))
            .collect();
        debug_assert!(type3.iter().all(|&v| g
            .pos_neighbors(v)
            .iter()
            .chain(g.neg_neighbors(v))
            .all(|&u| contains(&bag, u))));
        // For each child: mask over its bag of the vertices shared with `t`,
        // and the corresponding mask over our bag.
        let links: Vec<(u32, u32)> = children
            .iter()
            .map(|&c| {
                let cb = d.bag(c);
                let mut child_mask = 0u32;
                let mut own_mask = 0u32;
                for (i, &v) in cb.iter().enumerate() {
                    if let Ok(p) = bag.binary_search(&v) {
                        child_mask |= 1 << i;
                        own_mask |= 1 << p;
                    }
                }
                (child_mask, own_mask)
            })
            .collect();

        let full = 1usize << b;
        let mut cost = vec![None; full];
        let mut choice = vec![vec![0u32; children.len()]; full];
        for mask in 1..full as u32 {
            mark(&mut member, &bag, mask, true);
            let mut ok = type3.iter().all(|&u| fine(g, u, &member));
            let mut total = mask.count_ones() as usize;
            for (j, &c) in children.iter().enumerate() {
                if !ok {
                    break;
                }
                let cb = d.bag(c);
                let child = nodes[c].as_ref().expect("children first");
                let (child_shared, own_shared) = links[j];
                let want = project(mask & own_shared, &bag, cb);
                let mut best: Option<(usize, u32)> = None;
                for cm in 0..(1u32 << cb.len()) {
                    if cm & child_shared != want {
                        continue;
                    }
                    let contribution = if cm == 0 {
                        0
                    } else {
                        match child.cost[cm as usize] {
                            Some(v) => v - (cm & child_shared).count_ones() as usize,
                            None => continue,
                        }
                    };
                    if best.is_some_and(|(v, _)| v <= contribution) {
                        continue;
                    }
                    mark(&mut member, cb, cm, true);
                    let attacked = type1[j].iter().all(|&u| fine(g, u, &member));
                    mark(&mut member, cb, cm, false);
                    // Shared vertices of the selection must stay marked.
                    mark(&mut member, &bag, mask, true);
                    if attacked {
                        best = Some((contribution, cm));
                    }
                }
                match best {
                    Some((v, cm)) => {
                        total += v;
                        choice[mask as usize][j] = cm;
                    }
                    None => ok = false,
                }
            }
            if ok {
                cost[mask as usize] = Some(total);
            }
            mark(&mut member, &bag, mask, false);
        }

        // c[t, ∅]: best among children, or an alliance whose topmost bag
        // is this one (it must avoid the parent bag and attack everything,
        // including the vertices shared with the parent).
        let mut empty: Option<usize> = None;
        let mut source = EmptySource::Infeasible;
        for (j, &c) in children.iter().enumerate() {
            if let Some(v) = nodes[c].as_ref().expect("children first").empty {
                if empty.is_none_or(|e| v < e) {
                    empty = Some(v);
                    source = EmptySource::Child(j);
                }
            }
        }
        let parent_mask: u32 = bag
            .iter()
            .enumerate()
            .filter(|(_, v)| type2.contains(v))
            .map(|(i, _)| 1u32 << i)
            .sum();
        for mask in 1..full as u32 {
            if mask & parent_mask != 0 {
                continue;
            }
            let Some(v) = cost[mask as usize] else { continue };
            if empty.is_some_and(|e| e <= v) {
                continue;
            }
            mark(&mut member, &bag, mask, true);
            let formative = type2.iter().all(|&u| fine(g, u, &member));
            mark(&mut member, &bag, mask, false);
            if formative {
                empty = Some(v);
                source = EmptySource::Own(mask);
            }
        }
        nodes[t] = Some(NodeTable {
            bag,
            cost,
            empty,
            empty_source: source,
            choice,
        });
    }
    Ok(DpTable {
        nodes: nodes.into_iter().map(|t| t.expect("every node visited")).collect(),
        width,
    })
}

/// Re-expresses a selection of shared vertices over `from` as a mask over
/// `to`.
fn project(mask: u32, from: &[usize], to: &[usize]) -> u32 {
    let mut out = 0;
    for (i, &v) in from.iter().enumerate() {
        if mask >> i & 1 == 1 {
            if let Ok(p) = to.binary_search(&v) {
                out |= 1 << p;
            }
        }
    }
    out
}

/// Minimum non-empty offensive alliance from the tables at the root.
pub fn dp_solve(g: &SignedGraph, d: &DominoDecomposition) -> Result<SolveResult> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let table = dp_tables(g, d)?;
    let root = d.root();
    let s = table
        .realise_empty(d, root, g.n())
        .ok_or_else(|| Error::InternalInconsistency("no alliance at the root".into()))?;
    let value = table.nodes[root].empty.expect("realised");
    if s.len() != value {
        return Err(Error::InternalInconsistency(format!(
            "table value {value} but reconstructed {} vertices",
            s.len()
        )));
    }
    let cells = table.nodes.iter().map(|t| t.cost.len() as u64).sum();
    SolveResult::verified(g, s, Strategy::Dp, cells)
}

/// `A_t` agrees with every child selection on shared vertices, and every
/// type 1 and type 3 vertex of `X_t` is successfully attacked (or
/// untouched) by the union.
pub fn compatible(
    g: &SignedGraph,
    d: &DominoDecomposition,
    t: usize,
    a: &VertexSet,
    child_sel: &[VertexSet],
) -> bool {
    agree(d, t, a, child_sel)
        && d.bag(t).iter().all(|&u| {
            let ty = d.vertex_type(t, u).expect("bag vertex");
            ty == super::VertexType::Type2 || attacked_by_union(g, u, a, child_sel)
        })
}

/// Like [`compatible`] with no exemption for vertices shared with the
/// parent; `B_t` must avoid the parent bag and be non-empty.
pub fn formative(
    g: &SignedGraph,
    d: &DominoDecomposition,
    t: usize,
    b: &VertexSet,
    child_sel: &[VertexSet],
) -> bool {
    let avoids_parent = d
        .parent(t)
        .is_none_or(|p| d.bag(p).iter().all(|&v| !b.contains(v)));
    !b.is_empty()
        && avoids_parent
        && agree(d, t, b, child_sel)
        && d.bag(t).iter().all(|&u| attacked_by_union(g, u, b, child_sel))
}

fn agree(d: &DominoDecomposition, t: usize, a: &VertexSet, child_sel: &[VertexSet]) -> bool {
    let bag = d.bag(t);
    a.iter().all(|v| contains(bag, v))
        && d.children(t).len() == child_sel.len()
        && d.children(t).iter().zip(child_sel).all(|(&c, sel)| {
            let cb = d.bag(c);
            sel.iter().all(|v| contains(cb, v))
                && cb
                    .iter()
                    .filter(|&&v| contains(bag, v))
                    .all(|&v| a.contains(v) == sel.contains(v))
        })
}

fn attacked_by_union(g: &SignedGraph, u: usize, a: &VertexSet, child_sel: &[VertexSet]) -> bool {
    let mut s = a.clone();
    for c in child_sel {
        s.union_with(c);
    }
    let member: Vec<bool> = (0..g.n()).map(|v| s.contains(v)).collect();
    fine(g, u, &member)
}

/// The defining property of `c[t, A]`: `s` lies in the subtree of `t` and
/// attacks every boundary vertex in that subtree except the vertices shared
/// with the parent bag.
pub fn is_partial_alliance(g: &SignedGraph, d: &DominoDecomposition, t: usize, s: &VertexSet) -> bool {
    let inside = d.subtree_vertices(t);
    let parent_bag: &[usize] = d.parent(t).map_or(&[], |p| d.bag(p));
    let member: Vec<bool> = (0..g.n()).map(|v| s.contains(v)).collect();
    s.iter().all(|v| inside.binary_search(&v).is_ok())
        && inside
            .iter()
            .filter(|&&u| !contains(parent_bag, u))
            .all(|&u| fine(g, u, &member))
}
