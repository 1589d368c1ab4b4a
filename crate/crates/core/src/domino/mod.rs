//! Dynamic programming over domino tree decompositions.
//!
//! In a domino decomposition every vertex lies in at most two bags, and
//! those two bags are adjacent in the tree. A vertex `v` of bag `X_t` is
//! then of exactly one type: shared with a child (type 1), shared with the
//! parent (type 2), or private to `X_t` (type 3). Every neighbour of a type
//! 1 or type 3 vertex lies in `X_t` or the one child bag it shares, so its
//! attack status is decided when `t` is processed.

mod builders;
mod dp;

use serde::Serialize;

pub use builders::{
    caterpillar_decomposition, column_decomposition, cycle_decomposition, seven_signed_decomposition,
    path_decomposition, random_domino, tree_decomposition,
};
pub use dp::{compatible, dp_solve, dp_tables, formative, is_partial_alliance, DpTable, NodeTable};

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// A rooted tree of bags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominoDecomposition {
    bags: Vec<Vec<usize>>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    root: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VertexType {
    /// Also in a child bag.
    Type1,
    /// Also in the parent bag.
    Type2,
    /// In no other bag.
    Type3,
}

impl DominoDecomposition {
    /// Bags are indexed `0..bags.len()`; `edges` must form a tree on them.
    pub fn new(bags: Vec<Vec<usize>>, edges: &[(usize, usize)], root: usize) -> Result<Self> {
        let m = bags.len();
        if m == 0 {
            return Err(Error::MalformedTree("no bags".into()));
        }
        if root >= m {
            return Err(Error::MalformedTree(format!("root {root} is not a bag")));
        }
        if edges.len() != m - 1 {
            return Err(Error::MalformedTree(format!(
                "{} tree edges for {m} bags",
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); m];
        for &(a, b) in edges {
            if a >= m || b >= m || a == b {
                return Err(Error::MalformedTree(format!("bad tree edge {a} {b}")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![None; m];
        let mut children = vec![Vec::new(); m];
        let mut seen = vec![false; m];
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(t) = stack.pop() {
            adj[t].sort_unstable();
            for &c in &adj[t] {
                if !seen[c] {
                    seen[c] = true;
                    parent[c] = Some(t);
                    children[t].push(c);
                    stack.push(c);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::MalformedTree("tree is not connected".into()));
        }
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        Ok(DominoDecomposition {
            bags,
            parent,
            children,
            root,
            edges: edges.to_vec(),
        })
    }

    pub fn num_nodes(&self) -> usize {
        self.bags.len()
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn bag(&self, t: usize) -> &[usize] {
        &self.bags[t]
    }

    pub fn parent(&self, t: usize) -> Option<usize> {
        self.parent[t]
    }

    pub fn children(&self, t: usize) -> &[usize] {
        &self.children[t]
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Tree edges as given.
    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `max |X_t| - 1` (0 for all-empty bags).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// Nodes with every child before its parent.
    pub fn postorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.num_nodes());
        let mut stack = vec![(self.root, false)];
        while let Some((t, expanded)) = stack.pop() {
            if expanded {
                order.push(t);
            } else {
                stack.push((t, true));
                for &c in self.children[t].iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        order
    }

    /// All vertices of bags in the subtree rooted at `t`.
    pub fn subtree_vertices(&self, t: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![t];
        while let Some(s) = stack.pop() {
            out.extend_from_slice(&self.bags[s]);
            stack.extend_from_slice(&self.children[s]);
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn vertex_type(&self, t: usize, v: usize) -> Result<VertexType> {
        if self.bags[t].binary_search(&v).is_err() {
            return Err(Error::NotInBag { vertex: v, node: t });
        }
        if self.children[t].iter().any(|&c| self.bags[c].binary_search(&v).is_ok()) {
            Ok(VertexType::Type1)
        } else if self.parent[t].is_some_and(|p| self.bags[p].binary_search(&v).is_ok()) {
            Ok(VertexType::Type2)
        } else {
            Ok(VertexType::Type3)
        }
    }
}

/// Checks the tree-decomposition and domino properties against `g` and
/// returns the width.
pub fn validate_domino(g: &SignedGraph, d: &DominoDecomposition) -> Result<usize> {
    let n = g.n();
    let mut homes: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (t, bag) in d.bags.iter().enumerate() {
        for &v in bag {
            homes
                .get_mut(v)
                .ok_or(Error::VertexOutOfRange { vertex: v, n })?
                .push(t);
        }
    }
    for (v, h) in homes.iter().enumerate() {
        match h.len() {
            0 => return Err(Error::NotCover(v)),
            1 => {}
            2 => {
                let (a, b) = (h[0], h[1]);
                if d.parent[a] != Some(b) && d.parent[b] != Some(a) {
                    return Err(Error::NotConnectedTrace(v));
                }
            }
            _ => return Err(Error::NotDomino(v)),
        }
    }
    for (u, v) in g.pos_edges().into_iter().chain(g.neg_edges()) {
        if !homes[u].iter().any(|t| homes[v].contains(t)) {
            return Err(Error::EdgeUncovered(u, v));
        }
    }
    Ok(d.width())
}
