//! Signed and unsigned graph representations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vset::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Pos,
    #[serde(rename = "-")]
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

/// A signed graph `(V, E+, E-)` on dense vertex indices `0..n`.
///
/// Positive and negative adjacency lists are sorted and disjoint; the
/// underlying unsigned graph is `(V, E+ ∪ E-)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    pos: Vec<Vec<usize>>,
    neg: Vec<Vec<usize>>,
    labels: Vec<String>,
}

/// Degree counts of a vertex relative to a set `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub pos_in: usize,
    pub neg_in: usize,
    pub pos_out: usize,
    pub neg_out: usize,
}

impl DegreeProfile {
    /// Condition 1: at least as many hostile as friendly neighbours in `S`.
    pub fn hostility(&self) -> bool {
        self.neg_in >= self.pos_in
    }

    /// Condition 2: hostile neighbours in `S` outnumber friends outside `S`.
    pub fn superiority(&self) -> bool {
        self.neg_in > self.pos_out
    }

    pub fn attacked(&self) -> bool {
        self.hostility() && self.superiority()
    }
}

impl SignedGraph {
    /// Builds a graph from signed edges. Repeated identical edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize, Sign)]) -> Result<Self> {
        let mut pos = vec![Vec::new(); n];
        let mut neg = vec![Vec::new(); n];
        for &(u, v, s) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (same, other) = match s {
                Sign::Pos => (&mut pos, &neg),
                Sign::Neg => (&mut neg, &pos),
            };
            if other[u].contains(&v) {
                return Err(Error::ConflictingSign(u.min(v), u.max(v)));
            }
            if !same[u].contains(&v) {
                same[u].push(v);
                same[v].push(u);
            }
        }
        for list in pos.iter_mut().chain(neg.iter_mut()) {
            list.sort_unstable();
        }
        Ok(SignedGraph {
            n,
            pos,
            neg,
            labels: (1..=n).map(|i| i.to_string()).collect(),
        })
    }

    /// Builds a graph from positive and negative edge lists.
    pub fn from_lists(n: usize, pos: &[(usize, usize)], neg: &[(usize, usize)]) -> Result<Self> {
        let edges: Vec<_> = pos
            .iter()
            .map(|&(u, v)| (u, v, Sign::Pos))
            .chain(neg.iter().map(|&(u, v)| (u, v, Sign::Neg)))
            .collect();
        Self::new(n, &edges)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = labels;
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// True when labels are the one-based decimal indices `1..=n`.
    pub fn has_default_labels(&self) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(i, l)| *l == (i + 1).to_string())
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn pos_neighbors(&self, v: usize) -> &[usize] {
        &self.pos[v]
    }

    #[inline]
    pub fn neg_neighbors(&self, v: usize) -> &[usize] {
        &self.neg[v]
    }

    /// Open neighbourhood `N(v)` in ascending order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut all: Vec<usize> = self.pos[v].iter().chain(&self.neg[v]).copied().collect();
        all.sort_unstable();
        all
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_iter(self.n, self.pos[v].iter().chain(&self.neg[v]).copied())
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        if self.pos[u].binary_search(&v).is_ok() {
            Some(Sign::Pos)
        } else if self.neg[u].binary_search(&v).is_ok() {
            Some(Sign::Neg)
        } else {
            None
        }
    }

    #[inline]
    pub fn deg_pos(&self, v: usize) -> usize {
        self.pos[v].len()
    }

    #[inline]
    pub fn deg_neg(&self, v: usize) -> usize {
        self.neg[v].len()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.pos[v].len() + self.neg[v].len()
    }

    pub fn pos_edges(&self) -> Vec<(usize, usize)> {
        edges_of(&self.pos)
    }

    pub fn neg_edges(&self) -> Vec<(usize, usize)> {
        edges_of(&self.neg)
    }

    pub fn num_pos_edges(&self) -> usize {
        self.pos.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn num_neg_edges(&self) -> usize {
        self.neg.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// `(δ+, Δ+)` over the given vertices.
    pub fn pos_degree_range<I: IntoIterator<Item = usize>>(&self, vs: I) -> (usize, usize) {
        range_of(vs.into_iter().map(|v| self.deg_pos(v)))
    }

    /// `(δ-, Δ-)` over the given vertices.
    pub fn neg_degree_range<I: IntoIterator<Item = usize>>(&self, vs: I) -> (usize, usize) {
        range_of(vs.into_iter().map(|v| self.deg_neg(v)))
    }

    pub fn degree_profile(&self, v: usize, s: &VertexSet) -> DegreeProfile {
        let pos_in = self.pos[v].iter().filter(|&&u| s.contains(u)).count();
        let neg_in = self.neg[v].iter().filter(|&&u| s.contains(u)).count();
        DegreeProfile {
            pos_in,
            neg_in,
            pos_out: self.pos[v].len() - pos_in,
            neg_out: self.neg[v].len() - neg_in,
        }
    }

    /// Connected components of the underlying graph, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &u in self.pos[v].iter().chain(&self.neg[v]) {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        members.push(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Whether the vertices of `s` induce a connected subgraph of the
    /// underlying graph. The empty set counts as connected.
    pub fn is_connected_subset(&self, s: &VertexSet) -> bool {
        let Some(start) = s.first() else {
            return true;
        };
        let mut seen = VertexSet::new(self.n);
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &u in self.pos[v].iter().chain(&self.neg[v]) {
                if s.contains(u) && seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen.len() == s.len()
    }

    /// Subgraph induced by `vs` (re-indexed in the given order, labels kept).
    pub fn induced(&self, vs: &[usize]) -> SignedGraph {
        let mut idx = vec![usize::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            idx[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vs.iter().enumerate() {
            for &u in &self.pos[v] {
                if idx[u] != usize::MAX && i < idx[u] {
                    edges.push((i, idx[u], Sign::Pos));
                }
            }
            for &u in &self.neg[v] {
                if idx[u] != usize::MAX && i < idx[u] {
                    edges.push((i, idx[u], Sign::Neg));
                }
            }
        }
        SignedGraph::new(vs.len(), &edges)
            .expect("induced subgraph of a valid graph")
            .with_labels(vs.iter().map(|&v| self.labels[v].clone()).collect())
    }

    pub fn format_set(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|v| self.labels[v].clone()).collect()
    }
}

fn edges_of(adj: &[Vec<usize>]) -> Vec<(usize, usize)> {
    adj.iter()
        .enumerate()
        .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
        .collect()
}

fn range_of<I: Iterator<Item = usize>>(it: I) -> (usize, usize) {
    it.fold(None, |acc: Option<(usize, usize)>, d| match acc {
        None => Some((d, d)),
        Some((lo, hi)) => Some((lo.min(d), hi.max(d))),
    })
    .unwrap_or((0, 0))
}

/// A simple undirected graph, used as the source of the unsigned-alliance
/// and vertex-cover reductions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnsignedGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl UnsignedGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !adj[u].contains(&v) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        adj.iter_mut().for_each(|l| l.sort_unstable());
        Ok(UnsignedGraph {
            n,
            adj,
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

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        edges_of(&self.adj)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Number of neighbours of `v` inside `s`.
    pub fn degree_in(&self, v: usize, s: &VertexSet) -> usize {
        self.adj[v].iter().filter(|&&u| s.contains(u)).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }
}
