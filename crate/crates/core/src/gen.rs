//! Deterministic instance factories.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, UnsignedGraph};
use crate::reductions::Hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompleteMode {
    /// Positive inside parts, negative across.
    Balanced,
    /// Negative inside parts, positive across.
    AntiBalanced,
}

/// Complete graph on `Σ parts` vertices; part `i` occupies a contiguous
/// index range, in the given order.
pub fn gen_complete(parts: &[usize], mode: CompleteMode) -> Result<SignedGraph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::BadParameter("parts must be non-empty and positive".into()));
    }
    let n: usize = parts.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, p));
    }
    let (inside, across) = match mode {
        CompleteMode::Balanced => (Sign::Pos, Sign::Neg),
        CompleteMode::AntiBalanced => (Sign::Neg, Sign::Pos),
    };
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v, if part[u] == part[v] { inside } else { across }));
        }
    }
    SignedGraph::new(n, &edges)
}

/// Each pair independently becomes positive with probability `p_pos`,
/// negative with probability `p_neg`, and stays unlinked otherwise.
pub fn gen_random_signed(n: usize, p_pos: f64, p_neg: f64, seed: u64) -> Result<SignedGraph> {
    if !(p_pos >= 0.0 && p_neg >= 0.0 && p_pos + p_neg <= 1.0) {
        return Err(Error::BadProbabilities);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let r: f64 = rng.random();
            if r < p_pos {
                edges.push((u, v, Sign::Pos));
            } else if r < p_pos + p_neg {
                edges.push((u, v, Sign::Neg));
            }
        }
    }
    SignedGraph::new(n, &edges)
}

pub fn gen_random_unsigned(n: usize, p: f64, seed: u64) -> Result<UnsignedGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadProbabilities);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    UnsignedGraph::new(n, &edges)
}

/// `m` distinct non-empty hyperedges over `n` vertices, each with at most
/// `max_edge` vertices. Fails if fewer than `m` such hyperedges exist.
pub fn gen_hypergraph(n: usize, m: usize, max_edge: usize, seed: u64) -> Result<Hypergraph> {
    if n == 0 || max_edge == 0 {
        return Err(Error::BadParameter("need n >= 1 and max_edge >= 1".into()));
    }
    let max_edge = max_edge.min(n);
    let available: u128 = (1..=max_edge).map(|s| binomial(n, s)).sum();
    if (m as u128) > available {
        return Err(Error::BadParameter(format!(
            "only {available} distinct hyperedges of size <= {max_edge} exist"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
    while edges.len() < m {
        let size = rng.random_range(1..=max_edge);
        let mut e: Vec<usize> = Vec::with_capacity(size);
        while e.len() < size {
            let v = rng.random_range(0..n);
            if !e.contains(&v) {
                e.push(v);
            }
        }
        e.sort_unstable();
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    Hypergraph::new(n, edges)
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Signed path `0 – 1 – … – n−1`; edge `i` gets `signs[i % signs.len()]`.
pub fn gen_path(n: usize, signs: &[Sign]) -> Result<SignedGraph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i, cyclic(signs, i - 1))).collect();
    SignedGraph::new(n, &edges)
}

/// Signed cycle on `n ≥ 3` vertices.
pub fn gen_cycle(n: usize, signs: &[Sign]) -> Result<SignedGraph> {
    if n < 3 {
        return Err(Error::BadParameter("a cycle needs at least 3 vertices".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, cyclic(signs, i))).collect();
    SignedGraph::new(n, &edges)
}

/// Caterpillar: spine `0..spine`, then `legs[i]` leaves hanging off spine
/// vertex `i`, numbered consecutively. Signs are drawn from `seed`, each
/// edge negative with probability `p_neg`.
pub fn gen_caterpillar(legs: &[usize], p_neg: f64, seed: u64) -> Result<SignedGraph> {
    if legs.is_empty() {
        return Err(Error::BadParameter("caterpillar needs a spine".into()));
    }
    if !(0.0..=1.0).contains(&p_neg) {
        return Err(Error::BadProbabilities);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sign = || if rng.random_bool(p_neg) { Sign::Neg } else { Sign::Pos };
    let spine = legs.len();
    let mut edges = Vec::new();
    for i in 1..spine {
        edges.push((i - 1, i, sign()));
    }
    let mut next = spine;
    for (i, &l) in legs.iter().enumerate() {
        for _ in 0..l {
            edges.push((i, next, sign()));
            next += 1;
        }
    }
    SignedGraph::new(next, &edges)
}

/// Replaces every sign of `g` by a random one (negative with probability
/// `p_neg`), keeping the underlying graph.
pub fn resign(g: &SignedGraph, p_neg: f64, seed: u64) -> Result<SignedGraph> {
    if !(0.0..=1.0).contains(&p_neg) {
        return Err(Error::BadProbabilities);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all: Vec<(usize, usize)> = g.pos_edges();
    all.extend(g.neg_edges());
    all.sort_unstable();
    let edges: Vec<_> = all
        .into_iter()
        .map(|(u, v)| (u, v, if rng.random_bool(p_neg) { Sign::Neg } else { Sign::Pos }))
        .collect();
    Ok(SignedGraph::new(g.n(), &edges)?.with_labels(g.labels().to_vec()))
}

fn cyclic(signs: &[Sign], i: usize) -> Sign {
    if signs.is_empty() {
        Sign::Neg
    } else {
        signs[i % signs.len()]
    }
}
