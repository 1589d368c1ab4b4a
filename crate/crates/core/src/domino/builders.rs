//! Canonical domino decompositions for structured families, and a random
//! generator of graphs together with a decomposition.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::DominoDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

/// Path-shaped decomposition with bags `C_j ∪ C_{j+1}` for consecutive
/// columns. Valid whenever every edge joins two vertices of the same or of
/// adjacent columns.
pub fn column_decomposition(columns: &[Vec<usize>]) -> DominoDecomposition {
    let bags: Vec<Vec<usize>> = if columns.len() <= 1 {
        vec![columns.first().cloned().unwrap_or_default()]
    } else {
        columns
            .windows(2)
            .map(|w| w[0].iter().chain(&w[1]).copied().collect())
            .collect()
    };
    let edges: Vec<(usize, usize)> = (1..bags.len()).map(|i| (i - 1, i)).collect();
    DominoDecomposition::new(bags, &edges, 0).expect("path-shaped tree")
}

/// Width 1 for the path `0 – 1 – … – n−1`.
pub fn path_decomposition(n: usize) -> DominoDecomposition {
    let cols: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    column_decomposition(&cols)
}

/// Width at most 3 for the cycle `0 – 1 – … – n−1 – 0`: the cycle is
/// folded into a ladder whose columns pair `i` with `n−1−i`.
pub fn cycle_decomposition(n: usize) -> DominoDecomposition {
    let cols: Vec<Vec<usize>> = (0..n.div_ceil(2))
        .map(|i| {
            let j = n - 1 - i;
            if j > i { vec![i, j] } else { vec![i] }
        })
        .collect();
    column_decomposition(&cols)
}

/// For the caterpillar of [`crate::gen::gen_caterpillar`]: column `i` is
/// spine vertex `i` with its leaves.
pub fn caterpillar_decomposition(legs: &[usize]) -> DominoDecomposition {
    let mut next = legs.len();
    let cols: Vec<Vec<usize>> = legs
        .iter()
        .enumerate()
        .map(|(i, &l)| {
            let mut c = vec![i];
            c.extend(next..next + l);
            next += l;
            c
        })
        .collect();
    column_decomposition(&cols)
}

/// For a forest: one bag `{u} ∪ children(u)` per vertex with children,
/// rooted at the smallest vertex of each tree, trees chained at their root
/// bags... Each vertex lies in its parent's bag and its own. Width is the
/// largest number of children. Isolated vertices get singleton bags.
pub fn tree_decomposition(g: &SignedGraph) -> Result<DominoDecomposition> {
    let n = g.n();
    let m = g.num_pos_edges() + g.num_neg_edges();
    let comps = g.components();
    if m + comps.len() != n {
        return Err(Error::BadParameter("graph is not a forest".into()));
    }
    let mut bags: Vec<Vec<usize>> = Vec::new();
    let mut tree: Vec<(usize, usize)> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for comp in comps {
        let r = comp[0];
        // Bag of a vertex, created lazily when it has children.
        let mut own = vec![usize::MAX; n];
        let mut stack = vec![(r, usize::MAX, usize::MAX)];
        let mut first = None;
        while let Some((v, parent, parent_bag)) = stack.pop() {
            let kids: Vec<usize> = g.neighbors(v).into_iter().filter(|&u| u != parent).collect();
            if kids.is_empty() && parent != usize::MAX {
                continue;
            }
            let id = bags.len();
            own[v] = id;
            let mut bag = vec![v];
            bag.extend(&kids);
            bags.push(bag);
            if parent_bag != usize::MAX {
                tree.push((parent_bag, id));
            }
            first.get_or_insert(id);
            for &u in kids.iter().rev() {
                stack.push((u, v, id));
            }
        }
        roots.push(first.expect("component has a bag"));
    }
    for w in roots.windows(2) {
        tree.push((w[0], w[1]));
    }
    DominoDecomposition::new(bags, &tree, roots[0])
}

/// `{v1..v5}` – `{v4..v7}`, width 4. The seven-vertex example graph has no
/// domino decomposition of width 3: with bags of at most four vertices the
/// degree-4 vertex `v3` and the 6-cycle around it cannot be covered.
pub fn seven_signed_decomposition() -> DominoDecomposition {
    // v1..v7 at indices 0..6.
    DominoDecomposition::new(vec![vec![0, 1, 2, 3, 4], vec![3, 4, 5, 6]], &[(0, 1)], 0)
    .expect("static tree")
}

/// A random tree of `nodes` bags; each vertex is private to one bag or
/// shared by two adjacent bags, with bags of at most `max_bag` vertices.
/// Pairs sharing a bag become adjacent with probability `p_edge`, negative
/// with probability `p_neg`.
pub fn random_domino(
    nodes: usize,
    max_bag: usize,
    p_edge: f64,
    p_neg: f64,
    seed: u64,
) -> Result<(SignedGraph, DominoDecomposition)> {
    if nodes == 0 || max_bag == 0 {
        return Err(Error::BadParameter("need at least one bag of size one".into()));
    }
    if !(0.0..=1.0).contains(&p_edge) || !(0.0..=1.0).contains(&p_neg) {
        return Err(Error::BadProbabilities);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree: Vec<(usize, usize)> = (1..nodes).map(|t| (rng.random_range(0..t), t)).collect();
    let mut bags: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    let mut n = 0;
    // Shared vertices first, so every tree edge can get at least one.
    for &(a, b) in &tree {
        let room = max_bag.saturating_sub(bags[a].len().max(bags[b].len()));
        let k = if room == 0 { 0 } else { rng.random_range(0..=room.min(2)) };
        for _ in 0..k {
            bags[a].push(n);
            bags[b].push(n);
            n += 1;
        }
    }
    for bag in bags.iter_mut() {
        let room = max_bag - bag.len().min(max_bag);
        let k = if room == 0 { 0 } else { rng.random_range(usize::from(bag.is_empty())..=room.min(3)) };
        for _ in 0..k {
            bag.push(n);
            n += 1;
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if bags.iter().any(|b| b.contains(&u) && b.contains(&v)) && rng.random_bool(p_edge) {
                edges.push((u, v, if rng.random_bool(p_neg) { Sign::Neg } else { Sign::Pos }));
            }
        }
    }
    let g = SignedGraph::new(n, &edges)?;
    let d = DominoDecomposition::new(bags, &tree, 0)?;
    Ok((g, d))
}
