//! Exact branching search over violated boundary vertices.
//!
//! If `v` is on the boundary of `S` and not successfully attacked, every
//! alliance `S* ⊇ S` must contain some vertex of `N[v] \ S`: otherwise `v`
//! keeps the same neighbours in the set and stays violated. Branching on
//! those vertices, with earlier siblings excluded, enumerates every minimal
//! extension exactly once. A vertex that cannot be attacked at all leaves
//! only one option: joining the set itself.

use crate::alliance::{attackable, component_lower_bound, component_precondition};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::solver::{better, smallest_component, Outcome, SolveResult, Strategy};
use crate::vset::VertexSet;

pub fn min_offensive_alliance_branching(g: &SignedGraph, budget: Option<usize>) -> Result<Outcome> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let trivial = smallest_component(g).expect("non-empty graph");
    let mut search = Search {
        g,
        attackable: (0..g.n()).map(|v| attackable(g, v)).collect(),
        best: None,
        // Strictly smaller than the trivial alliance, and within budget.
        limit: budget.map_or(trivial.len() - 1, |b| b.min(trivial.len() - 1)),
        nodes: 0,
    };
    let comp_of = component_index(g);
    let comps = g.components();
    let usable: Vec<bool> = comps
        .iter()
        .map(|c| c.len() > 1 && component_precondition(g, c))
        .collect();
    let lower: Vec<usize> = comps.iter().map(|c| component_lower_bound(g, c)).collect();

    let mut excluded = VertexSet::new(g.n());
    for seed in 0..g.n() {
        let c = comp_of[seed];
        if usable[c] && lower[c] <= search.limit {
            let mut s = VertexSet::new(g.n());
            s.insert(seed);
            search.dfs(&mut s, &mut excluded.clone());
        }
        excluded.insert(seed);
    }

    let best = match search.best.take() {
        Some(s) => Some(better(Some(s), trivial)),
        None => Some(trivial),
    };
    let explored = search.nodes;
    let best = best.expect("trivial alliance exists");
    Ok(Outcome::Found(SolveResult::verified(g, best, Strategy::Branch, explored)?)
        .apply_budget(budget))
}

fn component_index(g: &SignedGraph) -> Vec<usize> {
    let mut idx = vec![0; g.n()];
    for (i, c) in g.components().iter().enumerate() {
        for &v in c {
            idx[v] = i;
        }
    }
    idx
}

struct Search<'a> {
    g: &'a SignedGraph,
    attackable: Vec<bool>,
    best: Option<VertexSet>,
    /// Largest alliance size still worth finding.
    limit: usize,
    nodes: u64,
}

impl Search<'_> {
    fn dfs(&mut self, s: &mut VertexSet, excluded: &mut VertexSet) {
        self.nodes += 1;
        let size = s.len();
        if size > self.limit {
            return;
        }
        let Some((options, need)) = self.pick_violated(s, excluded) else {
            // No violated boundary vertex: `s` is an alliance.
            self.best = Some(s.clone());
            self.limit = size - 1;
            return;
        };
        if options.is_empty() || size + need > self.limit {
            return;
        }
        let mut added = Vec::with_capacity(options.len());
        for &o in &options {
            s.insert(o);
            self.dfs(s, excluded);
            s.remove(o);
            excluded.insert(o);
            added.push(o);
            if size + need > self.limit {
                break;
            }
        }
        for o in added {
            excluded.remove(o);
        }
    }

    /// The violated boundary vertex with the fewest repair options, together
    /// with a lower bound on how many vertices any repair must add.
    fn pick_violated(&self, s: &VertexSet, excluded: &VertexSet) -> Option<(Vec<usize>, usize)> {
        let g = self.g;
        let mut seen = VertexSet::new(g.n());
        let mut pick: Option<Vec<usize>> = None;
        let mut need = 0usize;
        for v in s {
            for &u in g.pos_neighbors(v).iter().chain(g.neg_neighbors(v)) {
                if s.contains(u) || !seen.insert(u) {
                    continue;
                }
                let p = g.degree_profile(u, s);
                if p.attacked() {
                    continue;
                }
                let self_ok = !excluded.contains(u);
                let mut options = Vec::new();
                if self.attackable[u] {
                    options.extend(
                        g.neg_neighbors(u)
                            .iter()
                            .chain(g.pos_neighbors(u))
                            .copied()
                            .filter(|&w| !s.contains(w) && !excluded.contains(w)),
                    );
                }
                if self_ok {
                    options.push(u);
                }
                // Without adding `u`, each added vertex repairs each deficit by
                // at most one.
                let deficit = (p.pos_out + 1 - p.neg_in.min(p.pos_out + 1))
                    .max(p.pos_in.saturating_sub(p.neg_in));
                let local = if self_ok || !self.attackable[u] { 1 } else { deficit };
                need = need.max(local);
                if options.is_empty() {
                    return Some((options, need));
                }
                if pick.as_ref().is_none_or(|o| options.len() < o.len()) {
                    pick = Some(options);
                }
            }
        }
        pick.map(|o| (o, need))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::seven_signed;
    use crate::gen::gen_random_signed;
    use crate::solver::brute::min_offensive_alliance_bruteforce;

    #[test]
    fn seven_vertex_example() {
        let r = min_offensive_alliance_branching(&super::tests::g1b(), None)
            .unwrap()
            .found()
            .unwrap();
        assert_eq!(r.optimum, 4);
    }

    fn g1b() -> SignedGraph {
        seven_signed()
    }

    #[test]
    fn matches_bruteforce_on_random_graphs() {
        for seed in 0..300 {
            let n = 1 + (seed as usize % 11);
            let (pp, pn) = [(0.2, 0.5), (0.4, 0.3), (0.15, 0.15), (0.5, 0.5)][seed as usize % 4];
            let g = gen_random_signed(n, pp, pn, seed).unwrap();
            let a = min_offensive_alliance_bruteforce(&g, None).unwrap().optimum();
            let b = min_offensive_alliance_branching(&g, None).unwrap().optimum();
            assert_eq!(a, b, "seed {seed}");
            for budget in [1, 2, 3] {
                let a = min_offensive_alliance_bruteforce(&g, Some(budget)).unwrap().is_yes();
                let b = min_offensive_alliance_branching(&g, Some(budget)).unwrap().is_yes();
                assert_eq!(a, b, "seed {seed} budget {budget}");
            }
        }
    }
}
