//! Exhaustive subset enumeration: the oracle for every other solver.

use std::thread;

use crate::alliance::{attackable, component_lower_bound, component_precondition};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::solver::{better, Outcome, SolveResult, Strategy};
use crate::vset::{Combinations, VertexSet};

/// Configuration for the exhaustive search.
#[derive(Debug, Clone, Copy)]
pub struct BruteForce {
    pub budget: Option<usize>,
    /// Per-component search with degree bounds and lazy boundary pruning.
    /// When off, every subset of `V` is tried in order of size.
    pub prune: bool,
    pub threads: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce {
            budget: None,
            prune: true,
            threads: 1,
        }
    }
}

pub fn min_offensive_alliance_bruteforce(g: &SignedGraph, budget: Option<usize>) -> Result<Outcome> {
    BruteForce {
        budget,
        ..BruteForce::default()
    }
    .solve(g)
}

impl BruteForce {
    pub fn solve(&self, g: &SignedGraph) -> Result<Outcome> {
        if g.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut explored = 0u64;
        let best = if self.prune {
            self.pruned(g, &mut explored)
        } else {
            self.unpruned(g, &mut explored)
        };
        match best {
            Some(set) => {
                Ok(Outcome::Found(SolveResult::verified(g, set, Strategy::Brute, explored)?))
            }
            None => Ok(Outcome::NoneWithinBudget {
                budget: self.budget.unwrap_or(0),
                explored,
            }),
        }
    }

    fn cap(&self, limit: usize) -> usize {
        self.budget.map_or(limit, |b| b.min(limit))
    }

    fn unpruned(&self, g: &SignedGraph, explored: &mut u64) -> Option<VertexSet> {
        let pool: Vec<usize> = (0..g.n()).collect();
        (1..=self.cap(g.n())).find_map(|size| {
            self.search_size(g, &pool, size, false, explored)
        })
    }

    fn pruned(&self, g: &SignedGraph, explored: &mut u64) -> Option<VertexSet> {
        let mut best: Option<VertexSet> = None;
        for comp in g.components() {
            let limit = best.as_ref().map_or(comp.len(), |b| b.len().min(comp.len()));
            let cap = self.cap(limit);
            let start = component_lower_bound(g, &comp).max(1);
            let mut found = None;
            // Only the trivial alliance exists when the precondition fails.
            if comp.len() > 1 && component_precondition(g, &comp) {
                for size in start..comp.len().min(cap + 1) {
                    if let Some(s) = self.search_size(g, &comp, size, true, explored) {
                        found = Some(s);
                        break;
                    }
                }
            }
            let candidate = found.or_else(|| {
                (comp.len() <= cap).then(|| VertexSet::from_iter(g.n(), comp.iter().copied()))
            });
            if let Some(c) = candidate {
                best = Some(better(best, c));
            }
        }
        best
    }

    /// First accepted `size`-subset of `pool` in lexicographic order.
    fn search_size(
        &self,
        g: &SignedGraph,
        pool: &[usize],
        size: usize,
        prune: bool,
        explored: &mut u64,
    ) -> Option<VertexSet> {
        if size == 0 || size > pool.len() {
            return None;
        }
        let threads = self.threads.max(1).min(pool.len() - size + 1);
        if threads == 1 {
            return scan(g, pool, size, prune, None, explored);
        }
        let results: Vec<(Option<VertexSet>, u64)> = thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|w| {
                    scope.spawn(move || {
                        let mut local = 0u64;
                        let firsts = (w..=pool.len() - size).step_by(threads);
                        let hit = firsts
                            .into_iter()
                            .find_map(|f| scan(g, pool, size, prune, Some(f), &mut local));
                        (hit, local)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        });
        let mut best: Option<VertexSet> = None;
        for (hit, n) in results {
            *explored += n;
            if let Some(s) = hit {
                best = Some(match best {
                    Some(b) if b <= s => b,
                    _ => s,
                });
            }
        }
        best
    }
}

/// Scans combinations of `pool` (optionally only those whose first pool
/// index is `first`) and returns the first accepted one.
fn scan(
    g: &SignedGraph,
    pool: &[usize],
    size: usize,
    prune: bool,
    first: Option<usize>,
    explored: &mut u64,
) -> Option<VertexSet> {
    let mut combos = match first {
        Some(f) => Combinations::starting_with(pool.len(), size, f),
        None => Combinations::new(pool.len(), size),
    };
    let mut set = VertexSet::new(g.n());
    let mut seen = VertexSet::new(g.n());
    while let Some(idx) = combos.current() {
        if first.is_some_and(|f| idx[0] != f) {
            break;
        }
        *explored += 1;
        set.clear();
        for &i in idx {
            set.insert(pool[i]);
        }
        if check(g, &set, &mut seen, prune) {
            return Some(set);
        }
        combos.advance();
    }
    None
}

/// Boundary check that discards a candidate at the first boundary vertex
/// that cannot be attacked by any set.
fn check(g: &SignedGraph, s: &VertexSet, seen: &mut VertexSet, prune: bool) -> bool {
    seen.clear();
    for v in s {
        for &u in g.pos_neighbors(v).iter().chain(g.neg_neighbors(v)) {
            if s.contains(u) || !seen.insert(u) {
                continue;
            }
            if prune && !attackable(g, u) {
                return false;
            }
            if !g.degree_profile(u, s).attacked() {
                return false;
            }
        }
    }
    true
}
