//! Closed forms for complete signed graphs that are (anti-)balanced.
//!
//! A complete graph is *k-balanced* when its positive graph splits into `k`
//! cliques with only negative edges between them, and *k-anti-balanced*
//! with the signs exchanged. For these families the alliance number has a
//! formula in the part sizes alone.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::solver::brute::min_offensive_alliance_bruteforce;
use crate::vset::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum CompleteKind {
    Balanced { k: usize },
    AntiBalanced { k: usize },
    OtherComplete,
    NotComplete,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompleteClassification {
    pub kind: CompleteKind,
    /// Parts `V1..Vk` by non-increasing size (ties: smaller first vertex),
    /// each sorted. Empty unless the kind is (anti-)balanced.
    pub parts: Vec<Vec<usize>>,
    /// All-negative graphs are also `n`-balanced (singleton parts).
    pub also_balanced_k: Option<usize>,
    /// All-positive graphs are also `n`-anti-balanced.
    pub also_anti_balanced_k: Option<usize>,
}

impl CompleteClassification {
    /// Partition under which the graph is balanced, if it is.
    pub fn balanced_parts(&self) -> Option<Vec<Vec<usize>>> {
        match self.kind {
            CompleteKind::Balanced { .. } => Some(self.parts.clone()),
            _ if self.also_balanced_k.is_some() => Some(singletons(self.n())),
            _ => None,
        }
    }

    /// Partition under which the graph is anti-balanced, if it is.
    pub fn anti_balanced_parts(&self) -> Option<Vec<Vec<usize>>> {
        match self.kind {
            CompleteKind::AntiBalanced { .. } => Some(self.parts.clone()),
            _ if self.also_anti_balanced_k.is_some() => Some(singletons(self.n())),
            _ => None,
        }
    }

    fn n(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }
}

fn singletons(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|v| vec![v]).collect()
}

/// Which formula produced a closed-form value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedCase {
    Balanced,
    /// Two large parts: equal halves from each.
    AntiTwoParts,
    /// One dominant part.
    AntiDominant,
    /// Only the whole vertex set.
    AntiWhole,
    /// The two-part witness was infeasible; the value came from brute force.
    AntiFallback,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub optimum: usize,
    pub witness: VertexSet,
    pub case: ClosedCase,
}

pub fn classify_complete(g: &SignedGraph) -> CompleteClassification {
    let n = g.n();
    let unclassified = |kind| CompleteClassification {
        kind,
        parts: Vec::new(),
        also_balanced_k: None,
        also_anti_balanced_k: None,
    };
    if (0..n).any(|v| g.degree(v) + 1 != n) {
        return unclassified(CompleteKind::NotComplete);
    }
    let (pos, neg) = (g.num_pos_edges(), g.num_neg_edges());
    if neg == 0 {
        // Includes the single vertex.
        return CompleteClassification {
            kind: CompleteKind::Balanced { k: 1 },
            parts: vec![(0..n).collect()],
            also_balanced_k: None,
            also_anti_balanced_k: Some(n),
        };
    }
    if pos == 0 {
        return CompleteClassification {
            kind: CompleteKind::AntiBalanced { k: 1 },
            parts: vec![(0..n).collect()],
            also_balanced_k: Some(n),
            also_anti_balanced_k: None,
        };
    }
    for (sign, make) in [
        (Sign::Pos, (|k| CompleteKind::Balanced { k }) as fn(usize) -> CompleteKind),
        (Sign::Neg, |k| CompleteKind::AntiBalanced { k }),
    ] {
        if let Some(parts) = pure_components(g, sign) {
            return CompleteClassification {
                kind: make(parts.len()),
                parts,
                also_balanced_k: None,
                also_anti_balanced_k: None,
            };
        }
    }
    unclassified(CompleteKind::OtherComplete)
}

/// Components of the `sign` graph, if none contains an edge of the other
/// sign; sorted by non-increasing size.
fn pure_components(g: &SignedGraph, sign: Sign) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = parts.len();
        comp[s] = id;
        let mut stack = vec![s];
        let mut part = Vec::new();
        while let Some(v) = stack.pop() {
            part.push(v);
            let next = match sign {
                Sign::Pos => g.pos_neighbors(v),
                Sign::Neg => g.neg_neighbors(v),
            };
            for &u in next {
                if comp[u] == usize::MAX {
                    comp[u] = id;
                    stack.push(u);
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    let other = match sign {
        Sign::Pos => g.neg_edges(),
        Sign::Neg => g.pos_edges(),
    };
    if other.iter().any(|&(u, v)| comp[u] == comp[v]) {
        return None;
    }
    parts.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    Some(parts)
}

/// `a_so = |V1|`, witnessed by the largest part.
pub fn aso_balanced(c: &CompleteClassification) -> Result<ClosedForm> {
    let parts = c.balanced_parts().ok_or(Error::NotBalanced)?;
    let n = c.n();
    Ok(ClosedForm {
        optimum: parts[0].len(),
        witness: VertexSet::from_iter(n, parts[0].iter().copied()),
        case: ClosedCase::Balanced,
    })
}

/// Tests whether a selection meeting at least two parts of a balanced
/// complete graph is a minimum alliance: `|S| = |V1| >= 2|S_l|`, where
/// `S_l` is the largest intersection whose part is not exhausted by `S`.
pub fn is_min_balanced_multipart(c: &CompleteClassification, s: &VertexSet) -> Result<bool> {
    let parts = c.balanced_parts().ok_or(Error::NotBalanced)?;
    let mut touched = 0;
    let mut largest_open: Option<usize> = None;
    for p in &parts {
        let hit = p.iter().filter(|&&v| s.contains(v)).count();
        if hit == 0 {
            continue;
        }
        touched += 1;
        if hit < p.len() {
            largest_open = largest_open.max(Some(hit));
        }
    }
    if touched < 2 {
        return Err(Error::SinglePart);
    }
    let sl = largest_open.ok_or(Error::DegenerateSelection)?;
    Ok(s.len() == parts[0].len() && s.len() >= 2 * sl)
}

/// Anti-balanced closed form, cases tried in the order two-part, dominant
/// part, whole set.
pub fn aso_anti_balanced(c: &CompleteClassification, g: &SignedGraph) -> Result<ClosedForm> {
    let parts = c.anti_balanced_parts().ok_or(Error::NotAntiBalanced)?;
    let n = c.n();
    let v1 = parts[0].len();
    if parts.len() == 2 && 3 * parts[1].len() >= n + 1 {
        // |V2| >= ceil((n+1)/3)
        let half = (v1 + 1).div_ceil(2);
        if half <= parts[1].len() {
            let witness = VertexSet::from_iter(
                n,
                parts[0][..half].iter().chain(&parts[1][..half]).copied(),
            );
            return Ok(ClosedForm {
                optimum: 2 * half,
                witness,
                case: ClosedCase::AntiTwoParts,
            });
        }
        let r = min_offensive_alliance_bruteforce(g, None)?
            .found()
            .ok_or_else(|| Error::InternalInconsistency("no alliance found".into()))?;
        return Ok(ClosedForm {
            optimum: r.optimum,
            witness: r.witness.alliance,
            case: ClosedCase::AntiFallback,
        });
    }
    if 2 * v1 >= n {
        let rest = n - v1;
        if rest == 0 {
            return Ok(ClosedForm {
                optimum: 1,
                witness: VertexSet::from_iter(n, [parts[0][0]]),
                case: ClosedCase::AntiDominant,
            });
        }
        let witness = VertexSet::from_iter(
            n,
            parts[0][..rest]
                .iter()
                .chain(parts[1..].iter().flatten())
                .copied(),
        );
        return Ok(ClosedForm {
            optimum: (rest + 1).max(2 * rest),
            witness,
            case: ClosedCase::AntiDominant,
        });
    }
    Ok(ClosedForm {
        optimum: n,
        witness: VertexSet::full(n),
        case: ClosedCase::AntiWhole,
    })
}

/// Closed-form answer for any (anti-)balanced complete graph; `None` for
/// other graphs. Anti-balanced is preferred when both apply.
pub fn closed_form(g: &SignedGraph) -> Result<Option<ClosedForm>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let c = classify_complete(g);
    if c.anti_balanced_parts().is_some() {
        return aso_anti_balanced(&c, g).map(Some);
    }
    if c.balanced_parts().is_some() {
        return aso_balanced(&c).map(Some);
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alliance::accepts;
    use crate::gen::{gen_complete, CompleteMode};

    #[test]
    fn classification_examples() {
        let g = gen_complete(&[5], CompleteMode::Balanced).unwrap();
        assert_eq!(classify_complete(&g).kind, CompleteKind::Balanced { k: 1 });

        let g = gen_complete(&[5], CompleteMode::AntiBalanced).unwrap();
        let c = classify_complete(&g);
        assert_eq!(c.kind, CompleteKind::AntiBalanced { k: 1 });
        assert_eq!(c.also_balanced_k, Some(5));

        let g = gen_complete(&[3, 3], CompleteMode::Balanced).unwrap();
        let c = classify_complete(&g);
        assert_eq!(c.kind, CompleteKind::Balanced { k: 2 });
        assert_eq!(c.parts, vec![vec![0, 1, 2], vec![3, 4, 5]]);

        let g = SignedGraph::from_lists(3, &[(0, 1)], &[]).unwrap();
        assert_eq!(classify_complete(&g).kind, CompleteKind::NotComplete);

        // Positive triangle 0,1,2 plus vertex 3 joined positively to 0 and
        // negatively to 1, 2: the positive graph is connected but impure.
        let g = SignedGraph::from_lists(
            4,
            &[(0, 1), (0, 2), (1, 2), (0, 3)],
            &[(1, 3), (2, 3)],
        )
        .unwrap();
        assert_eq!(classify_complete(&g).kind, CompleteKind::OtherComplete);
    }

    #[test]
    fn parts_sorted_by_size() {
        let g = gen_complete(&[1, 3, 2], CompleteMode::Balanced).unwrap();
        let c = classify_complete(&g);
        assert_eq!(c.parts, vec![vec![1, 2, 3], vec![4, 5], vec![0]]);
        let r = aso_balanced(&c).unwrap();
        assert_eq!(r.optimum, 3);
        assert_eq!(r.witness.to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn anti_balanced_examples() {
        for (parts, want, case) in [
            (&[3, 3][..], 4, ClosedCase::AntiTwoParts),
            (&[3, 1, 1][..], 4, ClosedCase::AntiDominant),
            (&[5][..], 1, ClosedCase::AntiDominant),
            (&[2, 2, 2][..], 6, ClosedCase::AntiWhole),
        ] {
            let g = gen_complete(parts, CompleteMode::AntiBalanced).unwrap();
            let c = classify_complete(&g);
            let r = aso_anti_balanced(&c, &g).unwrap();
            assert_eq!((r.optimum, r.case), (want, case), "{parts:?}");
            assert!(accepts(&g, &r.witness));
            assert_eq!(r.witness.len(), r.optimum);
        }
    }

    #[test]
    fn wrong_family_errors() {
        let g = gen_complete(&[2, 2], CompleteMode::Balanced).unwrap();
        let c = classify_complete(&g);
        assert_eq!(aso_anti_balanced(&c, &g), Err(Error::NotAntiBalanced));
        let g = gen_complete(&[2, 2], CompleteMode::AntiBalanced).unwrap();
        assert_eq!(aso_balanced(&classify_complete(&g)), Err(Error::NotBalanced));
    }

    #[test]
    fn multipart_selections() {
        let g = gen_complete(&[4, 4], CompleteMode::Balanced).unwrap();
        let c = classify_complete(&g);
        let s = VertexSet::from_iter(8, [0, 1, 4, 5]);
        assert_eq!(is_min_balanced_multipart(&c, &s), Ok(true));
        assert!(accepts(&g, &s));

        let g = gen_complete(&[4, 2], CompleteMode::Balanced).unwrap();
        let c = classify_complete(&g);
        let s = VertexSet::from_iter(6, [0, 1, 2, 4]);
        assert_eq!(is_min_balanced_multipart(&c, &s), Ok(false));
        assert!(!accepts(&g, &s));

        let g = gen_complete(&[2, 2], CompleteMode::Balanced).unwrap();
        let c = classify_complete(&g);
        assert_eq!(
            is_min_balanced_multipart(&c, &VertexSet::full(4)),
            Err(Error::DegenerateSelection)
        );
        assert_eq!(
            is_min_balanced_multipart(&c, &VertexSet::from_iter(4, [0])),
            Err(Error::SinglePart)
        );
    }
}
