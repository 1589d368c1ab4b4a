//! The offensive-alliance predicate, its certificates, and degree bounds.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DegreeProfile, SignedGraph, UnsignedGraph};
use crate::vset::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Accepted,
    Rejected,
}

/// Which offensive condition a boundary vertex fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    /// `deg_S^-(v) >= deg_S^+(v)`
    Hostility,
    /// `deg_S^-(v) >= deg_{V\S}^+(v) + 1`; for unsigned graphs
    /// `deg_S(v) >= deg_{V\S}(v) + 1`.
    Superiority,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: usize,
    pub failed: Vec<Condition>,
    pub profile: DegreeProfile,
}

/// Outcome of checking a set against the offensive conditions, with every
/// violating boundary vertex listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllianceCertificate {
    pub alliance: VertexSet,
    pub boundary: VertexSet,
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
}

impl AllianceCertificate {
    pub fn accepted(&self) -> bool {
        self.verdict == Verdict::Accepted
    }

    pub fn size(&self) -> usize {
        self.alliance.len()
    }
}

/// `∂S = N(S) \ S`.
pub fn boundary(g: &SignedGraph, s: &VertexSet) -> VertexSet {
    let mut b = VertexSet::new(g.n());
    for v in s {
        for &u in g.pos_neighbors(v).iter().chain(g.neg_neighbors(v)) {
            if !s.contains(u) {
                b.insert(u);
            }
        }
    }
    b
}

pub fn degree_profile(g: &SignedGraph, v: usize, s: &VertexSet) -> DegreeProfile {
    g.degree_profile(v, s)
}

/// Checks both offensive conditions on every boundary vertex of `s`.
pub fn is_offensive_alliance(g: &SignedGraph, s: &VertexSet) -> Result<AllianceCertificate> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(v) = s.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let b = boundary(g, s);
    let mut violations = Vec::new();
    for v in &b {
        let p = g.degree_profile(v, s);
        let mut failed = Vec::new();
        if !p.hostility() {
            failed.push(Condition::Hostility);
        }
        if !p.superiority() {
            failed.push(Condition::Superiority);
        }
        if !failed.is_empty() {
            violations.push(Violation {
                vertex: v,
                failed,
                profile: p,
            });
        }
    }
    Ok(AllianceCertificate {
        alliance: s.clone(),
        boundary: b,
        verdict: if violations.is_empty() {
            Verdict::Accepted
        } else {
            Verdict::Rejected
        },
        violations,
    })
}

/// Fast yes/no form of [`is_offensive_alliance`] for inner loops.
pub fn accepts(g: &SignedGraph, s: &VertexSet) -> bool {
    let mut seen = VertexSet::new(g.n());
    for v in s {
        for &u in g.pos_neighbors(v).iter().chain(g.neg_neighbors(v)) {
            if !s.contains(u) && seen.insert(u) && !g.degree_profile(u, s).attacked() {
                return false;
            }
        }
    }
    !s.is_empty()
}

/// The classical unsigned predicate: every `u ∉ S` with a neighbour in `S`
/// has `deg_S(u) >= deg_{V\S}(u) + 1`.
///
/// The certificate's profile records unsigned degrees in the `neg_*` slots.
pub fn is_offensive_alliance_unsigned(
    g: &UnsignedGraph,
    s: &VertexSet,
) -> Result<AllianceCertificate> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut b = VertexSet::new(g.n());
    for v in s {
        for &u in g.neighbors(v) {
            if !s.contains(u) {
                b.insert(u);
            }
        }
    }
    let violations: Vec<Violation> = b
        .iter()
        .filter_map(|u| {
            let inside = g.degree_in(u, s);
            let outside = g.degree(u) - inside;
            (inside < outside + 1).then_some(Violation {
                vertex: u,
                failed: vec![Condition::Superiority],
                profile: DegreeProfile {
                    pos_in: 0,
                    neg_in: inside,
                    pos_out: 0,
                    neg_out: outside,
                },
            })
        })
        .collect();
    Ok(AllianceCertificate {
        alliance: s.clone(),
        boundary: b,
        verdict: if violations.is_empty() {
            Verdict::Accepted
        } else {
            Verdict::Rejected
        },
        violations,
    })
}

/// Necessary condition for `v` to lie on the boundary of any offensive
/// alliance: `deg-(v) >= ceil((deg+(v) + 1) / 2)`.
pub fn attackable(g: &SignedGraph, v: usize) -> bool {
    g.deg_neg(v) >= (g.deg_pos(v) + 1).div_ceil(2)
}

/// Per component: whether `Δ-(C) >= ceil((δ+(C) + 1) / 2)`. A component
/// failing this admits only its trivial alliance.
pub fn existence_precondition(g: &SignedGraph) -> Vec<bool> {
    g.components()
        .iter()
        .map(|c| component_precondition(g, c))
        .collect()
}

pub(crate) fn component_precondition(g: &SignedGraph, comp: &[usize]) -> bool {
    let (min_pos, _) = g.pos_degree_range(comp.iter().copied());
    let (_, max_neg) = g.neg_degree_range(comp.iter().copied());
    max_neg >= (min_pos + 1).div_ceil(2)
}

/// Per component: `δ+(C) + 1`, a lower bound on every alliance inside `C`.
pub fn size_lower_bound(g: &SignedGraph) -> Vec<usize> {
    g.components()
        .iter()
        .map(|c| component_lower_bound(g, c))
        .collect()
}

pub(crate) fn component_lower_bound(g: &SignedGraph, comp: &[usize]) -> usize {
    g.pos_degree_range(comp.iter().copied()).0 + 1
}

/// Degree statistics and the two existence bounds for one component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentBounds {
    pub vertices: Vec<usize>,
    pub min_pos_degree: usize,
    pub max_pos_degree: usize,
    pub min_neg_degree: usize,
    pub max_neg_degree: usize,
    pub existence_precondition: bool,
    pub size_lower_bound: usize,
    pub attackable: Vec<usize>,
}

pub fn component_bounds(g: &SignedGraph) -> Vec<ComponentBounds> {
    g.components()
        .into_iter()
        .map(|c| {
            let (min_pos_degree, max_pos_degree) = g.pos_degree_range(c.iter().copied());
            let (min_neg_degree, max_neg_degree) = g.neg_degree_range(c.iter().copied());
            ComponentBounds {
                existence_precondition: component_precondition(g, &c),
                size_lower_bound: min_pos_degree + 1,
                attackable: c.iter().copied().filter(|&v| attackable(g, v)).collect(),
                min_pos_degree,
                max_pos_degree,
                min_neg_degree,
                max_neg_degree,
                vertices: c,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{seven_unsigned, seven_signed};
    use crate::graph::Sign;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, vs.iter().copied())
    }

    // Sample vertices v1..v7 map to indices 0..6.

    #[test]
    fn seven_signed_profile_of_v2() {
        let g = seven_signed();
        let p = degree_profile(&g, 1, &set(7, &[0, 2, 3, 4]));
        assert_eq!(
            p,
            DegreeProfile {
                pos_in: 1,
                neg_in: 2,
                pos_out: 0,
                neg_out: 0
            }
        );
    }

    #[test]
    fn empty_and_full_profiles() {
        let g = seven_signed();
        for v in 0..7 {
            let e = degree_profile(&g, v, &VertexSet::new(7));
            assert_eq!((e.pos_in, e.neg_in), (0, 0));
            assert_eq!((e.pos_out, e.neg_out), (g.deg_pos(v), g.deg_neg(v)));
            let f = degree_profile(&g, v, &VertexSet::full(7));
            assert_eq!((f.pos_in, f.neg_in), (g.deg_pos(v), g.deg_neg(v)));
            assert_eq!((f.pos_out, f.neg_out), (0, 0));
        }
    }

    #[test]
    fn seven_signed_boundary() {
        let g = seven_signed();
        assert_eq!(boundary(&g, &set(7, &[0, 2, 3, 4])).to_vec(), vec![1, 5, 6]);
        assert!(boundary(&g, &VertexSet::full(7)).is_empty());
        assert!(boundary(&g, &VertexSet::new(7)).is_empty());
    }

    #[test]
    fn seven_signed_alliances() {
        let g = seven_signed();
        let ok = is_offensive_alliance(&g, &set(7, &[0, 2, 3, 4])).unwrap();
        assert!(ok.accepted());
        assert!(ok.violations.is_empty());

        let bad = is_offensive_alliance(&g, &set(7, &[0, 1, 2])).unwrap();
        assert_eq!(bad.verdict, Verdict::Rejected);
        let v4 = bad.violations.iter().find(|x| x.vertex == 3).unwrap();
        assert!(v4.failed.contains(&Condition::Hostility));
        assert_eq!((v4.profile.neg_in, v4.profile.pos_in), (0, 2));
    }

    #[test]
    fn seven_signed_caption_discrepancy() {
        // The caption lists {v1,v3,v4,v6} as an alliance, but with v2v5
        // positive as drawn, v5 has one hostile neighbour in S against one
        // friend (v2) outside S, so superiority fails there.
        let g = seven_signed();
        let cert = is_offensive_alliance(&g, &set(7, &[0, 2, 3, 5])).unwrap();
        assert_eq!(cert.verdict, Verdict::Rejected);
        assert_eq!(cert.violations.len(), 1);
        assert_eq!(cert.violations[0].vertex, 4);
        assert_eq!(cert.violations[0].failed, vec![Condition::Superiority]);
    }

    #[test]
    fn whole_component_is_accepted() {
        let g = seven_signed();
        let c = is_offensive_alliance(&g, &VertexSet::full(7)).unwrap();
        assert!(c.accepted());
        assert!(c.boundary.is_empty());
    }

    #[test]
    fn empty_set_is_an_error() {
        assert_eq!(
            is_offensive_alliance(&seven_signed(), &VertexSet::new(7)),
            Err(Error::EmptySet)
        );
        assert_eq!(
            is_offensive_alliance_unsigned(&seven_unsigned(), &VertexSet::new(7)),
            Err(Error::EmptySet)
        );
    }

    #[test]
    fn seven_unsigned_unsigned_alliances() {
        let g = seven_unsigned();
        assert!(is_offensive_alliance_unsigned(&g, &set(7, &[0, 1, 2]))
            .unwrap()
            .accepted());
        assert!(!is_offensive_alliance_unsigned(&g, &set(7, &[0, 2, 3, 4]))
            .unwrap()
            .accepted());
        for other in [[0, 2, 4, 6], [0, 2, 3, 5], [0, 3, 4, 6]] {
            assert!(is_offensive_alliance_unsigned(&g, &set(7, &other))
                .unwrap()
                .accepted());
        }
    }

    #[test]
    fn isolated_vertex_unsigned() {
        let g = UnsignedGraph::new(3, &[(1, 2)]).unwrap();
        assert!(is_offensive_alliance_unsigned(&g, &set(3, &[0]))
            .unwrap()
            .accepted());
    }

    fn star(pos: usize, neg: usize) -> SignedGraph {
        let mut edges = Vec::new();
        for i in 0..pos {
            edges.push((0, 1 + i, Sign::Pos));
        }
        for i in 0..neg {
            edges.push((0, 1 + pos + i, Sign::Neg));
        }
        SignedGraph::new(1 + pos + neg, &edges).unwrap()
    }

    #[test]
    fn attackable_formula() {
        assert!(attackable(&star(0, 1), 0));
        assert!(!attackable(&star(3, 1), 0));
        assert!(attackable(&star(3, 2), 0));
        assert!(!attackable(&star(0, 0), 0));
    }

    #[test]
    fn existence_precondition_examples() {
        let tri_pos = SignedGraph::from_lists(3, &[(0, 1), (1, 2), (0, 2)], &[]).unwrap();
        let tri_neg = SignedGraph::from_lists(3, &[], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(existence_precondition(&tri_pos), vec![false]);
        assert_eq!(existence_precondition(&tri_neg), vec![true]);
        assert_eq!(existence_precondition(&seven_signed()), vec![true]);
    }

    #[test]
    fn lower_bound_examples() {
        let k4: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let g = SignedGraph::from_lists(4, &k4, &[]).unwrap();
        assert_eq!(size_lower_bound(&g), vec![4]);
        assert_eq!(size_lower_bound(&seven_signed()), vec![1]);
    }

    #[test]
    fn reformulated_superiority() {
        // deg_S^- >= deg_out^+ + 1  <=>  deg_S >= deg^+ + 1
        let g = seven_signed();
        for mask in 1u32..(1 << 7) {
            let s = VertexSet::from_iter(7, (0..7).filter(|i| mask >> i & 1 == 1));
            for v in boundary(&g, &s).iter() {
                let p = g.degree_profile(v, &s);
                assert_eq!(
                    p.superiority(),
                    p.neg_in + p.pos_in >= g.deg_pos(v) + 1
                );
            }
        }
    }
}
