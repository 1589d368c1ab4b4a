//! Signed neighbourhood diversity and the integer program over it.
//!
//! Vertices with the same signed neighbourhood (ignoring each other) are
//! interchangeable, so an alliance is described by how many vertices it
//! takes from each class. That turns the problem into an integer program
//! whose size depends only on the number of classes.

mod bounds;
mod ilp;
mod partition;

pub use bounds::{snd_upper_bounds, BoundReport, SndCertificate};
pub use ilp::{
    build_oa_ilp, solve_ilp, w_var, x_var, y_var, Cmp, IlpModel, IlpOutcome, IlpSolution, Row,
    Var,
};
pub use partition::{same_type, snd_partition, ClassKind, SndPartition};

use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::solver::{SolveResult, Strategy};
use crate::vset::VertexSet;

/// Takes the `x_i` lowest-indexed vertices of every class and verifies the
/// result.
pub fn decode_solution(g: &SignedGraph, p: &SndPartition, sol: &IlpSolution) -> Result<VertexSet> {
    let k = p.k();
    let mut s = VertexSet::new(p.n);
    for (i, class) in p.classes.iter().enumerate() {
        let x = sol.values[x_var(k, i)];
        let take = usize::try_from(x)
            .ok()
            .filter(|&t| t <= class.len())
            .ok_or_else(|| Error::VerificationFailed(format!("x{} = {x} out of range", i + 1)))?;
        for &v in &class[..take] {
            s.insert(v);
        }
    }
    if s.is_empty() || !crate::alliance::accepts(g, &s) {
        return Err(Error::VerificationFailed(format!(
            "decoded set {:?} is not an offensive alliance",
            s.to_vec()
        )));
    }
    Ok(s)
}

/// Partition, build, solve, decode: `a_so(G)` via the integer program.
pub fn min_offensive_alliance_ilp(g: &SignedGraph) -> Result<SolveResult> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let p = snd_partition(g)?;
    let model = build_oa_ilp(&p);
    let sol = solve_ilp(&model)
        .optimal()
        .ok_or_else(|| Error::InternalInconsistency("alliance program is infeasible".into()))?;
    let s = decode_solution(g, &p, &sol)?;
    SolveResult::verified(g, s, Strategy::Ilp, sol.nodes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::seven_signed;
    use crate::gen::{gen_complete, gen_random_signed, CompleteMode};
    use crate::solver::min_offensive_alliance_bruteforce;

    fn optimum(g: &SignedGraph) -> usize {
        min_offensive_alliance_ilp(g).unwrap().optimum
    }

    #[test]
    fn cliques() {
        let neg = gen_complete(&[3], CompleteMode::AntiBalanced).unwrap();
        assert_eq!(optimum(&neg), 1);
        let pos = gen_complete(&[3], CompleteMode::Balanced).unwrap();
        assert_eq!(optimum(&pos), 3);
        let two = gen_complete(&[3, 3], CompleteMode::Balanced).unwrap();
        assert_eq!(optimum(&two), 3);
    }

    #[test]
    fn seven_signed_optimum() {
        assert_eq!(optimum(&seven_signed()), 4);
    }

    #[test]
    fn linking_rows_hold_on_solutions() {
        for seed in 0..40 {
            let g = gen_random_signed(2 + seed as usize % 9, 0.3, 0.4, seed).unwrap();
            let p = snd_partition(&g).unwrap();
            let m = build_oa_ilp(&p);
            let sol = solve_ilp(&m).optimal().unwrap();
            let k = p.k();
            for i in 0..k {
                let x = sol.values[x_var(k, i)];
                assert_eq!(sol.values[y_var(k, i)] == 1, x == p.classes[i].len() as i64);
            }
            let s = decode_solution(&g, &p, &sol).unwrap();
            let want = min_offensive_alliance_bruteforce(&g, None).unwrap().optimum();
            assert_eq!(Some(s.len()), want, "seed {seed}");
        }
    }

    #[test]
    fn lp_dump_names_every_row() {
        let g = gen_complete(&[2, 1], CompleteMode::Balanced).unwrap();
        let m = build_oa_ilp(&snd_partition(&g).unwrap());
        let lp = m.to_lp();
        assert!(lp.starts_with("Minimize\n obj: x1 + x2\n"));
        for r in &m.rows {
            assert!(lp.contains(&format!(" {}: ", r.name)));
        }
        assert!(lp.trim_end().ends_with("End"));
    }
}
