use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

/// Internal structure of a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassKind {
    /// Positive clique.
    P,
    /// Negative clique.
    N,
    /// Independent set (every singleton class is reported as `I`).
    I,
}

/// The coarsest partition into classes of vertices with identical signed
/// neighbourhoods (ignoring each other).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SndPartition {
    pub n: usize,
    /// Each class sorted; classes ordered by smallest vertex.
    pub classes: Vec<Vec<usize>>,
    pub kinds: Vec<ClassKind>,
    /// Sign shared by every pair across two classes (`None` on the diagonal
    /// and between non-adjacent classes).
    pub inter_sign: Vec<Vec<Option<Sign>>>,
}

impl SndPartition {
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    /// `z_i`: 1 for positive cliques.
    pub fn z(&self, i: usize) -> i64 {
        i64::from(self.kinds[i] == ClassKind::P)
    }

    /// Classes wholly in the positive neighbourhood of class `i`, including
    /// `i` itself when it is a positive clique.
    pub fn pos_classes(&self, i: usize) -> Vec<usize> {
        self.sign_classes(i, Sign::Pos, ClassKind::P)
    }

    /// Classes wholly in the negative neighbourhood of class `i`, including
    /// `i` itself when it is a negative clique.
    pub fn neg_classes(&self, i: usize) -> Vec<usize> {
        self.sign_classes(i, Sign::Neg, ClassKind::N)
    }

    fn sign_classes(&self, i: usize, sign: Sign, own: ClassKind) -> Vec<usize> {
        (0..self.k())
            .filter(|&j| {
                if j == i {
                    self.kinds[i] == own
                } else {
                    self.inter_sign[i][j] == Some(sign)
                }
            })
            .collect()
    }

    /// Class index of every vertex.
    pub fn class_of(&self) -> Vec<usize> {
        let mut c = vec![0; self.n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                c[v] = i;
            }
        }
        c
    }
}

/// `N+(u) \ {v} = N+(v) \ {u}` and the same for `N-`.
pub fn same_type(g: &SignedGraph, u: usize, v: usize) -> bool {
    let eq = |a: &[usize], b: &[usize]| {
        a.iter()
            .filter(|&&x| x != v)
            .eq(b.iter().filter(|&&x| x != u))
    };
    eq(g.pos_neighbors(u), g.pos_neighbors(v)) && eq(g.neg_neighbors(u), g.neg_neighbors(v))
}

pub fn snd_partition(g: &SignedGraph) -> Result<SndPartition> {
    let n = g.n();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        match classes.iter_mut().find(|c| same_type(g, c[0], v)) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    // Comparing with a representative is only sound if the relation is
    // transitive; check every pair.
    for c in &classes {
        for (a, &u) in c.iter().enumerate() {
            for &v in &c[a + 1..] {
                if !same_type(g, u, v) {
                    return Err(Error::InternalInconsistency(format!(
                        "vertices {u} and {v} share a class but differ"
                    )));
                }
            }
        }
    }
    let kinds = classes
        .iter()
        .map(|c| class_kind(g, c))
        .collect::<Result<Vec<_>>>()?;
    let k = classes.len();
    let mut inter_sign = vec![vec![None; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let s = g.sign(classes[i][0], classes[j][0]);
            for &u in &classes[i] {
                for &v in &classes[j] {
                    if g.sign(u, v) != s {
                        return Err(Error::InternalInconsistency(format!(
                            "classes {i} and {j} are joined by mixed signs"
                        )));
                    }
                }
            }
            inter_sign[i][j] = s;
            inter_sign[j][i] = s;
        }
    }
    Ok(SndPartition {
        n,
        classes,
        kinds,
        inter_sign,
    })
}

fn class_kind(g: &SignedGraph, c: &[usize]) -> Result<ClassKind> {
    if c.len() == 1 {
        return Ok(ClassKind::I);
    }
    let first = g.sign(c[0], c[1]);
    for (a, &u) in c.iter().enumerate() {
        for &v in &c[a + 1..] {
            if g.sign(u, v) != first {
                return Err(Error::InternalInconsistency(format!(
                    "class containing {u} and {v} is neither a clique nor independent"
                )));
            }
        }
    }
    Ok(match first {
        Some(Sign::Pos) => ClassKind::P,
        Some(Sign::Neg) => ClassKind::N,
        None => ClassKind::I,
    })
}
