//! Upper bounds on the diversity from a vertex cover or from a deletion set
//! to an (anti-)balanced complete graph.
//!
//! Outside a cover `C`, vertices are independent and are determined by the
//! sign (or absence) of their edge to each cover vertex: at most `3^|C|`
//! types, plus the cover vertices themselves. The deletion-set bound works
//! the same way per part of the remaining complete graph.

use serde::{Deserialize, Serialize};

use super::partition::snd_partition;
use crate::complete::classify_complete;
use crate::error::{Error, Result};
use crate::gen::CompleteMode;
use crate::graph::SignedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SndCertificate {
    VertexCover { cover: Vec<usize> },
    /// `G - deletion` is a complete graph of the given family.
    Deletion { deletion: Vec<usize>, mode: CompleteMode },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub certificate: SndCertificate,
    /// Number of parts of the remaining complete graph (1 for covers).
    pub parts: usize,
    pub bound: u128,
    pub measured: usize,
}

pub fn snd_upper_bounds(g: &SignedGraph, cert: &SndCertificate) -> Result<BoundReport> {
    let n = g.n();
    let in_set = |set: &[usize]| -> Result<Vec<bool>> {
        let mut mark = vec![false; n];
        for &v in set {
            *mark.get_mut(v).ok_or_else(|| {
                Error::InvalidCertificate(format!("vertex {v} out of range"))
            })? = true;
        }
        Ok(mark)
    };
    let (size, parts) = match cert {
        SndCertificate::VertexCover { cover } => {
            let mark = in_set(cover)?;
            if let Some((u, v)) = g
                .pos_edges()
                .into_iter()
                .chain(g.neg_edges())
                .find(|&(u, v)| !mark[u] && !mark[v])
            {
                return Err(Error::InvalidCertificate(format!(
                    "edge {{{u}, {v}}} is not covered"
                )));
            }
            (mark.iter().filter(|&&m| m).count(), 1usize)
        }
        SndCertificate::Deletion { deletion, mode } => {
            let mark = in_set(deletion)?;
            let keep: Vec<usize> = (0..n).filter(|&v| !mark[v]).collect();
            if keep.is_empty() {
                return Err(Error::InvalidCertificate("nothing remains after deletion".into()));
            }
            let c = classify_complete(&g.induced(&keep));
            let parts = match mode {
                CompleteMode::Balanced => c.balanced_parts(),
                CompleteMode::AntiBalanced => c.anti_balanced_parts(),
            }
            .ok_or_else(|| {
                Error::InvalidCertificate(format!("remainder is not a {mode:?} complete graph"))
            })?;
            (n - keep.len(), parts.len())
        }
    };
    let bound = parts as u128 * 3u128.pow(size as u32) + size as u128;
    let measured = snd_partition(g)?.k();
    if measured as u128 > bound {
        return Err(Error::InternalInconsistency(format!(
            "diversity {measured} exceeds certified bound {bound}"
        )));
    }
    Ok(BoundReport {
        certificate: cert.clone(),
        parts,
        bound,
        measured,
    })
}
