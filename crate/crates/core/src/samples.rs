//! The two seven-vertex example graphs used throughout the docs and tests.
//!
//! Vertices `v1..v7` are stored at indices `0..6` and labelled `v1..v7`.

use crate::graph::{SignedGraph, UnsignedGraph};

fn labels() -> Vec<String> {
    (1..=7).map(|i| format!("v{i}")).collect()
}

const EDGES: [(usize, usize); 10] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 7),
    (5, 6),
    (6, 7),
];

/// Unsigned example: `{v1,v2,v3}` is a minimum offensive alliance.
pub fn seven_unsigned() -> UnsignedGraph {
    let edges: Vec<_> = EDGES.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    UnsignedGraph::new(7, &edges)
        .expect("static edge list")
        .with_labels(labels())
}

/// Signed version of the same graph: `{v1,v3,v4,v5}` is a minimum
/// offensive alliance of size 4.
pub fn seven_signed() -> SignedGraph {
    let pos = [(1, 3), (1, 4), (2, 5), (3, 4), (3, 5)];
    let neg = [(1, 2), (2, 3), (4, 7), (5, 6), (6, 7)];
    let shift = |e: &[(usize, usize)]| e.iter().map(|&(u, v)| (u - 1, v - 1)).collect::<Vec<_>>();
    SignedGraph::from_lists(7, &shift(&pos), &shift(&neg))
        .expect("static edge list")
        .with_labels(labels())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_signed_shape() {
        let g = seven_signed();
        assert_eq!(g.n(), 7);
        assert_eq!(g.num_pos_edges(), 5);
        assert_eq!(g.num_neg_edges(), 5);
        let u = seven_unsigned();
        assert_eq!(u.edges().len(), 10);
    }
}
