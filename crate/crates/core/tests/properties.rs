use proptest::prelude::*;

use sak_core::domino::{dp_solve, random_domino, validate_domino};
use sak_core::io::{
    parse_decomposition, parse_set, parse_signed_json, parse_signed_text, write_decomposition,
    write_set, write_signed_json, write_signed_text,
};
use sak_core::solver::dispatch::{solve, SolveOptions, StrategyChoice};
use sak_core::solver::BruteForce;
use sak_core::alliance::accepts;
use sak_core::{Sign, SignedGraph, VertexSet};

/// Graph on `n` vertices; each pair is absent, positive or negative.
fn signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u8..3, n * (n - 1) / 2).prop_map(move |cells| {
            let mut edges = Vec::new();
            let mut it = cells.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    match it.next().unwrap() {
                        1 => edges.push((u, v, Sign::Pos)),
                        2 => edges.push((u, v, Sign::Neg)),
                        _ => {}
                    }
                }
            }
            SignedGraph::new(n, &edges).unwrap()
        })
    })
}

fn oracle(g: &SignedGraph) -> usize {
    BruteForce {
        budget: None,
        prune: false,
        threads: 1,
    }
    .solve(g)
    .unwrap()
    .optimum()
    .expect("the whole vertex set is always an alliance")
}

fn run(g: &SignedGraph, strategy: StrategyChoice, budget: Option<usize>) -> Option<usize> {
    let opts = SolveOptions {
        strategy,
        budget,
        ..SolveOptions::default()
    };
    let d = solve(g, &opts).unwrap();
    if let Some(r) = d.outcome.as_found() {
        assert!(r.witness.accepted());
        assert_eq!(r.set().len(), r.optimum);
    }
    d.outcome.optimum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_and_json_round_trip(g in signed_graph(12)) {
        prop_assert_eq!(parse_signed_text(&write_signed_text(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_signed_json(&write_signed_json(&g)).unwrap(), g);
    }

    #[test]
    fn set_round_trip(g in signed_graph(12), bits in any::<u16>()) {
        let s = VertexSet::from_iter(g.n(), (0..g.n()).filter(|&v| bits >> v & 1 == 1));
        prop_assert_eq!(parse_set(&write_set(&g, &s), &g).unwrap(), s);
    }

    #[test]
    fn strategies_agree_with_oracle(g in signed_graph(9)) {
        let want = oracle(&g);
        for strategy in [StrategyChoice::Auto, StrategyChoice::Brute, StrategyChoice::Branch, StrategyChoice::Ilp] {
            prop_assert_eq!(run(&g, strategy, None), Some(want), "{:?}", strategy);
        }
    }

    #[test]
    fn budget_threshold(g in signed_graph(9)) {
        let opt = oracle(&g);
        prop_assert_eq!(run(&g, StrategyChoice::Branch, Some(opt)), Some(opt));
        prop_assert_eq!(run(&g, StrategyChoice::Brute, Some(opt - 1)), None);
        prop_assert_eq!(run(&g, StrategyChoice::Ilp, Some(opt - 1)), None);
    }

    /// No set smaller than the optimum is an alliance.
    #[test]
    fn optimum_is_minimal(g in signed_graph(8)) {
        let opt = oracle(&g);
        for mask in 1u32..1 << g.n() {
            if (mask.count_ones() as usize) < opt {
                let s = VertexSet::from_iter(g.n(), (0..g.n()).filter(|&v| mask >> v & 1 == 1));
                prop_assert!(!accepts(&g, &s));
            }
        }
    }

    #[test]
    fn dp_on_random_domino(seed in any::<u64>(), nodes in 1usize..7) {
        let (g, d) = random_domino(nodes, 4, 0.5, 0.5, seed).unwrap();
        prop_assert!(validate_domino(&g, &d).is_ok());
        let text = write_decomposition(&d, &g);
        prop_assert_eq!(&parse_decomposition(&text, &g).unwrap(), &d);
        prop_assume!(g.n() <= 14);
        prop_assert_eq!(dp_solve(&g, &d).unwrap().optimum, oracle(&g));
    }
}
