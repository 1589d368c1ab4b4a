//! Strategy selection shared by the CLI and the browser demo.

use serde::{Deserialize, Serialize};

use crate::complete::closed_form;
use crate::domino::{dp_solve, validate_domino, DominoDecomposition};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::snd::{min_offensive_alliance_ilp, snd_partition};
use crate::solver::{
    min_offensive_alliance_branching, small_alliance_check, BruteForce, Outcome, SolveResult,
    Strategy,
};
use crate::vset::VertexSet;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StrategyChoice {
    /// Size-1/2 check, then closed form, then the integer program when the
    /// diversity is small, else exhaustive search.
    #[default]
    Auto,
    Brute,
    Branch,
    Closed,
    Ilp,
    Dp,
}

impl std::str::FromStr for StrategyChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => StrategyChoice::Auto,
            "brute" => StrategyChoice::Brute,
            "branch" => StrategyChoice::Branch,
            "closed" => StrategyChoice::Closed,
            "ilp" => StrategyChoice::Ilp,
            "dp" => StrategyChoice::Dp,
            _ => return Err(Error::StrategyUnavailable(format!("unknown strategy `{s}`"))),
        })
    }
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub strategy: StrategyChoice,
    pub budget: Option<usize>,
    /// Largest class count for which `auto` uses the integer program.
    pub snd_threshold: usize,
    pub threads: usize,
    pub decomposition: Option<DominoDecomposition>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            strategy: StrategyChoice::Auto,
            budget: None,
            snd_threshold: 8,
            threads: 1,
            decomposition: None,
        }
    }
}

/// One step of a run.
#[derive(Debug, Clone, Serialize)]
pub struct Phase {
    pub name: String,
    pub millis: f64,
    pub note: String,
}

#[derive(Debug, Clone)]
pub struct Dispatched {
    pub outcome: Outcome,
    pub phases: Vec<Phase>,
}

/// Milliseconds since the returned clock was started. `wasm32-unknown-unknown`
/// has no monotonic clock in std, so timings there read 0.
#[cfg(not(target_arch = "wasm32"))]
fn clock() -> impl FnOnce() -> f64 {
    let start = std::time::Instant::now();
    move || start.elapsed().as_secs_f64() * 1e3
}

#[cfg(target_arch = "wasm32")]
fn clock() -> impl FnOnce() -> f64 {
    || 0.0
}

fn timed<T>(phases: &mut Vec<Phase>, name: &str, f: impl FnOnce() -> T) -> T {
    let stop = clock();
    let out = f();
    phases.push(Phase {
        name: name.into(),
        millis: stop(),
        note: String::new(),
    });
    out
}

fn note(phases: &mut [Phase], text: String) {
    if let Some(p) = phases.last_mut() {
        p.note = text;
    }
}

/// Solves under `opts`; every witness is re-verified before it is returned.
pub fn solve(g: &SignedGraph, opts: &SolveOptions) -> Result<Dispatched> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut phases = Vec::new();
    let outcome = match opts.strategy {
        StrategyChoice::Brute => timed(&mut phases, "brute", || brute(g, opts))?,
        StrategyChoice::Branch => {
            timed(&mut phases, "branch", || min_offensive_alliance_branching(g, opts.budget))?
        }
        StrategyChoice::Closed => {
            let cf = timed(&mut phases, "closed", || closed_form(g))?.ok_or_else(|| {
                Error::StrategyUnavailable("graph is not an (anti-)balanced complete graph".into())
            })?;
            note(&mut phases, format!("{:?}", cf.case));
            Outcome::Found(SolveResult::verified(g, cf.witness, Strategy::Closed, 0)?)
        }
        StrategyChoice::Ilp => Outcome::Found(timed(&mut phases, "ilp", || min_offensive_alliance_ilp(g))?),
        StrategyChoice::Dp => {
            let d = opts.decomposition.as_ref().ok_or_else(|| {
                Error::StrategyUnavailable("dp needs a decomposition file".into())
            })?;
            let w = timed(&mut phases, "validate", || validate_domino(g, d))?;
            note(&mut phases, format!("width {w}"));
            Outcome::Found(timed(&mut phases, "dp", || dp_solve(g, d))?)
        }
        StrategyChoice::Auto => auto(g, opts, &mut phases)?,
    };
    Ok(Dispatched {
        outcome: outcome.apply_budget(opts.budget),
        phases,
    })
}

fn brute(g: &SignedGraph, opts: &SolveOptions) -> Result<Outcome> {
    BruteForce {
        budget: opts.budget,
        prune: true,
        threads: opts.threads.max(1),
    }
    .solve(g)
}

fn auto(g: &SignedGraph, opts: &SolveOptions, phases: &mut Vec<Phase>) -> Result<Outcome> {
    let small = timed(phases, "small", || small_alliance_check(g));
    let pick = small
        .size1
        .map(|v| vec![v])
        .or(small.size2.map(|(u, v)| vec![u, v]));
    if let Some(vs) = pick {
        note(phases, format!("optimum {}", vs.len()));
        let s = VertexSet::from_iter(g.n(), vs);
        return Ok(Outcome::Found(SolveResult::verified(g, s, Strategy::Small, 1)?));
    }
    if let Some(cf) = timed(phases, "closed", || closed_form(g))? {
        note(phases, format!("{:?}", cf.case));
        return Ok(Outcome::Found(SolveResult::verified(g, cf.witness, Strategy::Closed, 0)?));
    }
    let p = timed(phases, "snd", || snd_partition(g))?;
    note(phases, format!("{} classes", p.k()));
    if p.k() <= opts.snd_threshold {
        return Ok(Outcome::Found(timed(phases, "ilp", || min_offensive_alliance_ilp(g))?));
    }
    timed(phases, "brute", || brute(g, opts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::seven_signed;
    use crate::gen::{gen_complete, CompleteMode};

    fn run(g: &SignedGraph, strategy: StrategyChoice) -> Result<Outcome> {
        let opts = SolveOptions {
            strategy,
            ..SolveOptions::default()
        };
        solve(g, &opts).map(|d| d.outcome)
    }

    #[test]
    fn auto_routes() {
        let k5 = gen_complete(&[5], CompleteMode::AntiBalanced).unwrap();
        let r = run(&k5, StrategyChoice::Auto).unwrap().found().unwrap();
        assert_eq!((r.optimum, r.strategy), (1, Strategy::Small));

        let g = gen_complete(&[3, 2, 1], CompleteMode::Balanced).unwrap();
        let r = run(&g, StrategyChoice::Auto).unwrap().found().unwrap();
        assert_eq!((r.optimum, r.strategy), (3, Strategy::Closed));

        let r = run(&seven_signed(), StrategyChoice::Auto).unwrap().found().unwrap();
        assert_eq!((r.optimum, r.strategy), (4, Strategy::Ilp));
    }

    #[test]
    fn unavailable_strategies() {
        assert!(matches!(
            run(&seven_signed(), StrategyChoice::Dp),
            Err(Error::StrategyUnavailable(_))
        ));
        assert!(matches!(
            run(&seven_signed(), StrategyChoice::Closed),
            Err(Error::StrategyUnavailable(_))
        ));
        assert!("fast".parse::<StrategyChoice>().is_err());
    }

    #[test]
    fn budget_turns_into_no() {
        let opts = SolveOptions {
            strategy: StrategyChoice::Ilp,
            budget: Some(3),
            ..SolveOptions::default()
        };
        assert!(!solve(&seven_signed(), &opts).unwrap().outcome.is_yes());
    }
}
