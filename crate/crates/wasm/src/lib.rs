//! Browser bindings. Every export takes and returns strings; results are
//! JSON documents, errors are thrown as JS `Error`s.
//!
//! The `*_json` functions hold the logic so they can be tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use sak_core::complete::closed_form;
use sak_core::gen::{gen_complete, CompleteMode};
use sak_core::io::{parse_set, parse_signed_auto, write_signed_text};
use sak_core::solver::dispatch::{solve as dispatch, SolveOptions, StrategyChoice};
use sak_core::{is_offensive_alliance, Condition, SignedGraph};

/// Graph as drawn by the page: 0-based endpoints, labels always present.
#[derive(Serialize)]
struct Drawing {
    labels: Vec<String>,
    pos: Vec<[usize; 2]>,
    neg: Vec<[usize; 2]>,
}

impl Drawing {
    fn new(g: &SignedGraph) -> Self {
        let arr = |es: Vec<(usize, usize)>| es.into_iter().map(|(u, v)| [u, v]).collect();
        Drawing {
            labels: g.labels().to_vec(),
            pos: arr(g.pos_edges()),
            neg: arr(g.neg_edges()),
        }
    }
}

#[derive(Serialize)]
struct Solved {
    graph: Drawing,
    strategy: String,
    optimum: Option<usize>,
    witness: Vec<usize>,
    phases: Vec<String>,
}

#[derive(Serialize)]
struct Failure {
    vertex: usize,
    failed: Vec<Condition>,
    neg_in: usize,
    pos_in: usize,
    pos_out: usize,
}

#[derive(Serialize)]
struct Checked {
    accepted: bool,
    boundary: Vec<usize>,
    violations: Vec<Failure>,
}

#[derive(Serialize)]
struct Explored {
    text: String,
    optimum: usize,
    witness: Vec<usize>,
    case: String,
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serialises")
}

fn err(e: sak_core::Error) -> String {
    e.to_string()
}

pub fn graph_json(graph_text: &str) -> Result<String, String> {
    Ok(json(&Drawing::new(&parse_signed_auto(graph_text).map_err(err)?)))
}

pub fn solve_json(graph_text: &str, strategy: &str) -> Result<String, String> {
    let g = parse_signed_auto(graph_text).map_err(err)?;
    let opts = SolveOptions {
        strategy: strategy.parse::<StrategyChoice>().map_err(err)?,
        ..SolveOptions::default()
    };
    let d = dispatch(&g, &opts).map_err(err)?;
    let r = d.outcome.as_found();
    Ok(json(&Solved {
        graph: Drawing::new(&g),
        strategy: r.map(|r| r.strategy.name().to_string()).unwrap_or_default(),
        optimum: r.map(|r| r.optimum),
        witness: r.map(|r| r.set().to_vec()).unwrap_or_default(),
        phases: d
            .phases
            .iter()
            .map(|p| if p.note.is_empty() { p.name.clone() } else { format!("{} ({})", p.name, p.note) })
            .collect(),
    }))
}

/// `set` holds whitespace-separated labels.
pub fn verify_json(graph_text: &str, set: &str) -> Result<String, String> {
    let g = parse_signed_auto(graph_text).map_err(err)?;
    let s = parse_set(set, &g).map_err(err)?;
    let cert = is_offensive_alliance(&g, &s).map_err(err)?;
    Ok(json(&Checked {
        accepted: cert.accepted(),
        boundary: cert.boundary.to_vec(),
        violations: cert
            .violations
            .iter()
            .map(|v| Failure {
                vertex: v.vertex,
                failed: v.failed.clone(),
                neg_in: v.profile.neg_in,
                pos_in: v.profile.pos_in,
                pos_out: v.profile.pos_out,
            })
            .collect(),
    }))
}

/// `parts` is a comma-separated list of part sizes; `mode` is `balanced`
/// or `anti`.
pub fn complete_explorer_json(parts: &str, mode: &str) -> Result<String, String> {
    let parts: Vec<usize> = parts
        .split(',')
        .map(|p| p.trim().parse().map_err(|_| format!("bad part size `{}`", p.trim())))
        .collect::<Result<_, _>>()?;
    if parts.iter().sum::<usize>() > 60 {
        return Err("at most 60 vertices in the demo".into());
    }
    let mode = match mode {
        "balanced" => CompleteMode::Balanced,
        "anti" => CompleteMode::AntiBalanced,
        m => return Err(format!("mode must be `balanced` or `anti`, not `{m}`")),
    };
    let g = gen_complete(&parts, mode).map_err(err)?;
    let cf = closed_form(&g)
        .map_err(err)?
        .ok_or("generated graph has no closed form")?;
    Ok(json(&Explored {
        text: write_signed_text(&g),
        optimum: cf.optimum,
        witness: cf.witness.to_vec(),
        case: format!("{:?}", cf.case),
    }))
}

#[wasm_bindgen]
pub fn graph(graph_text: &str) -> Result<String, JsError> {
    graph_json(graph_text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn solve(graph_text: &str, strategy: &str) -> Result<String, JsError> {
    solve_json(graph_text, strategy).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify(graph_text: &str, set: &str) -> Result<String, JsError> {
    verify_json(graph_text, set).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn complete_explorer(parts: &str, mode: &str) -> Result<String, JsError> {
    complete_explorer_json(parts, mode).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use sak_core::samples::seven_signed;
    use serde_json::Value;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn solves_the_seven_vertex_example() {
        let text = write_signed_text(&seven_signed());
        let v = parse(&solve_json(&text, "brute").unwrap());
        assert_eq!(v["optimum"], 4);
        assert_eq!(v["witness"].as_array().unwrap().len(), 4);
        assert_eq!(v["graph"]["labels"][0], "v1");
        assert!(solve_json(&text, "closed").is_err());
        assert!(solve_json("p sg 1 0 0\nbad\n", "auto").is_err());
    }

    #[test]
    fn page_sample_is_the_seven_vertex_example() {
        let page = include_str!("../www/index.html");
        let open = "<textarea id=\"graph\">";
        let start = page.find(open).unwrap() + open.len();
        let end = start + page[start..].find("</textarea>").unwrap();
        assert_eq!(parse_signed_auto(&page[start..end]).unwrap(), seven_signed());
        let d = parse(&graph_json(&page[start..end]).unwrap());
        assert_eq!(d["neg"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn verify_explains() {
        let text = write_signed_text(&seven_signed());
        let ok = parse(&verify_json(&text, "v1 v3 v4 v5").unwrap());
        assert_eq!(ok["accepted"], true);
        let no = parse(&verify_json(&text, "v1 v2 v3").unwrap());
        assert_eq!(no["accepted"], false);
        assert_eq!(no["violations"][0]["vertex"], 3);
    }

    #[test]
    fn explorer_matches_solver() {
        for (parts, mode) in [("3,3", "anti"), ("3,2,1", "balanced"), ("4,1", "anti")] {
            let v = parse(&complete_explorer_json(parts, mode).unwrap());
            let s = parse(&solve_json(v["text"].as_str().unwrap(), "brute").unwrap());
            assert_eq!(v["optimum"], s["optimum"], "{parts} {mode}");
        }
        assert!(complete_explorer_json("3,x", "anti").is_err());
        assert!(complete_explorer_json("3", "both").is_err());
    }
}
