//! Text and JSON file formats.
//!
//! All formats number vertices from 1. Graph files may name vertices with
//! `v <index> <label>` lines; unnamed vertices are labelled by their
//! index. Labels are single whitespace-free tokens.
//!
//! ```text
//! c signed graph: header, then one edge per line
//! p sg 3 1 1
//! v 1 a
//! 1 2 +
//! 2 3 -
//! ```

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::domino::DominoDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, UnsignedGraph};
use crate::reductions::{Hypergraph, ReductionInstance, ReductionKind};
use crate::vset::VertexSet;

/// Lines with their 1-based numbers, comments and blanks removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.first() {
            None => None,
            Some(&"c") => None,
            Some(t) if t.starts_with('#') => None,
            Some(_) => Some((i + 1, toks)),
        }
    })
}

fn num(line: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found `{tok}`")))
}

/// A 1-based vertex token, returned 0-based.
fn vertex(line: usize, tok: &str, n: usize) -> Result<usize> {
    let v = num(line, tok, "a vertex number")?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn header(toks: &[&str], line: usize, kind: &str, fields: usize) -> Result<Vec<usize>> {
    if toks.len() != 2 + fields || toks[0] != "p" || toks[1] != kind {
        return Err(Error::parse(
            line,
            format!("expected header `p {kind}` with {fields} numbers"),
        ));
    }
    toks[2..].iter().map(|t| num(line, t, "a count")).collect()
}

/// Collects `v <i> <label>` lines into a full label vector.
struct Labels {
    n: usize,
    named: Vec<Option<String>>,
    seen: HashMap<String, usize>,
}

impl Labels {
    fn new(n: usize) -> Self {
        Labels {
            n,
            named: vec![None; n],
            seen: HashMap::new(),
        }
    }

    fn add(&mut self, line: usize, toks: &[&str]) -> Result<()> {
        if toks.len() != 3 {
            return Err(Error::parse(line, "expected `v <index> <label>`"));
        }
        let v = vertex(line, toks[1], self.n)?;
        if self.named[v].is_some() {
            return Err(Error::parse(line, format!("vertex {} named twice", v + 1)));
        }
        self.named[v] = Some(toks[2].to_string());
        Ok(())
    }

    fn finish(mut self) -> Result<Vec<String>> {
        let labels: Vec<String> = (0..self.n)
            .map(|v| self.named[v].take().unwrap_or_else(|| (v + 1).to_string()))
            .collect();
        for (v, l) in labels.iter().enumerate() {
            if let Some(u) = self.seen.insert(l.clone(), v) {
                return Err(Error::parse(
                    0,
                    format!("label `{l}` used by vertices {} and {}", u + 1, v + 1),
                ));
            }
        }
        Ok(labels)
    }
}

fn write_labels(out: &mut String, labels: &[String]) {
    let default = labels.iter().enumerate().all(|(i, l)| *l == (i + 1).to_string());
    if !default {
        for (i, l) in labels.iter().enumerate() {
            let _ = writeln!(out, "v {} {l}", i + 1);
        }
    }
}

/// Parses the signed edge-list format. The header's edge counts must match
/// the number of distinct edges.
pub fn parse_signed_text(text: &str) -> Result<SignedGraph> {
    let mut lines = content_lines(text);
    let (hl, toks) = lines.next().ok_or_else(|| Error::parse(1, "missing `p sg` header"))?;
    let h = header(&toks, hl, "sg", 3)?;
    let (n, mp, mn) = (h[0], h[1], h[2]);
    let mut labels = Labels::new(n);
    let mut edges = Vec::new();
    for (line, toks) in lines {
        if toks[0] == "v" {
            labels.add(line, &toks)?;
            continue;
        }
        if toks.len() != 3 {
            return Err(Error::parse(line, "expected `<u> <v> +|-`"));
        }
        let u = vertex(line, toks[0], n)?;
        let v = vertex(line, toks[1], n)?;
        let s = match toks[2] {
            "+" => Sign::Pos,
            "-" => Sign::Neg,
            t => return Err(Error::parse(line, format!("sign must be + or -, found `{t}`"))),
        };
        edges.push((u, v, s));
    }
    let g = SignedGraph::new(n, &edges)?;
    if g.num_pos_edges() != mp || g.num_neg_edges() != mn {
        return Err(Error::parse(
            hl,
            format!(
                "header declares {mp}+ {mn}- edges, found {}+ {}-",
                g.num_pos_edges(),
                g.num_neg_edges()
            ),
        ));
    }
    Ok(g.with_labels(labels.finish()?))
}

pub fn write_signed_text(g: &SignedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p sg {} {} {}", g.n(), g.num_pos_edges(), g.num_neg_edges());
    write_labels(&mut out, g.labels());
    for (u, v) in g.pos_edges() {
        let _ = writeln!(out, "{} {} +", u + 1, v + 1);
    }
    for (u, v) in g.neg_edges() {
        let _ = writeln!(out, "{} {} -", u + 1, v + 1);
    }
    out
}

/// JSON mirror of the text format (1-based edge endpoints).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedGraphJson {
    pub n: usize,
    pub pos: Vec<[usize; 2]>,
    pub neg: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&SignedGraph> for SignedGraphJson {
    fn from(g: &SignedGraph) -> Self {
        let one = |es: Vec<(usize, usize)>| es.into_iter().map(|(u, v)| [u + 1, v + 1]).collect();
        SignedGraphJson {
            n: g.n(),
            pos: one(g.pos_edges()),
            neg: one(g.neg_edges()),
            labels: (!g.has_default_labels()).then(|| g.labels().to_vec()),
        }
    }
}

impl SignedGraphJson {
    pub fn to_graph(&self) -> Result<SignedGraph> {
        let n = self.n;
        let zero = |es: &[[usize; 2]]| -> Result<Vec<(usize, usize)>> {
            es.iter()
                .map(|&[u, v]| {
                    for x in [u, v] {
                        if x == 0 || x > n {
                            return Err(Error::parse(0, format!("vertex {x} outside 1..={n}")));
                        }
                    }
                    Ok((u - 1, v - 1))
                })
                .collect()
        };
        let g = SignedGraph::from_lists(n, &zero(&self.pos)?, &zero(&self.neg)?)?;
        match &self.labels {
            None => Ok(g),
            Some(l) if l.len() == n => {
                let mut seen = HashMap::new();
                for (i, x) in l.iter().enumerate() {
                    if x.is_empty() || x.contains(char::is_whitespace) {
                        return Err(Error::parse(0, format!("label `{x}` is not a single token")));
                    }
                    if seen.insert(x.as_str(), i).is_some() {
                        return Err(Error::parse(0, format!("label `{x}` is repeated")));
                    }
                }
                Ok(g.with_labels(l.clone()))
            }
            Some(l) => Err(Error::parse(0, format!("{} labels for {n} vertices", l.len()))),
        }
    }
}

pub fn parse_signed_json(text: &str) -> Result<SignedGraph> {
    let j: SignedGraphJson = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    j.to_graph()
}

pub fn write_signed_json(g: &SignedGraph) -> String {
    serde_json::to_string(&SignedGraphJson::from(g)).expect("plain data serialises")
}

/// JSON when the first non-blank character is `{`, text otherwise.
pub fn parse_signed_auto(text: &str) -> Result<SignedGraph> {
    if text.trim_start().starts_with('{') {
        parse_signed_json(text)
    } else {
        parse_signed_text(text)
    }
}

/// `p edge <n> <m>` followed by `e <u> <v>` lines.
pub fn parse_unsigned_dimacs(text: &str) -> Result<UnsignedGraph> {
    let mut lines = content_lines(text);
    let (hl, toks) = lines.next().ok_or_else(|| Error::parse(1, "missing `p edge` header"))?;
    let h = header(&toks, hl, "edge", 2)?;
    let (n, m) = (h[0], h[1]);
    let mut labels = Labels::new(n);
    let mut edges = Vec::new();
    for (line, toks) in lines {
        match toks[0] {
            "v" => labels.add(line, &toks)?,
            "e" if toks.len() == 3 => {
                edges.push((vertex(line, toks[1], n)?, vertex(line, toks[2], n)?));
            }
            _ => return Err(Error::parse(line, "expected `e <u> <v>`")),
        }
    }
    let g = UnsignedGraph::new(n, &edges)?;
    if g.edges().len() != m {
        return Err(Error::parse(
            hl,
            format!("header declares {m} edges, found {}", g.edges().len()),
        ));
    }
    Ok(g.with_labels(labels.finish()?))
}

pub fn write_unsigned_dimacs(g: &UnsignedGraph) -> String {
    let mut out = String::new();
    let edges = g.edges();
    let _ = writeln!(out, "p edge {} {}", g.n(), edges.len());
    write_labels(&mut out, g.labels());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// `p hs <n> <m>` followed by `e <v…>` lines.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = content_lines(text);
    let (hl, toks) = lines.next().ok_or_else(|| Error::parse(1, "missing `p hs` header"))?;
    let h = header(&toks, hl, "hs", 2)?;
    let (n, m) = (h[0], h[1]);
    let mut labels = Labels::new(n);
    let mut edges = Vec::new();
    for (line, toks) in lines {
        match toks[0] {
            "v" => labels.add(line, &toks)?,
            "e" => edges.push(
                toks[1..]
                    .iter()
                    .map(|t| vertex(line, t, n))
                    .collect::<Result<Vec<_>>>()?,
            ),
            _ => return Err(Error::parse(line, "expected `e <v…>`")),
        }
    }
    if edges.len() != m {
        return Err(Error::parse(
            hl,
            format!("header declares {m} hyperedges, found {}", edges.len()),
        ));
    }
    Ok(Hypergraph::new(n, edges)?.with_labels(labels.finish()?))
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p hs {} {}", h.n(), h.edges().len());
    write_labels(&mut out, h.labels());
    for e in h.edges() {
        out.push('e');
        for v in e {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    out
}

/// `td <#nodes> <width+1> <n>`, bag lines `b <id> <label…>`, tree edges
/// `<id> <id>` and a root line `r <id>`; node ids are 1-based and bag
/// members are vertex labels of `g`. Without a root line node 1 is the
/// root.
pub fn parse_decomposition(text: &str, g: &SignedGraph) -> Result<DominoDecomposition> {
    let mut lines = content_lines(text);
    let (hl, toks) = lines.next().ok_or_else(|| Error::parse(1, "missing `td` header"))?;
    if toks.len() != 4 || toks[0] != "td" {
        return Err(Error::parse(hl, "expected `td <#nodes> <width+1> <n>`"));
    }
    let nodes = num(hl, toks[1], "a node count")?;
    let size = num(hl, toks[2], "a bag size")?;
    let n = num(hl, toks[3], "a vertex count")?;
    if n != g.n() {
        return Err(Error::parse(hl, format!("decomposition is for {n} vertices, graph has {}", g.n())));
    }
    let index: HashMap<&str, usize> = g.labels().iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let mut bags: Vec<Option<Vec<usize>>> = vec![None; nodes];
    let mut edges = Vec::new();
    let mut root = None;
    for (line, toks) in lines {
        match toks[0] {
            "b" => {
                if toks.len() < 2 {
                    return Err(Error::parse(line, "expected `b <id> <label…>`"));
                }
                let id = vertex(line, toks[1], nodes)?;
                if bags[id].is_some() {
                    return Err(Error::parse(line, format!("bag {} given twice", id + 1)));
                }
                let bag = toks[2..]
                    .iter()
                    .map(|t| index.get(t).copied().ok_or_else(|| Error::UnknownLabel(t.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                if bag.len() > size {
                    return Err(Error::parse(line, format!("bag larger than declared size {size}")));
                }
                bags[id] = Some(bag);
            }
            "r" if toks.len() == 2 => root = Some(vertex(line, toks[1], nodes)?),
            _ if toks.len() == 2 => edges.push((vertex(line, toks[0], nodes)?, vertex(line, toks[1], nodes)?)),
            _ => return Err(Error::parse(line, "expected a bag, tree edge or root line")),
        }
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::parse(0, format!("bag {} missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    DominoDecomposition::new(bags, &edges, root.unwrap_or(0))
}

pub fn write_decomposition(d: &DominoDecomposition, g: &SignedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "td {} {} {}", d.num_nodes(), d.width() + 1, g.n());
    for (t, bag) in d.bags().iter().enumerate() {
        let _ = write!(out, "b {}", t + 1);
        for &v in bag {
            let _ = write!(out, " {}", g.label(v));
        }
        out.push('\n');
    }
    for &(a, b) in d.tree_edges() {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    let _ = writeln!(out, "r {}", d.root() + 1);
    out
}

/// Whitespace-separated vertex labels; `c` comment lines are skipped.
pub fn parse_set(text: &str, g: &SignedGraph) -> Result<VertexSet> {
    let mut s = VertexSet::new(g.n());
    for (_, toks) in content_lines(text) {
        for t in toks {
            let v = g.index_of(t).ok_or_else(|| Error::UnknownLabel(t.to_string()))?;
            s.insert(v);
        }
    }
    Ok(s)
}

pub fn write_set(g: &SignedGraph, s: &VertexSet) -> String {
    let mut out = g.format_set(s).join(" ");
    out.push('\n');
    out
}

/// Witness file written next to a constructed instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSidecar {
    pub schema: u32,
    pub budget: usize,
    /// Planted alliance by label; absent when the source instance has no
    /// solution within its parameter.
    pub witness: Option<Vec<String>>,
    pub groups: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub source: serde_json::Value,
}

impl WitnessSidecar {
    pub fn new(inst: &ReductionInstance, witness: Option<&VertexSet>) -> Self {
        let g = &inst.graph;
        let mut groups: BTreeMap<String, Vec<String>> = inst
            .groups
            .iter()
            .map(|(k, vs)| (k.clone(), vs.iter().map(|&v| g.label(v).to_string()).collect()))
            .collect();
        groups.insert(
            "source".into(),
            inst.source_vertices.iter().map(|&v| g.label(v).to_string()).collect(),
        );
        WitnessSidecar {
            schema: 1,
            budget: inst.budget,
            witness: witness.map(|s| g.format_set(s)),
            groups,
            source: serde_json::to_value::<&ReductionKind>(&inst.kind).expect("plain data"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domino::seven_signed_decomposition;
    use crate::samples::{seven_unsigned, seven_signed};

    #[test]
    fn signed_text_example() {
        let g = parse_signed_text("c tiny\np sg 3 1 1\nv 1 a\n1 2 +\n2 3 -\n").unwrap();
        assert_eq!(g.labels(), ["a", "2", "3"]);
        assert_eq!(g.sign(0, 1), Some(Sign::Pos));
        assert_eq!(g.sign(1, 2), Some(Sign::Neg));
        assert_eq!(parse_signed_text(&write_signed_text(&g)).unwrap(), g);
    }

    #[test]
    fn signed_text_errors() {
        let bad = [
            ("1 2 +\n", 1),
            ("p sg 2 1 0\n1 3 +\n", 2),
            ("p sg 2 1 0\n1 2 *\n", 2),
            ("p sg 2 2 0\n1 2 +\n", 1),
            ("p sg 2 0 0\nv 1 x\nv 1 y\n", 3),
        ];
        for (text, line) in bad {
            match parse_signed_text(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert_eq!(
            parse_signed_text("p sg 2 1 1\n1 2 +\n2 1 -\n"),
            Err(Error::ConflictingSign(0, 1))
        );
        // Repeated edges collapse.
        assert!(parse_signed_text("p sg 2 1 0\n1 2 +\n2 1 +\n").is_ok());
    }

    #[test]
    fn json_round_trip() {
        let g = seven_signed();
        let j = write_signed_json(&g);
        assert_eq!(parse_signed_auto(&j).unwrap(), g);
        assert_eq!(parse_signed_auto(&write_signed_text(&g)).unwrap(), g);
        let plain = parse_signed_json(r#"{"n":2,"pos":[],"neg":[[1,2]]}"#).unwrap();
        assert!(plain.has_default_labels());
        assert!(!write_signed_json(&plain).contains("labels"));
    }

    #[test]
    fn unsigned_and_hypergraph_round_trip() {
        let g = seven_unsigned();
        assert_eq!(parse_unsigned_dimacs(&write_unsigned_dimacs(&g)).unwrap(), g);
        let h = parse_hypergraph("p hs 4 2\ne 1 2\ne 3 4 1\n").unwrap();
        assert_eq!(h.edges(), [vec![0, 1], vec![0, 2, 3]]);
        assert_eq!(parse_hypergraph(&write_hypergraph(&h)).unwrap(), h);
        assert_eq!(
            parse_hypergraph("p hs 2 1\ne\n"),
            Err(Error::EmptyHyperedge(1))
        );
    }

    #[test]
    fn decomposition_round_trip() {
        let g = seven_signed();
        let d = seven_signed_decomposition();
        let text = write_decomposition(&d, &g);
        assert!(text.starts_with("td 2 5 7\n"));
        assert_eq!(parse_decomposition(&text, &g).unwrap(), d);
        assert_eq!(
            parse_decomposition("td 1 1 7\nb 1 v9\n", &g),
            Err(Error::UnknownLabel("v9".into()))
        );
    }

    #[test]
    fn sets_by_label() {
        let g = seven_signed();
        let s = parse_set("v1 v3\nv4 v5\n", &g).unwrap();
        assert_eq!(s.to_vec(), vec![0, 2, 3, 4]);
        assert_eq!(write_set(&g, &s), "v1 v3 v4 v5\n");
        assert_eq!(parse_set("v8", &g), Err(Error::UnknownLabel("v8".into())));
    }
}
