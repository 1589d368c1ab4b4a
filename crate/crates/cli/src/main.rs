//! `sak`: minimum offensive alliances in signed graphs.
//!
//! Exit codes: 0 yes / accepted / ok, 1 no / rejected, 2 usage error or
//! unavailable strategy, 3 input error.

mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sak_core::alliance::component_bounds;
use sak_core::domino::{caterpillar_decomposition, cycle_decomposition, path_decomposition, random_domino};
use sak_core::gen::{
    gen_caterpillar, gen_complete, gen_cycle, gen_hypergraph, gen_path, gen_random_signed,
    gen_random_unsigned, CompleteMode,
};
use sak_core::io::{
    parse_decomposition, parse_hypergraph, parse_set, parse_signed_auto, parse_unsigned_dimacs,
    write_decomposition, write_hypergraph, write_signed_json, write_signed_text, write_unsigned_dimacs,
    WitnessSidecar,
};
use sak_core::reductions::{
    reduce_hitting_set, reduce_unsigned_oa, reduce_vertex_cover, source_hitting_set,
    source_unsigned_oa, source_vertex_cover, ReductionInstance, UoaVariant, VcVariant, VcWitness,
};
use sak_core::snd::{build_oa_ilp, snd_partition};
use sak_core::solver::dispatch::{solve, SolveOptions, StrategyChoice};
use sak_core::solver::Outcome;
use sak_core::alliance::accepts;
use sak_core::{is_offensive_alliance, Sign, SignedGraph};

use report::{sha256_hex, BoundsReport, RunReport, SndReport, Stats, VerifyReport};

#[derive(Parser)]
#[command(name = "sak", version, about = "Minimum offensive alliances in signed graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Find a minimum offensive alliance, or decide one within --budget.
    Solve(SolveArgs),
    /// Check a vertex set (labels, whitespace separated) and explain the verdict.
    Verify {
        /// Signed graph (text or JSON, `-` for stdin).
        graph: String,
        set: String,
    },
    /// Build a signed instance from a hardness source with a planted witness.
    Reduce(ReduceArgs),
    /// Generate instances.
    Gen(GenArgs),
    /// Signed neighbourhood-diversity partition.
    Snd {
        graph: String,
        /// Print the integer program in LP format instead.
        #[arg(long)]
        lp: bool,
    },
    /// Per-component existence precondition and size lower bound.
    CheckBounds { graph: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Brute,
    Branch,
    Closed,
    Ilp,
    Dp,
}

impl From<StrategyArg> for StrategyChoice {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => StrategyChoice::Auto,
            StrategyArg::Brute => StrategyChoice::Brute,
            StrategyArg::Branch => StrategyChoice::Branch,
            StrategyArg::Closed => StrategyChoice::Closed,
            StrategyArg::Ilp => StrategyChoice::Ilp,
            StrategyArg::Dp => StrategyChoice::Dp,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    graph: String,
    #[arg(long, value_enum, default_value = "auto")]
    strategy: StrategyArg,
    /// Decide whether an alliance of at most this size exists.
    #[arg(long)]
    budget: Option<usize>,
    /// Domino decomposition file (required by `--strategy dp`).
    #[arg(long)]
    decomposition: Option<String>,
    /// Largest class count for which `auto` uses the integer program.
    #[arg(long, default_value_t = 8)]
    snd_threshold: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    /// Hitting set (hypergraph file).
    Hs,
    /// Vertex cover on a subcubic graph (DIMACS).
    Vc,
    /// Unsigned offensive alliance (DIMACS).
    Uoa,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    PerVertex,
    Shared,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessArg {
    Cover,
    AllVertices,
}

#[derive(Args)]
struct ReduceArgs {
    source: Source,
    input: String,
    #[arg(long)]
    k: usize,
    /// Chain layout for `vc`.
    #[arg(long, value_enum, default_value = "per-vertex")]
    variant: VariantArg,
    /// Planted-witness mapping for `vc`.
    #[arg(long, value_enum, default_value = "cover")]
    witness: WitnessArg,
    /// For `uoa`: give every vertex helpers, even those without handles.
    #[arg(long)]
    all_helpers: bool,
    /// Write the graph here and the witness to `<out>.witness.json`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the graph as JSON rather than text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: Family,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// JSON output for signed graphs.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Balanced,
    Anti,
}

#[derive(Subcommand)]
enum Family {
    /// Complete signed graph with the given part sizes.
    Complete {
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        #[arg(long, value_enum, default_value = "balanced")]
        mode: ModeArg,
    },
    /// Each pair positive with p_pos, else negative with p_neg.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p_pos: f64,
        #[arg(long, default_value_t = 0.3)]
        p_neg: f64,
    },
    /// Path; edge signs cycle through --signs.
    Path {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "-")]
        signs: String,
        /// Also write a domino decomposition here.
        #[arg(long)]
        decomposition: Option<PathBuf>,
    },
    /// Cycle; edge signs cycle through --signs.
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "-")]
        signs: String,
        #[arg(long)]
        decomposition: Option<PathBuf>,
    },
    /// Caterpillar with legs[i] leaves on spine vertex i.
    Caterpillar {
        #[arg(long, value_delimiter = ',', required = true)]
        legs: Vec<usize>,
        #[arg(long, default_value_t = 0.5)]
        p_neg: f64,
        #[arg(long)]
        decomposition: Option<PathBuf>,
    },
    /// Random graph built together with a domino decomposition.
    Domino {
        #[arg(long)]
        nodes: usize,
        #[arg(long, default_value_t = 4)]
        max_bag: usize,
        #[arg(long, default_value_t = 0.5)]
        p_edge: f64,
        #[arg(long, default_value_t = 0.5)]
        p_neg: f64,
        #[arg(long, required = true)]
        decomposition: PathBuf,
    },
    /// Unsigned G(n, p) in DIMACS format.
    Unsigned {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
    },
    /// Random hypergraph.
    Hypergraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        max_edge: usize,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{context}{source}")]
    Core {
        context: String,
        source: sak_core::Error,
    },
}

impl From<sak_core::Error> for CliError {
    fn from(source: sak_core::Error) -> Self {
        CliError::Core {
            context: String::new(),
            source,
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        use sak_core::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core {
                source: E::StrategyUnavailable(_) | E::BadParameter(_) | E::BadProbabilities,
                ..
            } => 2,
            CliError::Io { .. } | CliError::Core { .. } => 3,
        }
    }
}

type Res<T> = Result<T, CliError>;

fn in_file<T>(path: &str, r: sak_core::Result<T>) -> Res<T> {
    r.map_err(|source| CliError::Core {
        context: format!("{path}: "),
        source,
    })
}

fn read_input(path: &str) -> Res<Vec<u8>> {
    let io_err = |source| CliError::Io {
        path: path.into(),
        source,
    };
    if path == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf).map_err(io_err)?;
        Ok(buf)
    } else {
        fs::read(path).map_err(io_err)
    }
}

fn read_text(path: &str) -> Res<(String, Vec<u8>)> {
    let bytes = read_input(path)?;
    let text = String::from_utf8(bytes.clone()).map_err(|e| CliError::Io {
        path: path.into(),
        source: io::Error::new(io::ErrorKind::InvalidData, e),
    })?;
    Ok((text, bytes))
}

fn read_graph(path: &str) -> Res<(SignedGraph, Vec<u8>)> {
    let (text, bytes) = read_text(path)?;
    Ok((in_file(path, parse_signed_auto(&text))?, bytes))
}

fn write_to(path: &Path, text: &str) -> Res<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Writes to `out`, or stdout when absent.
fn emit(out: Option<&Path>, text: &str) -> Res<()> {
    match out {
        Some(p) => write_to(p, text),
        None => {
            let mut stdout = io::stdout().lock();
            // A closed pipe is not worth an error exit.
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serialises");
    s.push('\n');
    s
}

fn threads() -> usize {
    std::env::var("SAK_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&t| t > 0)
        .unwrap_or(1)
}

fn cmd_solve(a: SolveArgs) -> Res<u8> {
    let (g, bytes) = read_graph(&a.graph)?;
    let (decomposition, decomposition_sha256) = match &a.decomposition {
        Some(path) => {
            let (text, bytes) = read_text(path)?;
            (Some(in_file(path, parse_decomposition(&text, &g))?), Some(sha256_hex(&bytes)))
        }
        None => (None, None),
    };
    let choice = StrategyChoice::from(a.strategy);
    let opts = SolveOptions {
        strategy: choice,
        budget: a.budget,
        snd_threshold: a.snd_threshold,
        threads: threads(),
        decomposition,
    };
    let d = solve(&g, &opts)?;
    let strategy = match (&d.outcome, d.phases.last()) {
        (Outcome::Found(r), _) => r.strategy.name().to_string(),
        (_, Some(p)) => p.name.clone(),
        _ => serde_json::to_value(choice).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
    };
    let r = RunReport {
        schema: report::SCHEMA,
        tool: "sak",
        version: env!("CARGO_PKG_VERSION"),
        command: std::env::args().skip(1).collect(),
        input_sha256: sha256_hex(&bytes),
        decomposition_sha256,
        strategy,
        status: if d.outcome.is_yes() { "yes" } else { "no" },
        budget: a.budget,
        optimum: d.outcome.optimum(),
        witness: d.outcome.as_found().map(|r| g.format_set(r.set())),
        stats: Stats {
            n: g.n(),
            pos_edges: g.num_pos_edges(),
            neg_edges: g.num_neg_edges(),
            explored: d.outcome.explored(),
        },
        phases: d.phases,
    };
    emit(a.out.as_deref(), &json(&r))?;
    Ok(if d.outcome.is_yes() { 0 } else { 1 })
}

fn cmd_verify(graph: &str, set: &str) -> Res<u8> {
    let (g, _) = read_graph(graph)?;
    let (text, _) = read_text(set)?;
    let s = in_file(set, parse_set(&text, &g))?;
    let cert = is_offensive_alliance(&g, &s)?;
    emit(None, &json(&VerifyReport::new(&g, &cert)))?;
    Ok(if cert.accepted() { 0 } else { 1 })
}

fn cmd_reduce(a: ReduceArgs) -> Res<u8> {
    let (text, _) = read_text(&a.input)?;
    let (inst, solution): (ReductionInstance, Option<Vec<usize>>) = match a.source {
        Source::Hs => {
            let h = in_file(&a.input, parse_hypergraph(&text))?;
            (reduce_hitting_set(&h, a.k)?, source_hitting_set(&h, Some(a.k)))
        }
        Source::Vc => {
            let g = in_file(&a.input, parse_unsigned_dimacs(&text))?;
            let variant = match a.variant {
                VariantArg::PerVertex => VcVariant::PerVertex,
                VariantArg::Shared => VcVariant::Shared,
            };
            let witness = match a.witness {
                WitnessArg::Cover => VcWitness::Cover,
                WitnessArg::AllVertices => VcWitness::AllVertices,
            };
            (reduce_vertex_cover(&g, a.k, variant, witness)?, source_vertex_cover(&g, Some(a.k)))
        }
        Source::Uoa => {
            let g = in_file(&a.input, parse_unsigned_dimacs(&text))?;
            let variant = if a.all_helpers {
                UoaVariant::AllHelpers
            } else {
                UoaVariant::HandledHelpers
            };
            (reduce_unsigned_oa(&g, a.k, variant)?, source_unsigned_oa(&g, Some(a.k)))
        }
    };
    let planted = solution.map(|s| inst.map_witness(&s)).transpose()?;
    let verified = planted.as_ref().map(|s| accepts(&inst.graph, s));
    let sidecar = WitnessSidecar::new(&inst, planted.as_ref());
    let graph = if a.json {
        write_signed_json(&inst.graph) + "\n"
    } else {
        write_signed_text(&inst.graph)
    };
    match &a.out {
        Some(out) => {
            let side = PathBuf::from(format!("{}.witness.json", out.display()));
            write_to(out, &graph)?;
            write_to(&side, &json(&sidecar))?;
            emit(
                None,
                &json(&serde_json::json!({
                    "schema": report::SCHEMA,
                    "graph": out.display().to_string(),
                    "witness_file": side.display().to_string(),
                    "n": inst.graph.n(),
                    "budget": inst.budget,
                    "witness_verified": verified,
                })),
            )?;
        }
        None => emit(
            None,
            &json(&serde_json::json!({
                "graph": serde_json::from_str::<serde_json::Value>(&write_signed_json(&inst.graph))
                    .expect("own output parses"),
                "sidecar": sidecar,
                "witness_verified": verified,
            })),
        )?,
    }
    Ok(0)
}

fn signs(s: &str) -> Res<Vec<Sign>> {
    let v: Vec<Sign> = s
        .chars()
        .map(|c| match c {
            '+' => Ok(Sign::Pos),
            '-' => Ok(Sign::Neg),
            _ => Err(CliError::Usage(format!("--signs takes `+`/`-` characters, found `{c}`"))),
        })
        .collect::<Res<_>>()?;
    if v.is_empty() {
        return Err(CliError::Usage("--signs must not be empty".into()));
    }
    Ok(v)
}

fn cmd_gen(a: GenArgs) -> Res<u8> {
    let out = a.out.as_deref();
    let signed = |g: &SignedGraph| {
        if a.json {
            write_signed_json(g) + "\n"
        } else {
            write_signed_text(g)
        }
    };
    let (g, d) = match a.family {
        Family::Complete { parts, mode } => {
            let mode = match mode {
                ModeArg::Balanced => CompleteMode::Balanced,
                ModeArg::Anti => CompleteMode::AntiBalanced,
            };
            (gen_complete(&parts, mode)?, None)
        }
        Family::Random { n, p_pos, p_neg } => (gen_random_signed(n, p_pos, p_neg, a.seed)?, None),
        Family::Path { n, signs: s, decomposition } => {
            let g = gen_path(n, &signs(&s)?)?;
            (g, decomposition.map(|p| (p, path_decomposition(n))))
        }
        Family::Cycle { n, signs: s, decomposition } => {
            let g = gen_cycle(n, &signs(&s)?)?;
            (g, decomposition.map(|p| (p, cycle_decomposition(n))))
        }
        Family::Caterpillar { legs, p_neg, decomposition } => {
            let g = gen_caterpillar(&legs, p_neg, a.seed)?;
            (g, decomposition.map(|p| (p, caterpillar_decomposition(&legs))))
        }
        Family::Domino {
            nodes,
            max_bag,
            p_edge,
            p_neg,
            decomposition,
        } => {
            let (g, d) = random_domino(nodes, max_bag, p_edge, p_neg, a.seed)?;
            (g, Some((decomposition, d)))
        }
        Family::Unsigned { n, p } => {
            return emit(out, &write_unsigned_dimacs(&gen_random_unsigned(n, p, a.seed)?)).map(|_| 0);
        }
        Family::Hypergraph { n, m, max_edge } => {
            return emit(out, &write_hypergraph(&gen_hypergraph(n, m, max_edge, a.seed)?)).map(|_| 0);
        }
    };
    if let Some((path, d)) = d {
        write_to(&path, &write_decomposition(&d, &g))?;
    }
    emit(out, &signed(&g))?;
    Ok(0)
}

fn cmd_snd(graph: &str, lp: bool) -> Res<u8> {
    let (g, _) = read_graph(graph)?;
    let p = snd_partition(&g)?;
    if lp {
        emit(None, &build_oa_ilp(&p).to_lp())?;
    } else {
        emit(None, &json(&SndReport::new(&g, &p)))?;
    }
    Ok(0)
}

fn cmd_check_bounds(graph: &str) -> Res<u8> {
    let (g, _) = read_graph(graph)?;
    emit(None, &json(&BoundsReport::new(&g, component_bounds(&g))))?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let res = match cli.cmd {
        Cmd::Solve(a) => cmd_solve(a),
        Cmd::Verify { graph, set } => cmd_verify(&graph, &set),
        Cmd::Reduce(a) => cmd_reduce(a),
        Cmd::Gen(a) => cmd_gen(a),
        Cmd::Snd { graph, lp } => cmd_snd(&graph, lp),
        Cmd::CheckBounds { graph } => cmd_check_bounds(&graph),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("sak: {e}");
            ExitCode::from(e.code())
        }
    }
}
