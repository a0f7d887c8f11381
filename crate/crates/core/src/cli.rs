//! Command-line driver behind the `flipsparse` binary.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 usage or input
//! error, 3 a size cap was exceeded.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::games::{
    adversarial_robber_certify, copwidth, copwidth_exact_with, flipper_game_solve_with, play_game, replay, CopCaps,
    CopStrategy, EvasiveRobber, FlipCaps, GameTranscript, IdleCops, LazyRobber, MonotoneCops, RobberStrategy,
};
use crate::graph::io::{parse_graph, write_graph, Format};
use crate::graph::{all_graphs, enumerate_pflips, generate, require_ktt_free, Graph, Partition};
use crate::mergewidth::{
    is_normalized, mw_from_order, normalize_rfs, order_from_rfs, rfs_width, validate_rfs, RestrainedFlipSequence,
};
use crate::radius::Radius;
use crate::ranks::check_lemma_frk;
use crate::sparsify::{sparsify_set, verify_engine};
use crate::sweep::{self, SweepConfig};
use crate::widths::{
    degeneracy, scol_exact_with, scol_of_order, sw_exact_with, sw_greedy, sw_of_order, treewidth_oracle_with,
    wcol_exact_with, wcol_of_order, ExactCaps, Ordering, Param, WidthResult,
};

#[derive(Debug, Parser)]
#[command(name = "flipsparse", version, about = "Flip sparsification, separation-width, merge-width witnesses and pursuit games")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Width parameter of a graph, exact or for a given ordering.
    Width(WidthArgs),
    /// Deletion set of a partition, optionally checked against every flip.
    Sparsify(SparsifyArgs),
    /// Restrained flip sequences.
    #[command(subcommand)]
    Mw(MwCommand),
    /// Cops-and-robber and flipper games.
    #[command(subcommand)]
    Game(GameCommand),
    /// Flipper-rank and splitter-rank with the transfer check.
    Rank(RankArgs),
    /// Emit graphs from the generators.
    Gen(GenArgs),
    /// Run corpus sweeps by criterion number (default: all).
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph file, or `-` for standard input.
    pub graph: PathBuf,
    /// Input format; defaults to graph6 for `.g6` files, else edge list.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParamArg {
    Sw,
    Scol,
    Wcol,
    Degeneracy,
    Treewidth,
}

#[derive(Debug, Args)]
pub struct WidthArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long, value_enum, default_value = "sw")]
    pub param: ParamArg,
    /// Radius: a natural number or `inf`.
    #[arg(long, default_value = "1")]
    pub r: Radius,
    /// Exact optimum over all orderings (the default).
    #[arg(long, conflicts_with_all = ["greedy", "order"])]
    pub exact: bool,
    /// Heuristic ordering instead of the exact search.
    #[arg(long, conflicts_with = "order")]
    pub greedy: bool,
    /// Evaluate this ordering: `identity`, `degeneracy` or a comma list.
    #[arg(long)]
    pub order: Option<String>,
    /// Largest n for the exact searches.
    #[arg(long, default_value_t = ExactCaps::default().max_n)]
    pub max_n: usize,
}

#[derive(Debug, Args)]
pub struct SparsifyArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Partition file: JSON `[[..],..]` or one whitespace-separated block per line.
    #[arg(long, required_unless_present = "blocks")]
    pub partition: Option<PathBuf>,
    /// Inline partition, blocks separated by `;`, vertices by `,` or spaces.
    #[arg(long, conflicts_with = "partition")]
    pub blocks: Option<String>,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    /// Check the distance guarantees for every flip of the partition.
    #[arg(long)]
    pub all_flips: bool,
}

#[derive(Debug, Subcommand)]
pub enum MwCommand {
    /// Build a sequence from a vertex ordering.
    Build(MwBuildArgs),
    /// Validate a sequence and report its width.
    Verify(MwSeqArgs),
    /// Extract a vertex ordering with a certified separation-width bound.
    ToOrder(MwToOrderArgs),
    /// Rewrite a sequence so each step splits exactly one part.
    Normalize(MwSeqArgs),
}

#[derive(Debug, Args)]
pub struct MwBuildArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// `identity`, `degeneracy`, `sw-exact` or a comma list.
    #[arg(long, default_value = "identity")]
    pub order: String,
    #[arg(long, default_value = "1")]
    pub r: Radius,
    /// Store restraints as deltas between steps.
    #[arg(long)]
    pub compact: bool,
}

#[derive(Debug, Args)]
pub struct MwSeqArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Sequence JSON as written by `mw build`.
    #[arg(long)]
    pub seq: PathBuf,
    #[arg(long, default_value = "1")]
    pub r: Radius,
    #[arg(long)]
    pub compact: bool,
}

#[derive(Debug, Args)]
pub struct MwToOrderArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long)]
    pub seq: PathBuf,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    #[arg(long, default_value = "1")]
    pub r: Radius,
}

#[derive(Debug, Subcommand)]
pub enum GameCommand {
    /// Play one game and print the transcript as JSON lines.
    Play(GamePlayArgs),
    /// Check the monotone cop strategy against every robber.
    Certify(GameCertifyArgs),
    /// Solve the cop game (or the flipper game) exactly.
    Solve(GameSolveArgs),
    /// Re-referee a recorded transcript.
    Replay(GameReplayArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CopsArg {
    Monotone,
    Idle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RobberArg {
    Lazy,
    Evasive,
}

#[derive(Debug, Args)]
pub struct GamePlayArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long, default_value = "1")]
    pub r: Radius,
    /// Cop budget; defaults to the monotone strategy's budget.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value = "monotone")]
    pub cops: CopsArg,
    #[arg(long, value_enum, default_value = "evasive")]
    pub robber: RobberArg,
    /// Ordering for the monotone cops; defaults to an optimal one at radius 2r.
    #[arg(long)]
    pub order: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Defaults to n.
    #[arg(long)]
    pub max_rounds: Option<usize>,
}

#[derive(Debug, Args)]
pub struct GameCertifyArgs {
    /// Graph file or `-`; with graph6, every line is certified separately.
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long, default_value = "1")]
    pub r: Radius,
    #[arg(long)]
    pub order: Option<String>,
}

#[derive(Debug, Args)]
pub struct GameSolveArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long, default_value = "1")]
    pub r: Radius,
    /// Decide a single budget; otherwise report the least winning one.
    #[arg(long)]
    pub k: Option<usize>,
    /// Solve the flipper game instead (requires --k).
    #[arg(long, requires = "k")]
    pub flipper: bool,
    /// Largest n the solver accepts; the default depends on the game.
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Largest budget the solver accepts; the default depends on the game.
    #[arg(long)]
    pub max_k: Option<usize>,
}

#[derive(Debug, Args)]
pub struct GameReplayArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Transcript written by `game play`.
    #[arg(long)]
    pub transcript: PathBuf,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long, default_value = "1")]
    pub r: Radius,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    Grid,
    Tree,
    Gnp,
    KttFree,
    /// Every labeled graph on n vertices.
    All,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long, default_value_t = 5)]
    pub n: usize,
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    /// Grid columns; rows come from --n.
    #[arg(long, default_value_t = 2)]
    pub cols: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// With `all`: only connected graphs.
    #[arg(long)]
    pub connected: bool,
    /// With `all`: only trees.
    #[arg(long)]
    pub trees: bool,
    #[arg(long, value_enum, default_value = "edge-list")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Criterion numbers 1 to 9, or `all`.
    pub criteria: Vec<String>,
    #[arg(long, default_value_t = SweepConfig::default().seed)]
    pub seed: u64,
    /// Worker threads; 0 picks the number of cores.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            let _ = writeln!(out, "{}", error_json(&e));
            e.exit_code()
        }
    }
}

fn error_json(e: &Error) -> Value {
    let mut v = json!({ "schema": 1, "error": e.to_string(), "exit_code": e.exit_code() });
    if let Error::NotKttFree { t, witness } = e {
        v["t"] = json!(t);
        v["witness"] = json!(witness);
    }
    v
}

/// Runs one command; `Ok` carries 0 or 1 depending on the checked property.
pub fn execute(command: &Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Width(a) => width(a, out),
        Command::Sparsify(a) => sparsify(a, out),
        Command::Mw(c) => mw(c, out),
        Command::Game(c) => game(c, out),
        Command::Rank(a) => rank(a, out),
        Command::Gen(a) => gen(a, out),
        Command::Sweep(a) => sweep_cmd(a, out),
    }
}

fn read_text(path: &Path) -> Result<String> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Error::parse(path.display().to_string(), format!("cannot read: {e}")))?;
    }
    Ok(text)
}

fn format_of(input: &GraphInput) -> Format {
    input.format.unwrap_or(match input.graph.extension().and_then(|e| e.to_str()) {
        Some("g6") | Some("graph6") => Format::Graph6,
        _ => Format::EdgeList,
    })
}

fn read_graph(input: &GraphInput) -> Result<Graph> {
    parse_graph(&read_text(&input.graph)?, format_of(input))
}

/// One graph for an edge list, one per non-empty line for graph6.
fn read_graphs(input: &GraphInput) -> Result<Vec<Graph>> {
    let text = read_text(&input.graph)?;
    match format_of(input) {
        Format::EdgeList => Ok(vec![parse_graph(&text, Format::EdgeList)?]),
        Format::Graph6 => text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| parse_graph(l, Format::Graph6))
            .collect(),
    }
}

fn emit(out: &mut dyn Write, value: impl Serialize) -> Result<()> {
    let mut v = serde_json::to_value(value)?;
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), json!(1));
    }
    writeln!(out, "{v}")?;
    Ok(())
}

fn code(ok: bool) -> i32 {
    if ok {
        0
    } else {
        1
    }
}

/// `identity`, `reverse`, `degeneracy`, `sw-exact` (at radius `r`) or `a,b,c`.
pub fn parse_order(spec: &str, g: &Graph, r: Radius) -> Result<Ordering> {
    let n = g.n();
    match spec.trim() {
        "identity" => Ok(Ordering::identity(n)),
        "reverse" => Ok(Ordering::identity(n).reversed()),
        "degeneracy" => Ok(degeneracy(g).1),
        "sw-exact" => Ok(sw_exact_with(g, r, ExactCaps::default())?.order),
        list => {
            let perm = list
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| Error::parse("order", format!("not a vertex: {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if perm.len() != n {
                return Err(Error::parse("order", format!("expected {n} vertices, got {}", perm.len())));
            }
            Ordering::new(perm)
        }
    }
}

/// JSON `[[0,1],[2]]`, one block per line, or `;`-separated blocks.
pub fn parse_partition(text: &str, n: usize) -> Result<Partition> {
    let text = text.trim();
    let blocks: Vec<Vec<usize>> = if text.starts_with('[') {
        serde_json::from_str(text).map_err(|e| Error::parse("partition", e.to_string()))?
    } else {
        text.split([';', '\n'])
            .filter(|b| !b.trim().is_empty() && !b.trim_start().starts_with('#'))
            .map(|b| {
                b.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse().map_err(|_| Error::parse("partition", format!("not a vertex: {s:?}"))))
                    .collect()
            })
            .collect::<Result<_>>()?
    };
    Partition::new(n, blocks)
}

fn width(a: &WidthArgs, out: &mut dyn Write) -> Result<i32> {
    let g = read_graph(&a.input)?;
    let caps = ExactCaps { max_n: a.max_n };
    let result: WidthResult = match a.param {
        ParamArg::Degeneracy => {
            let (value, order) = degeneracy(&g);
            let mut res = sw_of_order(&g, &order, Radius::Finite(1))?;
            res.param = Param::Degeneracy;
            res.value = value;
            res.exact = true;
            res
        }
        ParamArg::Treewidth => {
            let value = treewidth_oracle_with(&g, a.max_n.max(12))?;
            let mut res = sw_exact_with(&g, Radius::Infinite, caps).unwrap_or(sw_greedy(&g, Radius::Infinite)?);
            res.param = Param::Treewidth;
            res.value = value;
            res.exact = true;
            return emit_width(out, &res);
        }
        param => {
            let of_order = |ord: &Ordering| match param {
                ParamArg::Sw => sw_of_order(&g, ord, a.r),
                ParamArg::Scol => scol_of_order(&g, ord, a.r),
                _ => wcol_of_order(&g, ord, a.r),
            };
            if let Some(spec) = &a.order {
                of_order(&parse_order(spec, &g, a.r)?)?
            } else if a.greedy {
                match param {
                    ParamArg::Sw => sw_greedy(&g, a.r)?,
                    _ => of_order(&degeneracy(&g).1)?,
                }
            } else {
                match param {
                    ParamArg::Sw => sw_exact_with(&g, a.r, caps)?,
                    ParamArg::Scol => scol_exact_with(&g, a.r, caps)?,
                    _ => wcol_exact_with(&g, a.r, caps)?,
                }
            }
        }
    };
    emit_width(out, &result)
}

fn emit_width(out: &mut dyn Write, res: &WidthResult) -> Result<i32> {
    emit(out, res)?;
    Ok(0)
}

fn sparsify(a: &SparsifyArgs, out: &mut dyn Write) -> Result<i32> {
    let g = read_graph(&a.input)?;
    let text = match (&a.partition, &a.blocks) {
        (Some(path), _) => read_text(path)?,
        (None, Some(inline)) => inline.clone(),
        (None, None) => return Err(Error::parse("partition", "pass --partition or --blocks")),
    };
    let p = parse_partition(&text, g.n())?;
    require_ktt_free(&g, a.t)?;
    let report = sparsify_set(&g, &p, a.t)?;
    let mut ok = report.passed && report.reasons_valid(&g, &p, a.t);
    let mut v = serde_json::to_value(&report)?;
    v["t"] = json!(a.t);
    v["blocks"] = json!(p.blocks());
    if a.all_flips {
        let flips = enumerate_pflips(&p)?;
        let mut failures = Vec::new();
        for f in &flips {
            let engine = verify_engine(&g, &p, a.t, f)?;
            if let Some(violation) = engine.violation {
                failures.push(json!({ "flips": f, "violation": violation }));
            }
        }
        ok &= failures.is_empty();
        v["verifications"] = json!(flips.len());
        v["failed"] = json!(failures.len());
        v["failures"] = json!(failures);
    }
    emit(out, v)?;
    Ok(code(ok))
}

fn read_seq(path: &Path) -> Result<RestrainedFlipSequence> {
    RestrainedFlipSequence::from_json(&read_text(path)?)
}

fn seq_json(seq: &RestrainedFlipSequence, compact: bool) -> Result<Value> {
    Ok(serde_json::from_str(&seq.to_json(compact)?)?)
}

fn mw(c: &MwCommand, out: &mut dyn Write) -> Result<i32> {
    match c {
        MwCommand::Build(a) => {
            let g = read_graph(&a.input)?;
            let ord = parse_order(&a.order, &g, a.r.plus(1))?;
            let (seq, claim) = mw_from_order(&g, &ord, a.r)?;
            let mut v = seq_json(&seq, a.compact)?;
            v["r"] = json!(a.r);
            v["width"] = json!(claim.width);
            v["order"] = json!(ord.as_slice());
            v["claim"] = json!(claim);
            emit(out, v)?;
            Ok(0)
        }
        MwCommand::Verify(a) => {
            let g = read_graph(&a.input)?;
            let seq = read_seq(&a.seq)?;
            let report = validate_rfs(&g, &seq);
            let mut v = serde_json::to_value(&report)?;
            v["steps"] = json!(seq.len());
            v["normalized"] = json!(is_normalized(&seq));
            if report.valid {
                v["r"] = json!(a.r);
                v["width"] = json!(rfs_width(&g, &seq, a.r)?);
            }
            emit(out, v)?;
            Ok(code(report.valid))
        }
        MwCommand::Normalize(a) => {
            let g = read_graph(&a.input)?;
            let seq = normalize_rfs(&g, &read_seq(&a.seq)?)?;
            let mut v = seq_json(&seq, a.compact)?;
            v["r"] = json!(a.r);
            v["width"] = json!(rfs_width(&g, &seq, a.r)?);
            emit(out, v)?;
            Ok(0)
        }
        MwCommand::ToOrder(a) => {
            let g = read_graph(&a.input)?;
            let mut seq = read_seq(&a.seq)?;
            let normalized_here = !is_normalized(&seq);
            if normalized_here {
                seq = normalize_rfs(&g, &seq)?;
            }
            let (ord, cert) = order_from_rfs(&g, a.t, &seq, a.r)?;
            let ok = cert.holds();
            emit(out, json!({ "order": ord.as_slice(), "certificate": cert, "normalized_input": normalized_here }))?;
            Ok(code(ok))
        }
    }
}

fn monotone(g: &Graph, r: Radius, order: Option<&String>) -> Result<MonotoneCops> {
    let ord = match order {
        Some(spec) => parse_order(spec, g, r.scale(2))?,
        None => sw_exact_with(g, r.scale(2), ExactCaps::default())?.order,
    };
    MonotoneCops::new(g, r, ord)
}

fn game(c: &GameCommand, out: &mut dyn Write) -> Result<i32> {
    match c {
        GameCommand::Play(a) => {
            let g = read_graph(&a.input)?;
            let mono;
            let (cops, budget): (&dyn CopStrategy, usize) = match a.cops {
                CopsArg::Monotone => {
                    mono = monotone(&g, a.r, a.order.as_ref())?;
                    (&mono, mono.budget())
                }
                CopsArg::Idle => (&IdleCops, 0),
            };
            let mut lazy = LazyRobber(0);
            let mut evasive = EvasiveRobber::new(a.seed);
            let robber: &mut dyn RobberStrategy = match a.robber {
                RobberArg::Lazy => &mut lazy,
                RobberArg::Evasive => &mut evasive,
            };
            let t = play_game(&g, a.r, a.k.unwrap_or(budget), cops, robber, a.max_rounds.unwrap_or(g.n()))?;
            write!(out, "{}", t.to_json_lines()?)?;
            Ok(0)
        }
        GameCommand::Certify(a) => {
            let mut all = true;
            for g in read_graphs(&a.input)? {
                let cops = monotone(&g, a.r, a.order.as_ref())?;
                let cert = adversarial_robber_certify(&g, a.r, &cops, cops.budget())?;
                all &= cert.certified;
                let g6 = write_graph(&g, Format::Graph6).unwrap_or_default();
                emit(
                    out,
                    json!({
                        "graph": g6.trim(),
                        "r": a.r,
                        "order": cops.order().as_slice(),
                        "budget": cops.budget(),
                        "certified": cert.certified,
                        "leaves": cert.leaves,
                        "counter": cert.counter,
                    }),
                )?;
            }
            Ok(code(all))
        }
        GameCommand::Solve(a) => {
            let g = read_graph(&a.input)?;
            let v = match (a.k, a.flipper) {
                (Some(k), true) => {
                    let d = FlipCaps::default();
                    let caps = FlipCaps { max_n: a.max_n.unwrap_or(d.max_n), max_k: a.max_k.unwrap_or(d.max_k) };
                    json!({ "game": "flipper", "r": a.r, "k": k, "flipper_wins": flipper_game_solve_with(&g, a.r, k, caps)? })
                }
                (Some(k), false) => {
                    let d = CopCaps::default();
                    let caps = CopCaps { max_n: a.max_n.unwrap_or(d.max_n), max_k: a.max_k.unwrap_or(d.max_k) };
                    json!({ "game": "cops", "r": a.r, "k": k, "cops_win": copwidth_exact_with(&g, a.r, k, caps)? })
                }
                (None, _) => json!({ "game": "cops", "r": a.r, "copwidth": copwidth(&g, a.r)? }),
            };
            emit(out, v)?;
            Ok(0)
        }
        GameCommand::Replay(a) => {
            let g = read_graph(&a.input)?;
            let file = std::fs::File::open(&a.transcript)
                .map_err(|e| Error::parse(a.transcript.display().to_string(), format!("cannot read: {e}")))?;
            let t = GameTranscript::from_json_lines(std::io::BufReader::new(file))?;
            let outcome = replay(&g, &t);
            let ok = outcome.is_ok();
            emit(
                out,
                json!({
                    "replayed": ok,
                    "winner": t.winner,
                    "rounds": t.rounds.len(),
                    "error": outcome.err().map(|e| e.to_string()),
                }),
            )?;
            Ok(code(ok))
        }
    }
}

fn rank(a: &RankArgs, out: &mut dyn Write) -> Result<i32> {
    let g = read_graph(&a.input)?;
    let report = check_lemma_frk(&g, a.t, a.r, a.k)?;
    let ok = report.holds;
    emit(out, report)?;
    Ok(code(ok))
}

fn gen(a: &GenArgs, out: &mut dyn Write) -> Result<i32> {
    let graphs: Vec<Graph> = match a.family {
        Family::Path => vec![generate::path(a.n)],
        Family::Cycle => vec![generate::cycle(a.n)],
        Family::Star => vec![generate::star(a.n)],
        Family::Complete => vec![generate::complete(a.n)],
        Family::Grid => vec![generate::grid(a.n, a.cols)],
        Family::Tree => vec![generate::random_tree(a.n, a.seed)],
        Family::Gnp => vec![generate::gnp(a.n, a.p, a.seed)],
        Family::KttFree => {
            if a.n > 64 || a.t == 0 {
                return Err(Error::Precondition("ktt-free needs n <= 64 and t >= 1".into()));
            }
            vec![generate::random_ktt_free(a.n, a.p, a.t, a.seed)]
        }
        Family::All => {
            const ALL_MAX_N: usize = 7;
            if a.n > ALL_MAX_N {
                return Err(Error::CapExceeded { what: "labeled graph enumeration vertices", got: a.n, cap: ALL_MAX_N });
            }
            all_graphs(a.n)
                .filter(|g| !a.connected || g.is_connected())
                .filter(|g| !a.trees || (g.is_connected() && g.m() + 1 == g.n()))
                .collect()
        }
    };
    if graphs.len() > 1 && a.format == Format::EdgeList {
        return Err(Error::parse("format", "several graphs need --format graph6"));
    }
    for g in &graphs {
        let text = write_graph(g, a.format)?;
        write!(out, "{text}")?;
        if !text.ends_with('\n') {
            writeln!(out)?;
        }
    }
    Ok(0)
}

fn sweep_cmd(a: &SweepArgs, out: &mut dyn Write) -> Result<i32> {
    let ids: Vec<u8> = if a.criteria.is_empty() || a.criteria.iter().any(|c| c == "all") {
        (1..=9).collect()
    } else {
        a.criteria
            .iter()
            .map(|c| match c.parse::<u8>() {
                Ok(id @ 1..=9) => Ok(id),
                _ => Err(Error::parse("criterion", format!("expected 1 to 9 or `all`, got {c:?}"))),
            })
            .collect::<Result<_>>()?
    };
    let cfg = SweepConfig { seed: a.seed, jobs: a.jobs };
    let mut ok = true;
    for id in ids {
        let report = sweep::run(id, cfg)?;
        ok &= report.passed;
        emit(out, &report)?;
    }
    Ok(code(ok))
}
