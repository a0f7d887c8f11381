//! The bounded-speed cops-and-robber game, its monotone cop strategy, and
//! exact solvers for the cop game and the flipper game on tiny graphs.
//!
//! Rules enforced by the referee: `C_0 = ∅`; the robber picks `w_0`; in
//! round `i` the cops announce `C_i` with `|C_i| <= k`, then the robber walks
//! at most `r` steps from `w_{i-1}` avoiding `C_i ∩ C_{i-1}`. The cops win
//! when `w_i ∈ C_i`. An illegal move loses for the player who made it.

mod monotone;
mod solve;

use std::collections::{BTreeMap, VecDeque};
use std::io::BufRead;

use rand::seq::IteratorRandom;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::radius::Radius;

pub use monotone::{
    adversarial_robber_certify, adversarial_robber_certify_with, monotone_invariants, Certification, MonotoneCops,
};
pub(crate) use solve::kflips as kflips_small;
pub use solve::{
    check_fw_cw, copwidth, copwidth_exact, copwidth_exact_with, flipper_game_solve, flipper_game_solve_with, kflip_graphs,
    CopCaps, FlipCaps, FwCwReport,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round {
    pub cops: VertexSet,
    /// Walk from the previous position to `position`, both included.
    pub path: Vec<usize>,
    pub position: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Winner {
    Cops,
    Robber,
    Timeout,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameTranscript {
    pub n: usize,
    pub r: Radius,
    pub k: usize,
    pub max_rounds: usize,
    pub start: usize,
    pub rounds: Vec<Round>,
    pub winner: Winner,
    /// Set when the game ended on an illegal move.
    pub forfeit: Option<String>,
}

impl GameTranscript {
    /// Position before round `i` (1-based): `w_{i-1}`.
    pub fn position_before(&self, i: usize) -> usize {
        if i <= 1 {
            self.start
        } else {
            self.rounds[i - 2].position
        }
    }

    pub fn to_json_lines(&self) -> Result<String> {
        let mut out = String::new();
        let mut push = |line: &Line| -> Result<()> {
            out.push_str(&serde_json::to_string(line)?);
            out.push('\n');
            Ok(())
        };
        push(&Line::Header { schema: 1, n: self.n, r: self.r, k: self.k, max_rounds: self.max_rounds, start: self.start })?;
        for (i, round) in self.rounds.iter().enumerate() {
            push(&Line::Round { round: i + 1, cops: round.cops.clone(), path: round.path.clone(), position: round.position })?;
        }
        push(&Line::Result { winner: self.winner, forfeit: self.forfeit.clone() })?;
        Ok(out)
    }

    pub fn from_json_lines(reader: impl BufRead) -> Result<GameTranscript> {
        let mut header = None;
        let mut rounds = Vec::new();
        let mut result = None;
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let parsed: Line =
                serde_json::from_str(&line).map_err(|e| Error::parse(format!("line {}", i + 1), e.to_string()))?;
            match parsed {
                Line::Header { schema, n, r, k, max_rounds, start } => {
                    if schema != 1 {
                        return Err(Error::parse(format!("line {}", i + 1), format!("unsupported schema {schema}")));
                    }
                    header = Some((n, r, k, max_rounds, start));
                }
                Line::Round { round, cops, path, position } => {
                    if round != rounds.len() + 1 {
                        return Err(Error::parse(format!("line {}", i + 1), format!("expected round {}", rounds.len() + 1)));
                    }
                    rounds.push(Round { cops, path, position });
                }
                Line::Result { winner, forfeit } => result = Some((winner, forfeit)),
            }
        }
        let (n, r, k, max_rounds, start) = header.ok_or_else(|| Error::parse("transcript", "missing header line"))?;
        let (winner, forfeit) = result.ok_or_else(|| Error::parse("transcript", "missing result line"))?;
        Ok(GameTranscript { n, r, k, max_rounds, start, rounds, winner, forfeit })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum Line {
    Header { schema: u32, n: usize, r: Radius, k: usize, max_rounds: usize, start: usize },
    Round { round: usize, cops: VertexSet, path: Vec<usize>, position: usize },
    Result { winner: Winner, forfeit: Option<String> },
}

/// Chooses the next cop set from the history. Deterministic.
pub trait CopStrategy {
    fn cops(&self, g: &Graph, start: usize, rounds: &[Round]) -> Result<VertexSet>;
}

pub trait RobberStrategy {
    fn start(&mut self, g: &Graph) -> Result<usize>;

    /// A walk starting at the current position, given the announced cops.
    fn reply(&mut self, g: &Graph, r: Radius, start: usize, rounds: &[Round], cops: &VertexSet) -> Result<Vec<usize>>;
}

impl<F> CopStrategy for F
where
    F: Fn(&Graph, usize, &[Round]) -> Result<VertexSet>,
{
    fn cops(&self, g: &Graph, start: usize, rounds: &[Round]) -> Result<VertexSet> {
        self(g, start, rounds)
    }
}

/// Cops that never move.
#[derive(Clone, Copy, Debug, Default)]
pub struct IdleCops;

impl CopStrategy for IdleCops {
    fn cops(&self, _: &Graph, _: usize, _: &[Round]) -> Result<VertexSet> {
        Ok(VertexSet::new())
    }
}

/// Robber that starts at a fixed vertex and never moves.
#[derive(Clone, Copy, Debug)]
pub struct LazyRobber(pub usize);

impl RobberStrategy for LazyRobber {
    fn start(&mut self, _: &Graph) -> Result<usize> {
        Ok(self.0)
    }

    fn reply(&mut self, _: &Graph, _: Radius, start: usize, rounds: &[Round], _: &VertexSet) -> Result<Vec<usize>> {
        Ok(vec![rounds.last().map_or(start, |r| r.position)])
    }
}

/// Robber that moves to the reachable vertex farthest from the announced
/// cops (ties to a seeded random choice), preferring uncaught positions.
#[derive(Clone, Debug)]
pub struct EvasiveRobber {
    rng: ChaCha8Rng,
}

impl EvasiveRobber {
    pub fn new(seed: u64) -> EvasiveRobber {
        EvasiveRobber { rng: crate::graph::generate::rng(seed) }
    }
}

impl RobberStrategy for EvasiveRobber {
    fn start(&mut self, g: &Graph) -> Result<usize> {
        g.vertices().choose(&mut self.rng).ok_or_else(|| Error::Strategy("empty graph".into()))
    }

    fn reply(&mut self, g: &Graph, r: Radius, start: usize, rounds: &[Round], cops: &VertexSet) -> Result<Vec<usize>> {
        let from = rounds.last().map_or(start, |x| x.position);
        let previous = rounds.last().map(|x| x.cops.clone()).unwrap_or_default();
        let options = robber_options(g, r, from, &cops.intersection(&previous));
        let score = |v: usize| -> usize {
            if cops.contains(v) {
                return 0;
            }
            let dist = g.distances(v);
            1 + cops.iter().filter_map(|c| dist[c]).min().unwrap_or(g.n())
        };
        let best = options.keys().map(|&v| score(v)).max().unwrap_or(0);
        let target = options
            .keys()
            .copied()
            .filter(|&v| score(v) == best)
            .choose(&mut self.rng)
            .expect("current position is always an option");
        Ok(options[&target].clone())
    }
}

/// Every vertex the robber can reach from `from` in at most `r` steps
/// avoiding `blocked`, with a shortest walk to it.
pub fn robber_options(g: &Graph, r: Radius, from: usize, blocked: &VertexSet) -> BTreeMap<usize, Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut depth = vec![0usize; g.n()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if !r.admits(depth[u] + 1) {
            continue;
        }
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX && !blocked.contains(w) {
                parent[w] = u;
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
        }
    }
    g.vertices()
        .filter(|&v| parent[v] != usize::MAX)
        .map(|v| {
            let mut walk = vec![v];
            let mut x = v;
            while x != from {
                x = parent[x];
                walk.push(x);
            }
            walk.reverse();
            (v, walk)
        })
        .collect()
}

fn check_cops(g: &Graph, k: usize, cops: &VertexSet) -> Option<String> {
    if cops.len() > k {
        return Some(format!("cops announced {} positions, width is {k}", cops.len()));
    }
    cops.iter().find(|&v| v >= g.n()).map(|v| format!("cop position {v} is not a vertex"))
}

fn check_walk(g: &Graph, r: Radius, from: usize, blocked: &VertexSet, walk: &[usize]) -> Option<String> {
    if walk.first() != Some(&from) {
        return Some(format!("walk must start at the robber position {from}"));
    }
    if !r.admits(walk.len() - 1) {
        return Some(format!("walk of length {} exceeds radius {r}", walk.len() - 1));
    }
    for pair in walk.windows(2) {
        if pair[1] >= g.n() || !g.has_edge(pair[0], pair[1]) {
            return Some(format!("({}, {}) is not an edge", pair[0], pair[1]));
        }
    }
    walk.iter().find(|&&v| blocked.contains(v)).map(|v| format!("walk passes the stationary cop at {v}"))
}

/// Plays one game; every move is checked by the referee.
pub fn play_game(
    g: &Graph,
    r: Radius,
    k: usize,
    cops: &dyn CopStrategy,
    robber: &mut dyn RobberStrategy,
    max_rounds: usize,
) -> Result<GameTranscript> {
    let start = robber.start(g)?;
    let mut t = GameTranscript {
        n: g.n(),
        r,
        k,
        max_rounds,
        start,
        rounds: Vec::new(),
        winner: Winner::Timeout,
        forfeit: None,
    };
    if start >= g.n() {
        t.winner = Winner::Cops;
        t.forfeit = Some(format!("robber start {start} is not a vertex"));
        return Ok(t);
    }
    let mut previous = VertexSet::new();
    let mut position = start;
    while t.rounds.len() < max_rounds {
        let announced = cops.cops(g, start, &t.rounds)?;
        if let Some(problem) = check_cops(g, k, &announced) {
            t.winner = Winner::Robber;
            t.forfeit = Some(problem);
            return Ok(t);
        }
        let walk = robber.reply(g, r, start, &t.rounds, &announced)?;
        if let Some(problem) = check_walk(g, r, position, &announced.intersection(&previous), &walk) {
            t.winner = Winner::Cops;
            t.forfeit = Some(problem);
            return Ok(t);
        }
        position = *walk.last().unwrap();
        let caught = announced.contains(position);
        t.rounds.push(Round { cops: announced.clone(), path: walk, position });
        if caught {
            t.winner = Winner::Cops;
            return Ok(t);
        }
        previous = announced;
    }
    Ok(t)
}

/// Re-runs the referee over the recorded moves and compares the outcome.
///
/// An illegal move ends a game before it is recorded, so every recorded
/// round must be legal; a forfeit is accepted only after the last round.
pub fn replay(g: &Graph, t: &GameTranscript) -> Result<()> {
    let mismatch = |msg: String| Err(Error::Precondition(format!("transcript does not replay: {msg}")));
    if t.n != g.n() {
        return mismatch(format!("transcript is for {} vertices, graph has {}", t.n, g.n()));
    }
    if t.rounds.len() > t.max_rounds {
        return mismatch("more rounds than the limit".into());
    }
    if t.start >= g.n() {
        if t.winner != Winner::Cops || t.forfeit.is_none() || !t.rounds.is_empty() {
            return mismatch(format!("robber start {} is not a vertex", t.start));
        }
        return Ok(());
    }
    let mut caught = false;
    let mut previous = VertexSet::new();
    let mut position = t.start;
    for (i, round) in t.rounds.iter().enumerate() {
        if caught {
            return mismatch(format!("round {} played after the game ended", i + 1));
        }
        if let Some(p) = check_cops(g, t.k, &round.cops) {
            return mismatch(format!("round {}: {p}", i + 1));
        }
        if let Some(p) = check_walk(g, t.r, position, &round.cops.intersection(&previous), &round.path) {
            return mismatch(format!("round {}: {p}", i + 1));
        }
        if round.path.last() != Some(&round.position) {
            return mismatch(format!("round {} position differs from the walk's end", i + 1));
        }
        position = round.position;
        caught = round.cops.contains(position);
        previous = round.cops.clone();
    }
    let expected = match (&t.forfeit, caught) {
        (Some(_), true) => return mismatch("forfeit recorded after a capture".into()),
        (Some(_), false) if t.winner == Winner::Timeout => return mismatch("forfeit without a winner".into()),
        (Some(_), false) => t.winner,
        (None, true) => Winner::Cops,
        (None, false) if t.rounds.len() == t.max_rounds => Winner::Timeout,
        (None, false) => return mismatch("game stops early without a capture or a forfeit".into()),
    };
    if expected != t.winner {
        return mismatch(format!("recorded winner {:?}, referee finds {expected:?}", t.winner));
    }
    Ok(())
}
