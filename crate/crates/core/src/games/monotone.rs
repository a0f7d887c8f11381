use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::small::{set_of, SmallGraph};
use crate::graph::{Graph, VertexSet};
use crate::games::{check_cops, robber_options, CopStrategy, GameTranscript, Round, Winner};
use crate::radius::Radius;
use crate::widths::{small, sw_of_order, Ordering};

/// `C_i = sep_{2r}(w_{i-1} / S_{i-1}) ∪ {v_i}` where `S_i` is the prefix of
/// length `i` of the order.
#[derive(Clone, Debug)]
pub struct MonotoneCops {
    g: SmallGraph,
    order: Ordering,
    r: Radius,
    budget: usize,
}

impl MonotoneCops {
    pub fn new(g: &Graph, r: Radius, order: Ordering) -> Result<MonotoneCops> {
        let budget = sw_of_order(g, &order, r.scale(2))?.value + 1;
        Ok(MonotoneCops { g: small(g)?, order, r, budget })
    }

    /// `sw_{2r}` of the order plus one: never exceeded by the strategy.
    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn order(&self) -> &Ordering {
        &self.order
    }
}

impl CopStrategy for MonotoneCops {
    fn cops(&self, _: &Graph, start: usize, rounds: &[Round]) -> Result<VertexSet> {
        let i = rounds.len() + 1;
        let n = self.g.n;
        let w = rounds.last().map_or(start, |r| r.position);
        let prefix = self.order.prefix_mask((i - 1).min(n));
        let mut cops = self.g.sep(w, prefix & !(1 << w), self.r.scale(2));
        if i <= n {
            cops |= 1 << self.order.vertex_at(i - 1);
        }
        Ok(set_of(cops))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Certification {
    /// True iff the cops win on every branch.
    pub certified: bool,
    /// The first branch the cops do not win.
    pub counter: Option<GameTranscript>,
    pub leaves: u64,
}

pub(crate) const CERTIFY_MAX_N: usize = 10;

/// Plays a deterministic cop strategy against every robber: every start and
/// every reachable endpoint in every round, for at most `n` rounds.
pub fn adversarial_robber_certify(g: &Graph, r: Radius, cops: &dyn CopStrategy, k: usize) -> Result<Certification> {
    adversarial_robber_certify_with(g, r, cops, k, g.n(), &mut |_| Ok(()))
}

/// As [`adversarial_robber_certify`], calling `on_leaf` with every finished
/// game; an error from the callback aborts the search.
pub fn adversarial_robber_certify_with(
    g: &Graph,
    r: Radius,
    cops: &dyn CopStrategy,
    k: usize,
    max_rounds: usize,
    on_leaf: &mut dyn FnMut(&GameTranscript) -> Result<()>,
) -> Result<Certification> {
    if g.n() > CERTIFY_MAX_N {
        return Err(Error::CapExceeded { what: "certification game tree vertices", got: g.n(), cap: CERTIFY_MAX_N });
    }
    let mut search = Search { g, r, k, cops, on_leaf, leaves: 0, counter: None };
    for start in g.vertices() {
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
        if !search.explore(&mut t)? {
            break;
        }
    }
    Ok(Certification { certified: search.counter.is_none(), counter: search.counter, leaves: search.leaves })
}

struct Search<'a> {
    g: &'a Graph,
    r: Radius,
    k: usize,
    cops: &'a dyn CopStrategy,
    on_leaf: &'a mut dyn FnMut(&GameTranscript) -> Result<()>,
    leaves: u64,
    counter: Option<GameTranscript>,
}

impl Search<'_> {
    fn leaf(&mut self, t: &GameTranscript) -> Result<bool> {
        self.leaves += 1;
        (self.on_leaf)(t)?;
        if t.winner != Winner::Cops {
            self.counter = Some(t.clone());
            return Ok(false);
        }
        Ok(true)
    }

    /// False once a counter-transcript is found.
    fn explore(&mut self, t: &mut GameTranscript) -> Result<bool> {
        if t.rounds.len() == t.max_rounds {
            t.winner = Winner::Timeout;
            return self.leaf(t);
        }
        let announced = self.cops.cops(self.g, t.start, &t.rounds)?;
        if let Some(problem) = check_cops(self.g, self.k, &announced) {
            t.winner = Winner::Robber;
            t.forfeit = Some(problem);
            let keep_going = self.leaf(t)?;
            t.forfeit = None;
            return Ok(keep_going);
        }
        let previous = t.rounds.last().map(|x| x.cops.clone()).unwrap_or_default();
        let from = t.rounds.last().map_or(t.start, |x| x.position);
        for (position, path) in robber_options(self.g, self.r, from, &announced.intersection(&previous)) {
            let caught = announced.contains(position);
            t.rounds.push(Round { cops: announced.clone(), path, position });
            let keep_going = if caught {
                t.winner = Winner::Cops;
                self.leaf(t)?
            } else {
                self.explore(t)?
            };
            t.rounds.pop();
            if !keep_going {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Checks the monotone strategy's invariants on one finished game: in round
/// `i` the cops stand in `v_1..v_i` and the robber in `v_{i+1}..v_n`, and
/// the robber never stands where a cop stood in an earlier round.
pub fn monotone_invariants(order: &Ordering, t: &GameTranscript) -> std::result::Result<(), String> {
    if t.rounds.len() > t.n {
        return Err(format!("game lasted {} rounds on {} vertices", t.rounds.len(), t.n));
    }
    let mut earlier = 0u64;
    for (idx, round) in t.rounds.iter().enumerate() {
        let i = idx + 1;
        let prefix = order.prefix_mask(i);
        if let Some(c) = round.cops.iter().find(|&c| prefix >> c & 1 == 0) {
            return Err(format!("round {i}: cop at {c} is outside v_1..v_{i}"));
        }
        let caught = round.cops.contains(round.position);
        if !caught && prefix >> round.position & 1 == 1 {
            return Err(format!("round {i}: robber at {} inside v_1..v_{i}", round.position));
        }
        if earlier >> round.position & 1 == 1 {
            return Err(format!("round {i}: robber at {} where a cop stood earlier", round.position));
        }
        for c in round.cops.iter() {
            earlier |= 1 << c;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;
    use crate::widths::sep_set;

    fn certify_monotone(g: &Graph, r: Radius, order: Ordering) -> Certification {
        let cops = MonotoneCops::new(g, r, order.clone()).unwrap();
        let mut check = |t: &GameTranscript| monotone_invariants(&order, t).map_err(Error::Strategy);
        adversarial_robber_certify_with(g, r, &cops, cops.budget(), g.n(), &mut check).unwrap()
    }

    #[test]
    fn k1_and_edgeless() {
        let c = certify_monotone(&Graph::empty(1), Radius::Finite(1), Ordering::identity(1));
        assert!(c.certified);
        let cops = MonotoneCops::new(&Graph::empty(5), Radius::Finite(1), Ordering::identity(5)).unwrap();
        assert_eq!(cops.budget(), 1);
        assert!(certify_monotone(&Graph::empty(5), Radius::Finite(1), Ordering::identity(5)).certified);
    }

    #[test]
    fn path_needs_two_and_clique_needs_n() {
        for n in 2..=7 {
            let g = generate::path(n);
            let cops = MonotoneCops::new(&g, Radius::Finite(1), Ordering::identity(n)).unwrap();
            assert_eq!(cops.budget(), 2);
            assert!(certify_monotone(&g, Radius::Finite(1), Ordering::identity(n)).certified);
        }
        let g = generate::complete(5);
        assert_eq!(MonotoneCops::new(&g, Radius::Finite(1), Ordering::identity(5)).unwrap().budget(), 5);
        assert!(certify_monotone(&g, Radius::Finite(1), Ordering::identity(5)).certified);
    }

    #[test]
    fn p4_within_four_rounds() {
        let g = generate::path(4);
        let order = Ordering::identity(4);
        let cops = MonotoneCops::new(&g, Radius::Finite(1), order).unwrap();
        let mut longest = 0;
        let mut note = |t: &GameTranscript| {
            longest = longest.max(t.rounds.len());
            Ok(())
        };
        let c = adversarial_robber_certify_with(&g, Radius::Finite(1), &cops, cops.budget(), 4, &mut note).unwrap();
        assert!(c.certified);
        assert!(longest <= 4);
    }

    #[test]
    fn random_graphs_and_orders() {
        for seed in 0..25 {
            let g = generate::gnp(6, 0.4, seed);
            let order = Ordering::new(generate::random_permutation(6, seed)).unwrap();
            for r in [Radius::Finite(1), Radius::Finite(2)] {
                assert!(certify_monotone(&g, r, order.clone()).certified, "seed {seed} r {r}");
            }
        }
    }

    #[test]
    fn crippled_strategy_is_caught_out() {
        let g = generate::cycle(4);
        let order = Ordering::identity(4);
        let r = Radius::Finite(1);
        let crippled = |g: &Graph, start: usize, rounds: &[Round]| {
            let i = rounds.len() + 1;
            let w = rounds.last().map_or(start, |x| x.position);
            let prefix: VertexSet = order.as_slice()[..(i - 1).min(4)].iter().copied().filter(|&v| v != w).collect();
            sep_set(g, w, &prefix, r.scale(2))
        };
        let c = adversarial_robber_certify(&g, r, &crippled, 3).unwrap();
        assert!(!c.certified);
        let counter = c.counter.unwrap();
        assert_ne!(counter.winner, Winner::Cops);
        crate::games::replay(&g, &counter).unwrap();
    }
}
