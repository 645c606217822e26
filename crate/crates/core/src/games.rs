//! The letter game between an automaton and a deterministic reference for
//! its language, a Rabin game solver, strategy extraction and an
//! exhaustive search over small transducers.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::acceptance::{Acceptance, GeneralCondition, Pair};
use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::lasso::Lasso;
use crate::oracles::{self, Verdict};
use crate::stateset::StateSet;
use crate::strategy::{self, StrategyTransducer};

/// Default bound on the number of (state, reference state) products.
pub const DEFAULT_ARENA_BUDGET: usize = 100_000;

/// Default bound on the transducer count of [`brute_force_gfg`].
pub const DEFAULT_BRUTE_BUDGET: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Player {
    Eve,
    Adam,
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Eve => "Eve",
            Player::Adam => "Adam",
        })
    }
}

/// What a node of the letter game stands for. States index the completed
/// automaton and the completed reference.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Position {
    /// Eve picks the initial automaton state.
    Start,
    /// Adam picks the next letter.
    Letter { state: usize, reference: usize },
    /// Eve picks an automaton transition on `letter`.
    Choice { state: usize, reference: usize, letter: usize },
}

/// A finite two-player arena with a Rabin condition for Eve over the
/// nodes visited infinitely often.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameArena {
    owner: Vec<Player>,
    succ: Vec<Vec<usize>>,
    initial: usize,
    pairs: Vec<Pair>,
    positions: Vec<Position>,
    automaton: Option<Automaton>,
    reference: Option<Automaton>,
}

impl GameArena {
    /// A plain arena. Every node needs a successor.
    pub fn new(owner: Vec<Player>, succ: Vec<Vec<usize>>, initial: usize, pairs: Vec<Pair>) -> Result<Self> {
        let n = owner.len();
        if succ.len() != n || initial >= n {
            return Err(Error::Precondition("arena tables have mismatched sizes".into()));
        }
        if let Some(v) = succ.iter().position(|s| s.is_empty() || s.iter().any(|&w| w >= n)) {
            return Err(Error::Precondition(format!("node {v} has no valid successor")));
        }
        Ok(GameArena {
            owner,
            succ,
            initial,
            pairs,
            positions: Vec::new(),
            automaton: None,
            reference: None,
        })
    }

    pub fn num_nodes(&self) -> usize {
        self.owner.len()
    }

    pub fn owner(&self, v: usize) -> Player {
        self.owner[v]
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    /// Eve's Rabin pairs.
    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    /// Node meanings for letter games; empty for plain arenas.
    pub fn positions(&self) -> &[Position] {
        &self.positions
    }

    pub fn count(&self, player: Player) -> usize {
        self.owner.iter().filter(|&&p| p == player).count()
    }

    fn predecessors(&self) -> Vec<Vec<usize>> {
        crate::graph::reverse(&self.succ)
    }

    /// The attractor of `target` for `player` inside the subgame `region`,
    /// with a choice for each of the player's nodes added on the way.
    fn attractor(
        &self,
        preds: &[Vec<usize>],
        region: &StateSet,
        target: &StateSet,
        player: Player,
    ) -> (StateSet, Vec<(usize, usize)>) {
        let mut attr = target.intersection(region);
        let mut choices = Vec::new();
        let mut remaining: HashMap<usize, usize> = HashMap::new();
        let mut queue: VecDeque<usize> = attr.iter().collect();
        while let Some(w) = queue.pop_front() {
            for &v in &preds[w] {
                if !region.contains(v) || attr.contains(v) {
                    continue;
                }
                let enter = if self.owner[v] == player {
                    choices.push((v, w));
                    true
                } else {
                    let left = remaining
                        .entry(v)
                        .or_insert_with(|| self.succ[v].iter().filter(|&&x| region.contains(x)).count());
                    *left -= 1;
                    *left == 0
                };
                if enter {
                    attr.insert(v);
                    queue.push_back(v);
                }
            }
        }
        (attr, choices)
    }

    /// Eve's winning region inside the subgame `region` for the Rabin
    /// condition `pairs`; fills `strategy` for Eve's nodes in it.
    fn rabin_region(
        &self,
        preds: &[Vec<usize>],
        region: &StateSet,
        pairs: &[Pair],
        strategy: &mut [Option<usize>],
    ) -> StateSet {
        if pairs.is_empty() || region.is_empty() {
            return StateSet::new();
        }
        let mut won = StateSet::new();
        loop {
            let (attr, choices) = self.attractor(preds, region, &won, Player::Eve);
            for (v, w) in choices {
                strategy[v] = Some(w);
            }
            let won_attr = attr;
            let rest = region.difference(&won_attr);
            let mut found = None;
            for (i, pair) in pairs.iter().enumerate() {
                let (avoid, _) = self.attractor(preds, &rest, &pair.bad, Player::Adam);
                let mut x = rest.difference(&avoid);
                let others: Vec<Pair> = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, p)| p.clone())
                    .collect();
                while !x.is_empty() {
                    let good = pair.good.intersection(&x);
                    let (reach, choices) = self.attractor(preds, &x, &good, Player::Eve);
                    let y = x.difference(&reach);
                    let wy = self.rabin_region(preds, &y, &others, strategy);
                    let lost = y.difference(&wy);
                    if lost.is_empty() {
                        for (v, w) in choices {
                            strategy[v] = Some(w);
                        }
                        for v in good.iter().filter(|&v| self.owner[v] == Player::Eve) {
                            strategy[v] = self.succ[v].iter().copied().find(|&w| x.contains(w));
                        }
                        break;
                    }
                    let (gone, _) = self.attractor(preds, &x, &lost, Player::Adam);
                    x = x.difference(&gone);
                }
                if !x.is_empty() {
                    found = Some(x);
                    break;
                }
            }
            match found {
                Some(x) => won = won_attr.union(&x),
                None => return won_attr,
            }
        }
    }

    /// Eve's winning region by trying every memoryless Eve strategy.
    /// Exponential; meant for arenas of a dozen nodes.
    pub fn brute_force_region(&self, max_strategies: u128) -> Result<StateSet> {
        let n = self.num_nodes();
        let options: Vec<&[usize]> = (0..n)
            .map(|v| match self.owner[v] {
                Player::Eve => &self.succ[v][..],
                Player::Adam => &[][..],
            })
            .collect();
        let total = options
            .iter()
            .filter(|o| !o.is_empty())
            .fold(1u128, |acc, o| acc.saturating_mul(o.len() as u128));
        if total > max_strategies {
            return Err(Error::BudgetExceeded {
                needed: total,
                budget: max_strategies,
            });
        }
        let losing = self.losing_condition(n);
        let full = StateSet::full(n);
        let regions: Vec<StateSet> = (0..total as u64)
            .into_par_iter()
            .map(|mut idx| {
                let succ: Vec<Vec<usize>> = (0..n)
                    .map(|v| {
                        if options[v].is_empty() {
                            self.succ[v].clone()
                        } else {
                            let k = options[v].len() as u64;
                            let pick = options[v][(idx % k) as usize];
                            idx /= k;
                            vec![pick]
                        }
                    })
                    .collect();
                let bad: StateSet = (0..n)
                    .filter(|&v| oracles::accepting_cycle_set(&succ, &full, &losing, Some(v)).is_some())
                    .collect();
                let adam = crate::graph::reachable(&crate::graph::reverse(&succ), &bad, None);
                adam.complement(n)
            })
            .collect();
        Ok(regions.iter().fold(StateSet::new(), |acc, r| acc.union(r)))
    }

    /// The inf-sets on which Eve loses.
    fn losing_condition(&self, n: usize) -> GeneralCondition {
        let swapped = self.pairs.iter().map(Pair::swapped).collect();
        GeneralCondition::from_acceptance(&Acceptance::Streett(swapped), n)
    }

    /// Checks that Eve's choices keep every play from `region` inside it
    /// and winning.
    pub fn is_winning_strategy(&self, region: &StateSet, strategy: &[Option<usize>]) -> bool {
        let n = self.num_nodes();
        let mut succ = vec![Vec::new(); n];
        for v in region.iter() {
            match self.owner[v] {
                Player::Eve => match strategy[v] {
                    Some(w) if region.contains(w) && self.succ[v].contains(&w) => succ[v].push(w),
                    _ => return false,
                },
                Player::Adam => {
                    if self.succ[v].iter().any(|&w| !region.contains(w)) {
                        return false;
                    }
                    succ[v] = self.succ[v].clone();
                }
            }
        }
        oracles::accepting_cycle_set(&succ, region, &self.losing_condition(n), None).is_none()
    }
}

/// The outcome of solving a game from its initial node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameVerdict {
    pub winner: Player,
    pub eve_region: StateSet,
    /// Eve's memoryless choice at each of her nodes in her region.
    pub strategy: Vec<Option<usize>>,
}

impl GameVerdict {
    /// Adam's winning region.
    pub fn adam_region(&self, arena: &GameArena) -> StateSet {
        self.eve_region.complement(arena.num_nodes())
    }
}

/// Builds the letter game of `a` against the deterministic reference
/// `dref`. Eve wins a play iff the reference run rejects or the automaton
/// run accepts. Only positions reachable from the start are built.
pub fn build_letter_game(a: &Automaton, dref: &Automaton, budget: usize) -> Result<GameArena> {
    oracles::require_deterministic(dref)?;
    if a.alphabet() != dref.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let (ac, _) = a.completed();
    let (dc, _) = dref.completed();
    let needed = ac.num_states() * dc.num_states();
    if needed > budget {
        return Err(Error::BudgetExceeded {
            needed: needed as u128,
            budget: budget as u128,
        });
    }
    let own = ac.acceptance().rabin_pairs(ac.num_states()).ok_or_else(|| {
        Error::Unsupported(format!(
            "{} automaton; use brute_force_gfg",
            a.acceptance().kind().display_name()
        ))
    })?;
    let dual = dc.acceptance().negation().rabin_pairs(dc.num_states()).ok_or_else(|| {
        Error::Unsupported(format!(
            "{} reference; its dual has no Rabin form",
            dref.acceptance().kind().display_name()
        ))
    })?;
    let d0 = dc.initial().first().expect("reference has an initial state");

    let mut positions = vec![Position::Start];
    let mut index: HashMap<Position, usize> = HashMap::new();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new()];
    let mut queue = VecDeque::new();
    let mut intern = |p: Position, positions: &mut Vec<Position>, succ: &mut Vec<Vec<usize>>, queue: &mut VecDeque<usize>| {
        *index.entry(p).or_insert_with(|| {
            positions.push(p);
            succ.push(Vec::new());
            queue.push_back(positions.len() - 1);
            positions.len() - 1
        })
    };
    for q in ac.initial().iter() {
        let v = intern(Position::Letter { state: q, reference: d0 }, &mut positions, &mut succ, &mut queue);
        succ[0].push(v);
    }
    while let Some(v) = queue.pop_front() {
        match positions[v] {
            Position::Start => {}
            Position::Letter { state, reference } => {
                for letter in 0..ac.num_letters() {
                    let w = intern(Position::Choice { state, reference, letter }, &mut positions, &mut succ, &mut queue);
                    succ[v].push(w);
                }
            }
            Position::Choice { state, reference, letter } => {
                let d = dc.successors(reference, letter)[0];
                for &q in ac.successors(state, letter) {
                    let w = intern(Position::Letter { state: q, reference: d }, &mut positions, &mut succ, &mut queue);
                    succ[v].push(w);
                }
            }
        }
    }
    let owner = positions
        .iter()
        .map(|p| match p {
            Position::Letter { .. } => Player::Adam,
            _ => Player::Eve,
        })
        .collect();
    let lift = |pick: &dyn Fn(&Position) -> Option<usize>, s: &StateSet| -> StateSet {
        (0..positions.len())
            .filter(|&v| pick(&positions[v]).is_some_and(|x| s.contains(x)))
            .collect()
    };
    let ref_of = |p: &Position| match *p {
        Position::Letter { reference, .. } | Position::Choice { reference, .. } => Some(reference),
        Position::Start => None,
    };
    let state_of = |p: &Position| match *p {
        Position::Letter { state, .. } | Position::Choice { state, .. } => Some(state),
        Position::Start => None,
    };
    let pairs = dual
        .iter()
        .map(|p| Pair::new(lift(&ref_of, &p.bad), lift(&ref_of, &p.good)))
        .chain(own.iter().map(|p| Pair::new(lift(&state_of, &p.bad), lift(&state_of, &p.good))))
        .collect();
    Ok(GameArena {
        owner,
        succ,
        initial: 0,
        pairs,
        positions,
        automaton: Some(ac),
        reference: Some(dc),
    })
}

/// Solves a Rabin game for Eve by recursive pair elimination.
pub fn solve_rabin_game(arena: &GameArena) -> GameVerdict {
    let n = arena.num_nodes();
    let preds = arena.predecessors();
    let mut strategy = vec![None; n];
    let eve_region = arena.rabin_region(&preds, &StateSet::full(n), &arena.pairs, &mut strategy);
    for (v, s) in strategy.iter_mut().enumerate() {
        if !eve_region.contains(v) || arena.owner[v] != Player::Eve {
            *s = None;
        }
    }
    let winner = if eve_region.contains(arena.initial) {
        Player::Eve
    } else {
        Player::Adam
    };
    GameVerdict {
        winner,
        eve_region,
        strategy,
    }
}

/// Reads Eve's winning letter-game strategy as a transducer for `a`: one
/// memory per Adam node reachable under the strategy, named `q@d`. Steps
/// into the completion sink are left undefined.
pub fn extract_strategy(arena: &GameArena, verdict: &GameVerdict, a: &Automaton) -> Result<StrategyTransducer> {
    if verdict.winner != Player::Eve {
        return Err(Error::AdamWins);
    }
    let (ac, dc) = match (&arena.automaton, &arena.reference) {
        (Some(ac), Some(dc)) => (ac, dc),
        _ => return Err(Error::Precondition("not a letter game".into())),
    };
    if ac.alphabet() != a.alphabet() || ac.states()[..a.num_states()] != *a.states() {
        return Err(Error::Precondition(format!("letter game was not built for {}", a.name())));
    }
    let choose = |v: usize| {
        verdict.strategy[v].ok_or_else(|| Error::Internal(format!("no Eve choice at node {v}")))
    };
    let start = choose(arena.initial)?;
    let mut order = vec![start];
    let mut seen = HashMap::from([(start, 0usize)]);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &c in &arena.succ[v] {
            let w = choose(c)?;
            if let Position::Letter { state, .. } = arena.positions[w] {
                if state < a.num_states() && !seen.contains_key(&w) {
                    seen.insert(w, order.len());
                    order.push(w);
                }
            }
        }
        i += 1;
    }
    let mut names = Vec::new();
    let mut used = HashSet::new();
    let mut tau = Vec::new();
    for &v in &order {
        let Position::Letter { state, reference } = arena.positions[v] else {
            return Err(Error::Internal("memory is not an Adam node".into()));
        };
        let mut name = format!("{}@{}", ac.state_name(state), dc.state_name(reference));
        while !used.insert(name.clone()) {
            name.push('\'');
        }
        names.push(name);
        tau.push(state);
    }
    let rho = order
        .iter()
        .map(|&v| {
            arena.succ[v]
                .iter()
                .map(|&c| choose(c).map(|w| seen.get(&w).copied()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let g = StrategyTransducer::new(format!("{}_game", a.name()), a.name(), names, 0, tau, rho)?;
    g.validate(a)?;
    Ok(g)
}

/// What a candidate transducer is checked against in [`brute_force_gfg`].
#[derive(Clone, Copy, Debug)]
pub enum GfgReference<'r> {
    /// A deterministic automaton for the language of `a`.
    Deterministic(&'r Automaton),
    /// Lassos with their expected membership.
    Witnesses(&'r [(Lasso, bool)]),
}

/// The number of transducers with at most `bound` memories over `a`.
pub fn brute_force_size(a: &Automaton, bound: usize) -> u128 {
    let (q, k) = (a.num_states() as u128, a.num_letters() as u32);
    (1..=bound as u128).fold(0u128, |acc, s| {
        let steps = s.saturating_pow((s as u32).saturating_mul(k));
        acc.saturating_add(steps.saturating_mul(q.saturating_pow(s as u32)))
    })
}

/// Searches transducers with up to `bound` memories, smallest first, for
/// one whose composition with `a` passes the reference check.
pub fn brute_force_gfg(
    a: &Automaton,
    bound: usize,
    reference: GfgReference<'_>,
    budget: u128,
) -> Result<Option<StrategyTransducer>> {
    let needed = brute_force_size(a, bound);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    if let GfgReference::Deterministic(d) = reference {
        oracles::require_deterministic(d)?;
        if d.alphabet() != a.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
    }
    let n = a.num_states();
    for s in 1..=bound {
        let names: Vec<String> = (0..s).map(|i| format!("m{i}")).collect();
        // τ vectors in lexicographic order, first memory most significant
        for idx in 0..n.pow(s as u32) {
            let tau: Vec<usize> = (0..s).map(|i| idx / n.pow((s - 1 - i) as u32) % n).collect();
            if !a.initial().contains(tau[0]) {
                continue;
            }
            if let Some(g) = search_steps(a, &names, &tau, reference)? {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

fn search_steps(
    a: &Automaton,
    names: &[String],
    tau: &[usize],
    reference: GfgReference<'_>,
) -> Result<Option<StrategyTransducer>> {
    let s = tau.len();
    let k = a.num_letters();
    let mut options: Vec<Vec<Option<usize>>> = Vec::with_capacity(s * k);
    for m in 0..s {
        for l in 0..k {
            let targets = a.successors(tau[m], l);
            if targets.is_empty() {
                options.push(vec![None]);
                continue;
            }
            let opts: Vec<Option<usize>> = (0..s).filter(|&m2| targets.contains(&tau[m2])).map(Some).collect();
            if opts.is_empty() {
                return Ok(None);
            }
            options.push(opts);
        }
    }
    let total = options.iter().fold(1u128, |acc, o| acc.saturating_mul(o.len() as u128));
    let total = u64::try_from(total).map_err(|_| Error::BudgetExceeded {
        needed: total,
        budget: u64::MAX as u128,
    })?;
    let hit = (0..total)
        .into_par_iter()
        .map(|mut idx| {
            let mut rho = vec![vec![None; k]; s];
            for (slot, opts) in options.iter().enumerate() {
                let len = opts.len() as u64;
                rho[slot / k][slot % k] = opts[(idx % len) as usize];
                idx /= len;
            }
            let g = StrategyTransducer::new(format!("{}_bf", a.name()), a.name(), names.to_vec(), 0, tau.to_vec(), rho)?;
            Ok(passes(a, &g, reference)?.then_some(g))
        })
        .find_first(|r: &Result<Option<StrategyTransducer>>| !matches!(r, Ok(None)));
    hit.transpose().map(Option::flatten)
}

fn passes(a: &Automaton, g: &StrategyTransducer, reference: GfgReference<'_>) -> Result<bool> {
    let ag = strategy::compose(a, g)?;
    Ok(match reference {
        GfgReference::Deterministic(d) => {
            oracles::contained_in_deterministic(&ag.automaton, d)? == Verdict::Holds
                && oracles::contained_in_deterministic(d, &ag.automaton)? == Verdict::Holds
        }
        GfgReference::Witnesses(w) => oracles::separated_by_witnesses(&ag.automaton, w).is_none(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfgConfig {
    pub arena_budget: usize,
    /// Lasso bound for the checks on the reference and the strategy.
    pub bound: usize,
}

impl Default for GfgConfig {
    fn default() -> Self {
        GfgConfig {
            arena_budget: DEFAULT_ARENA_BUDGET,
            bound: 4,
        }
    }
}

/// The full letter-game check of `a` against `dref`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameReport {
    pub winner: Player,
    pub adam_nodes: usize,
    pub eve_nodes: usize,
    /// `L(a) ⊆ L(dref)`, exact.
    pub automaton_in_reference: Verdict,
    /// `L(dref) ⊆ L(a)`, bounded.
    pub reference_in_automaton: Verdict,
    pub strategy: Option<StrategyTransducer>,
    /// First residual mismatch of the extracted strategy: memory and lasso.
    pub residual_mismatch: Option<(String, Lasso)>,
    /// `L(A_g)` against `L(dref)`, bounded.
    pub strategy_language: Option<Verdict>,
}

pub fn check_gfg(a: &Automaton, dref: &Automaton, config: &GfgConfig) -> Result<GameReport> {
    let arena = build_letter_game(a, dref, config.arena_budget)?;
    let automaton_in_reference = oracles::contained_in_deterministic(a, dref)?;
    let reference_in_automaton = oracles::bounded_containment(dref, a, config.bound)?;
    let verdict = solve_rabin_game(&arena);
    let mut report = GameReport {
        winner: verdict.winner,
        adam_nodes: arena.count(Player::Adam),
        eve_nodes: arena.count(Player::Eve),
        automaton_in_reference,
        reference_in_automaton,
        strategy: None,
        residual_mismatch: None,
        strategy_language: None,
    };
    if verdict.winner == Player::Eve {
        let g = extract_strategy(&arena, &verdict, a)?;
        report.residual_mismatch = strategy::residual_check(a, &g, config.bound)?
            .map(|(m, w)| (g.memory_name(m).to_string(), w));
        let ag = strategy::compose(a, &g)?;
        report.strategy_language = Some(oracles::bounded_equiv(&ag.automaton, dref, config.bound)?);
        report.strategy = Some(g);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a0() -> Automaton {
        Automaton::builder("a0")
            .alphabet(["a", "b"])
            .states(["q0", "q1", "q2"])
            .initial(["q2"])
            .transitions([
                "q2 b q2", "q2 a q1", "q1 a q1", "q1 a q2", "q1 b q0", "q0 b q0", "q0 a q1",
            ])
            .parity([("q0", 0), ("q1", 1), ("q2", 2)])
            .build()
            .unwrap()
    }

    fn dbw_l0() -> Automaton {
        Automaton::builder("dbw_l0")
            .alphabet(["a", "b"])
            .states(["s0", "s1"])
            .initial(["s0"])
            .transitions(["s0 a s0", "s0 b s1", "s1 a s0", "s1 b s1"])
            .buchi(["s1"])
            .build()
            .unwrap()
    }

    #[test]
    fn one_pair_cycle() {
        // two-node cycle, Eve owns both; F = {1}, E = {} vs E = {0}
        let succ = vec![vec![1], vec![0]];
        let owner = vec![Player::Eve, Player::Adam];
        let win = GameArena::new(owner.clone(), succ.clone(), 0, vec![Pair::new(StateSet::new(), StateSet::singleton(1))]).unwrap();
        assert_eq!(solve_rabin_game(&win).winner, Player::Eve);
        let lose = GameArena::new(owner, succ, 0, vec![Pair::new(StateSet::singleton(0), StateSet::singleton(1))]).unwrap();
        assert_eq!(solve_rabin_game(&lose).winner, Player::Adam);
    }

    #[test]
    fn eve_confines_to_good_loop() {
        // 0 (Eve) -> 1 or 2; 1 self-loop bad, 2 self-loop good
        let arena = GameArena::new(
            vec![Player::Eve, Player::Adam, Player::Adam],
            vec![vec![1, 2], vec![1], vec![2]],
            0,
            vec![Pair::new(StateSet::singleton(1), StateSet::singleton(2))],
        )
        .unwrap();
        let v = solve_rabin_game(&arena);
        assert_eq!(v.winner, Player::Eve);
        assert_eq!(v.strategy[0], Some(2));
        assert!(arena.is_winning_strategy(&v.eve_region, &v.strategy));
        assert_eq!(arena.brute_force_region(1000).unwrap(), v.eve_region);
    }

    #[test]
    fn a0_is_gfg() {
        let a = a0();
        let arena = build_letter_game(&a, &dbw_l0(), DEFAULT_ARENA_BUDGET).unwrap();
        assert!(arena.count(Player::Adam) <= 6);
        let v = solve_rabin_game(&arena);
        assert_eq!(v.winner, Player::Eve);
        assert!(arena.is_winning_strategy(&v.eve_region, &v.strategy));
        let g = extract_strategy(&arena, &v, &a).unwrap();
        assert!(g.num_memories() <= 6);
        assert_eq!(strategy::residual_check(&a, &g, 4).unwrap(), None);
    }

    #[test]
    fn deterministic_against_itself() {
        let d = dbw_l0();
        let arena = build_letter_game(&d, &d, DEFAULT_ARENA_BUDGET).unwrap();
        let v = solve_rabin_game(&arena);
        let g = extract_strategy(&arena, &v, &d).unwrap();
        assert_eq!(g.memories(), ["s0@s0", "s1@s1"]);
        let id = StrategyTransducer::identity(&d).unwrap();
        assert_eq!(g.tau(), id.tau());
        for m in 0..2 {
            for l in 0..2 {
                assert_eq!(g.step(m, l), id.step(m, l));
            }
        }
    }

    #[test]
    fn brute_force_finds_a0_strategy() {
        let a = a0();
        let d = dbw_l0();
        let g = brute_force_gfg(&a, 4, GfgReference::Deterministic(&d), DEFAULT_BRUTE_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(g.num_memories(), 3);
        let id = brute_force_gfg(&d, 1, GfgReference::Deterministic(&d), DEFAULT_BRUTE_BUDGET).unwrap();
        assert!(id.is_none(), "two states need two memories");
        let id = brute_force_gfg(&d, 2, GfgReference::Deterministic(&d), DEFAULT_BRUTE_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(id.tau(), [0, 1]);
    }

    #[test]
    fn budget_is_checked() {
        assert!(matches!(
            brute_force_gfg(&a0(), 6, GfgReference::Witnesses(&[]), 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
