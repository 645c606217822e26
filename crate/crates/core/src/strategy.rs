//! Strategy transducers, the composed automaton `A_g`, and predicates
//! relative to a strategy: used transitions, replaceability, tightness and
//! exclusive accepting cycles.

use std::fmt;

use crate::acceptance::{Acceptance, GeneralCondition};
use crate::automaton::{Automaton, Transition};
use crate::error::{Error, Result};
use crate::graph::{self, Region};
use crate::lasso::Lasso;
use crate::oracles::{self, Verdict};
use crate::stateset::StateSet;

/// A finite-memory strategy `(M, m0, ρ, τ)` resolving the nondeterminism
/// of an automaton. `ρ` may be partial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyTransducer {
    name: String,
    automaton: String,
    memories: Vec<String>,
    initial: usize,
    tau: Vec<usize>,
    // [memory][letter]
    rho: Vec<Vec<Option<usize>>>,
}

impl StrategyTransducer {
    /// Builds a transducer for `a` from names: `memories` pairs each memory
    /// with its output state, `steps` are `"m letter m'"` strings.
    pub fn from_names<'a>(
        name: impl Into<String>,
        a: &Automaton,
        memories: impl IntoIterator<Item = (&'a str, &'a str)>,
        initial: &str,
        steps: impl IntoIterator<Item = &'a str>,
    ) -> Result<Self> {
        let mut names = Vec::new();
        let mut tau = Vec::new();
        for (m, q) in memories {
            names.push(m.to_string());
            tau.push(
                a.state_index(q)
                    .ok_or_else(|| Error::InvalidStrategy(format!("memory {m} outputs unknown state '{q}'")))?,
            );
        }
        let mem = |m: &str| {
            names
                .iter()
                .position(|x| x == m)
                .ok_or_else(|| Error::InvalidStrategy(format!("unknown memory '{m}'")))
        };
        let m0 = mem(initial)?;
        let mut rho = vec![vec![None; a.num_letters()]; names.len()];
        for step in steps {
            let parts: Vec<&str> = step.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(Error::InvalidStrategy(format!("step '{step}' must have three fields")));
            }
            let l = a
                .letter_index(parts[1])
                .ok_or_else(|| Error::InvalidStrategy(format!("unknown letter '{}'", parts[1])))?;
            let (from, to) = (mem(parts[0])?, mem(parts[2])?);
            if rho[from][l].replace(to).is_some() {
                return Err(Error::InvalidStrategy(format!("step for ({}, {}) given twice", parts[0], parts[1])));
            }
        }
        let g = StrategyTransducer::new(name, a.name(), names, m0, tau, rho)?;
        g.validate(a)?;
        Ok(g)
    }

    pub fn new(
        name: impl Into<String>,
        automaton: impl Into<String>,
        memories: Vec<String>,
        initial: usize,
        tau: Vec<usize>,
        rho: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let k = memories.len();
        if k == 0 || initial >= k {
            return Err(Error::InvalidStrategy("initial memory missing".into()));
        }
        if tau.len() != k || rho.len() != k {
            return Err(Error::InvalidStrategy("memory tables have mismatched sizes".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for m in &memories {
            if m.is_empty() || m.contains(char::is_whitespace) || m.contains(':') || !seen.insert(m) {
                return Err(Error::InvalidStrategy(format!("invalid or duplicate memory name '{m}'")));
            }
        }
        if rho.iter().flatten().flatten().any(|&m| m >= k) {
            return Err(Error::InvalidStrategy("step leads to an unknown memory".into()));
        }
        Ok(StrategyTransducer {
            name: name.into(),
            automaton: automaton.into(),
            memories,
            initial,
            tau,
            rho,
        })
    }

    /// The strategy of a deterministic automaton: one memory per state.
    pub fn identity(a: &Automaton) -> Result<Self> {
        oracles::require_deterministic(a)?;
        let rho = (0..a.num_states())
            .map(|q| (0..a.num_letters()).map(|l| a.successors(q, l).first().copied()).collect())
            .collect();
        StrategyTransducer::new(
            format!("{}_id", a.name()),
            a.name(),
            a.states().to_vec(),
            a.initial().first().expect("initial state"),
            (0..a.num_states()).collect(),
            rho,
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn automaton_name(&self) -> &str {
        &self.automaton
    }

    pub fn memories(&self) -> &[String] {
        &self.memories
    }

    pub fn num_memories(&self) -> usize {
        self.memories.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    pub fn step(&self, m: usize, letter: usize) -> Option<usize> {
        self.rho[m][letter]
    }

    pub fn memory_name(&self, m: usize) -> &str {
        &self.memories[m]
    }

    pub fn memory_index(&self, name: &str) -> Option<usize> {
        self.memories.iter().position(|m| m == name)
    }

    /// Memories whose output is `q`.
    pub fn memories_of(&self, q: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.memories.len()).filter(move |&m| self.tau[m] == q)
    }

    pub fn with_name(&self, name: impl Into<String>) -> Self {
        let mut g = self.clone();
        g.name = name.into();
        g
    }

    pub fn with_automaton_name(&self, name: impl Into<String>) -> Self {
        let mut g = self.clone();
        g.automaton = name.into();
        g
    }

    /// Checks the transducer against `a`: the initial memory outputs an
    /// initial state and every step follows a transition of `a`.
    pub fn validate(&self, a: &Automaton) -> Result<()> {
        if let Some(&q) = self.tau.iter().find(|&&q| q >= a.num_states()) {
            return Err(Error::InvalidStrategy(format!("output {q} is not a state of {}", a.name())));
        }
        if self.rho.iter().any(|row| row.len() != a.num_letters()) {
            return Err(Error::AlphabetMismatch);
        }
        if !a.initial().contains(self.tau[self.initial]) {
            return Err(Error::InvalidStrategy(format!(
                "initial memory {} outputs {}, which is not initial",
                self.memories[self.initial],
                a.state_name(self.tau[self.initial])
            )));
        }
        for m in 0..self.memories.len() {
            for l in 0..a.num_letters() {
                if let Some(m2) = self.rho[m][l] {
                    let t = Transition::new(self.tau[m], l, self.tau[m2]);
                    if !a.has_transition(&t) {
                        return Err(Error::IllFormedStrategy {
                            memory: self.memories[m].clone(),
                            letter: a.letter_name(l).into(),
                            reason: format!("{} is not a transition", a.transition_label(&t)),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Memories reachable from the initial memory.
    pub fn reachable(&self) -> StateSet {
        let succ: Vec<Vec<usize>> = self
            .rho
            .iter()
            .map(|row| row.iter().flatten().copied().collect())
            .collect();
        graph::reachable(&succ, &StateSet::singleton(self.initial), None)
    }

    /// Removes memory `m`, redirecting every step into `m` to `into`.
    pub fn merge(&self, m: usize, into: usize) -> Result<Self> {
        if m == into || self.tau[m] != self.tau[into] {
            return Err(Error::Precondition(format!(
                "cannot merge {} into {}",
                self.memories[m], self.memories[into]
            )));
        }
        let mut g = self.clone();
        for row in &mut g.rho {
            for s in row.iter_mut() {
                if *s == Some(m) {
                    *s = Some(into);
                }
            }
        }
        if g.initial == m {
            g.initial = into;
        }
        Ok(g.without_memories(&StateSet::singleton(m)))
    }

    /// Deletes the given memories; steps into them become undefined.
    pub fn without_memories(&self, removed: &StateSet) -> Self {
        let mut map = vec![None; self.memories.len()];
        let mut next = 0;
        for (m, slot) in map.iter_mut().enumerate() {
            if !removed.contains(m) {
                *slot = Some(next);
                next += 1;
            }
        }
        let keep = |m: &usize| !removed.contains(*m);
        StrategyTransducer {
            name: self.name.clone(),
            automaton: self.automaton.clone(),
            memories: (0..self.memories.len())
                .filter(keep)
                .map(|m| self.memories[m].clone())
                .collect(),
            initial: map[self.initial].expect("initial memory is kept"),
            tau: (0..self.memories.len()).filter(keep).map(|m| self.tau[m]).collect(),
            rho: (0..self.memories.len())
                .filter(keep)
                .map(|m| self.rho[m].iter().map(|s| s.and_then(|x| map[x])).collect())
                .collect(),
        }
    }

    /// Re-targets outputs after the owning automaton's states were
    /// renumbered through `map` (see [`Automaton::restrict_states`]).
    pub fn remap_states(&self, map: &[Option<usize>]) -> Result<Self> {
        let mut g = self.clone();
        for q in g.tau.iter_mut() {
            *q = map[*q].ok_or_else(|| Error::Precondition("strategy outputs a removed state".into()))?;
        }
        Ok(g)
    }
}

/// `A_g`: the deterministic automaton over memories, with the acceptance
/// condition of `a` pulled back through `τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposedAutomaton {
    pub automaton: Automaton,
    pub tau: Vec<usize>,
}

impl ComposedAutomaton {
    pub fn memory_name(&self, m: usize) -> &str {
        self.automaton.state_name(m)
    }

    /// Memories reachable from the initial memory.
    pub fn reachable(&self) -> StateSet {
        self.automaton.reachable_from_initial()
    }

    /// Reachable memories of state `q`.
    pub fn memories_of(&self, q: usize) -> StateSet {
        self.reachable().iter().filter(|&m| self.tau[m] == q).collect()
    }

    pub fn condition(&self) -> GeneralCondition {
        oracles::condition_of(&self.automaton)
    }
}

pub fn compose(a: &Automaton, g: &StrategyTransducer) -> Result<ComposedAutomaton> {
    g.validate(a)?;
    let mut transitions = Vec::new();
    for m in 0..g.num_memories() {
        for l in 0..a.num_letters() {
            if let Some(m2) = g.step(m, l) {
                transitions.push(Transition::new(m, l, m2));
            }
        }
    }
    let automaton = Automaton::new(
        format!("{}_{}", a.name(), g.name()),
        a.alphabet().to_vec(),
        g.memories().to_vec(),
        StateSet::singleton(g.initial()),
        transitions,
        a.acceptance().pullback(g.tau()),
    )?;
    Ok(ComposedAutomaton {
        automaton,
        tau: g.tau().to_vec(),
    })
}

/// Memories that can never be reached; predicates ignore them.
pub fn unreachable_memories(g: &StrategyTransducer) -> Vec<String> {
    let reach = g.reachable();
    (0..g.num_memories())
        .filter(|&m| !reach.contains(m))
        .map(|m| g.memory_name(m).to_string())
        .collect()
}

/// Reachable `(memory, letter)` pairs where `ρ` is undefined although the
/// automaton could move.
pub fn partiality_lint(a: &Automaton, g: &StrategyTransducer) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for m in g.reachable().iter() {
        for l in 0..a.num_letters() {
            if g.step(m, l).is_none() && !a.successors(g.tau()[m], l).is_empty() {
                out.push((g.memory_name(m).to_string(), a.letter_name(l).to_string()));
            }
        }
    }
    out
}

/// Transitions of `a` realized by `g` from reachable memories, in the
/// declaration order of `a`.
pub fn used_transitions(a: &Automaton, g: &StrategyTransducer) -> Result<Vec<Transition>> {
    g.validate(a)?;
    let mut used = std::collections::HashSet::new();
    for m in g.reachable().iter() {
        for l in 0..a.num_letters() {
            if let Some(m2) = g.step(m, l) {
                used.insert(Transition::new(g.tau()[m], l, g.tau()[m2]));
            }
        }
    }
    Ok(a.transitions().iter().copied().filter(|t| used.contains(t)).collect())
}

pub fn is_weakly_tight(a: &Automaton, g: &StrategyTransducer) -> Result<bool> {
    Ok(used_transitions(a, g)?.len() == a.transitions().len())
}

/// Memory sets that are unions of the state sets of paths from `from` to
/// `to` in `A_g`: every member is reachable from `from` and reaches `to`
/// inside the set.
pub fn path_combination_sets(ag: &ComposedAutomaton, from: usize, to: usize, cap: usize) -> Result<Vec<StateSet>> {
    let succ = ag.automaton.graph();
    let fwd = graph::reachable(succ, &StateSet::singleton(from), None);
    if !fwd.contains(to) {
        return Ok(Vec::new());
    }
    let bwd = graph::reachable(&graph::reverse(succ), &StateSet::singleton(to), None);
    let members: Vec<usize> = fwd.intersection(&bwd).iter().collect();
    if members.len() > cap.min(63) {
        return Err(Error::EnumerationCap {
            region: members.len(),
            cap,
        });
    }
    let region = Region::new(succ, &members);
    let fbit = 1u64 << region.local(from).expect("from in region");
    let tbit = 1u64 << region.local(to).expect("to in region");
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << members.len()) {
        if mask & fbit == 0 || mask & tbit == 0 {
            continue;
        }
        let reach = Region::closure(&region.adj, fbit, mask);
        let coreach = Region::closure(&region.radj, tbit, mask);
        if reach == mask && coreach == mask {
            out.push(StateSet::from_mask(mask, &region.locals));
        }
    }
    Ok(out)
}

/// Is `m` replaceable by `m2`? True iff no combination of paths from `m2`
/// to `m` is rejecting (vacuously when there is no such path).
///
/// A rejecting combination satisfies some Streett conjunction of the
/// negated condition. For each conjunction and each choice, per pair, of
/// avoiding its `E` set or meeting its `F` set, the choice is realizable
/// iff, after deleting the avoided `E` sets, `m` is reachable from `m2` and
/// every pair to be met has an `F` member on some `m2 -> m` path.
pub fn replaceable(ag: &ComposedAutomaton, m: usize, m2: usize) -> Result<bool> {
    if m == m2 || ag.tau[m] != ag.tau[m2] {
        return Err(Error::Precondition(format!(
            "{} and {} are not distinct memories of one state",
            ag.memory_name(m),
            ag.memory_name(m2)
        )));
    }
    let n = ag.automaton.num_states();
    let neg = GeneralCondition::from_acceptance(&ag.automaton.acceptance().negation(), n);
    let succ = ag.automaton.graph();
    let pred = graph::reverse(succ);
    for conj in &neg.disjuncts {
        let k = conj.len();
        if k > 20 {
            return Err(Error::EnumerationCap { region: k, cap: 20 });
        }
        for modes in 0u32..(1 << k) {
            let mut allowed = StateSet::full(n);
            for (i, p) in conj.iter().enumerate() {
                if modes & (1 << i) == 0 {
                    allowed = allowed.difference(&p.bad);
                }
            }
            if !allowed.contains(m) || !allowed.contains(m2) {
                continue;
            }
            let fwd = graph::reachable(succ, &StateSet::singleton(m2), Some(&allowed));
            if !fwd.contains(m) {
                continue;
            }
            let on_path = fwd.intersection(&graph::reachable(&pred, &StateSet::singleton(m), Some(&allowed)));
            let hits_ok = conj
                .iter()
                .enumerate()
                .filter(|(i, _)| modes & (1 << i) != 0)
                .all(|(_, p)| on_path.intersects(&p.good));
            if hits_ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of a tightness check. Violations are reported in declaration
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tightness {
    Tight,
    UnusedTransition(Transition),
    Replaceable { memory: usize, by: usize },
}

impl Tightness {
    pub fn is_tight(&self) -> bool {
        *self == Tightness::Tight
    }

    pub fn describe(&self, a: &Automaton, g: &StrategyTransducer) -> String {
        match self {
            Tightness::Tight => "tight".into(),
            Tightness::UnusedTransition(t) => format!("unused transition {}", a.transition_label(t)),
            Tightness::Replaceable { memory, by } => {
                format!("{} replaceable by {}", g.memory_name(*memory), g.memory_name(*by))
            }
        }
    }
}

/// The first replaceable ordered pair `(m, m')` of reachable memories.
pub fn first_replaceable(ag: &ComposedAutomaton) -> Result<Option<(usize, usize)>> {
    let reach: Vec<usize> = ag.reachable().iter().collect();
    for &m in &reach {
        for &m2 in &reach {
            if m != m2 && ag.tau[m] == ag.tau[m2] && replaceable(ag, m, m2)? {
                return Ok(Some((m, m2)));
            }
        }
    }
    Ok(None)
}

pub fn tightness(a: &Automaton, g: &StrategyTransducer) -> Result<Tightness> {
    let used = used_transitions(a, g)?;
    if let Some(t) = a.transitions().iter().find(|t| !used.contains(t)) {
        return Ok(Tightness::UnusedTransition(*t));
    }
    let ag = compose(a, g)?;
    Ok(match first_replaceable(&ag)? {
        Some((memory, by)) => Tightness::Replaceable { memory, by },
        None => Tightness::Tight,
    })
}

pub fn is_tight(a: &Automaton, g: &StrategyTransducer) -> Result<bool> {
    Ok(tightness(a, g)?.is_tight())
}

fn accepting_or_false(cond: &GeneralCondition, s: &StateSet) -> bool {
    !s.is_empty() && cond.holds(s)
}

/// A cycle set of `A_g` through a reachable memory of `q` that is accepting
/// while its part outside the memories of `q` is not (an empty remainder
/// counts as not accepting).
pub fn q_exclusive_accepting_cycle(ag: &ComposedAutomaton, q: usize, cap: usize) -> Result<Option<StateSet>> {
    q_exclusive_with(ag, &ag.condition(), q, cap)
}

fn q_exclusive_with(ag: &ComposedAutomaton, cond: &GeneralCondition, q: usize, cap: usize) -> Result<Option<StateSet>> {
    let reach = ag.reachable();
    let mems = ag.memories_of(q);
    for m in mems.iter() {
        for c in ag.automaton.cycle_sets(&reach, Some(m), cap)? {
            if cond.holds(&c) && !accepting_or_false(cond, &c.difference(&mems)) {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

/// Rabin pairs for a condition, treating Büchi, weak, co-Büchi and parity
/// through their standard encodings.
pub fn rabin_encoding(acc: &Acceptance, n: usize) -> Result<Vec<crate::acceptance::Pair>> {
    acc.rabin_pairs(n)
        .ok_or_else(|| Error::Unsupported(format!("{} condition has no Rabin view", acc.kind().display_name())))
}

/// Outcome of a strong tightness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrongTightness {
    Strong,
    NotTight(Tightness),
    /// A good-set state without an exclusive accepting cycle.
    NoExclusiveCycle(usize),
}

impl StrongTightness {
    pub fn holds(&self) -> bool {
        *self == StrongTightness::Strong
    }
}

/// The first good-set state (in state order) lacking a q-exclusive
/// accepting cycle with respect to the Rabin `pairs`.
pub fn first_non_exclusive(
    a: &Automaton,
    g: &StrategyTransducer,
    pairs: &[crate::acceptance::Pair],
    cap: usize,
) -> Result<Option<usize>> {
    let ag = compose(a, g)?;
    let cond = GeneralCondition::from_acceptance(
        &Acceptance::Rabin(pairs.to_vec()).pullback(g.tau()),
        g.num_memories(),
    );
    let mut good = StateSet::new();
    for p in pairs {
        good.union_with(&p.good);
    }
    for q in good.iter() {
        if q_exclusive_with(&ag, &cond, q, cap)?.is_none() {
            return Ok(Some(q));
        }
    }
    Ok(None)
}

pub fn strong_tightness(a: &Automaton, g: &StrategyTransducer, cap: usize) -> Result<StrongTightness> {
    let pairs = rabin_encoding(a.acceptance(), a.num_states())?;
    let t = tightness(a, g)?;
    if !t.is_tight() {
        return Ok(StrongTightness::NotTight(t));
    }
    Ok(match first_non_exclusive(a, g, &pairs, cap)? {
        Some(q) => StrongTightness::NoExclusiveCycle(q),
        None => StrongTightness::Strong,
    })
}

pub fn is_strongly_tight(a: &Automaton, g: &StrategyTransducer, cap: usize) -> Result<bool> {
    Ok(strong_tightness(a, g, cap)?.holds())
}

/// For every reachable memory `m`, compares `A_g` started at `m` with `a`
/// started at `τ(m)` on all lassos up to `bound`. Returns the first
/// difference.
pub fn residual_check(a: &Automaton, g: &StrategyTransducer, bound: usize) -> Result<Option<(usize, Lasso)>> {
    let ag = compose(a, g)?;
    for m in ag.reachable().iter() {
        let from_m = ag.automaton.with_initial(StateSet::singleton(m))?;
        let from_q = a.with_initial(StateSet::singleton(g.tau()[m]))?;
        if let Verdict::Fails(w) = oracles::bounded_equiv(&from_m, &from_q, bound)? {
            return Ok(Some((m, w)));
        }
    }
    Ok(None)
}

impl fmt::Display for StrategyTransducer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strategy {} ({} memories)", self.name, self.memories.len())
    }
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

    fn a0_g(a: &Automaton) -> StrategyTransducer {
        StrategyTransducer::from_names(
            "g",
            a,
            [("m0", "q0"), ("m1", "q1"), ("m1'", "q1"), ("m2", "q2")],
            "m2",
            [
                "m2 b m2", "m2 a m1'", "m1' a m1'", "m1' b m0", "m0 b m0", "m0 a m1", "m1 b m0", "m1 a m2",
            ],
        )
        .unwrap()
    }

    #[test]
    fn composition_lifts_priorities() {
        let a = a0();
        let ag = compose(&a, &a0_g(&a)).unwrap();
        assert!(ag.automaton.is_deterministic());
        assert_eq!(ag.automaton.acceptance(), &Acceptance::Parity(vec![0, 1, 1, 2]));
    }

    #[test]
    fn fig2_replaceability_is_one_sided() {
        let a = a0();
        let ag = compose(&a, &a0_g(&a)).unwrap();
        assert!(replaceable(&ag, 1, 2).unwrap());
        assert!(!replaceable(&ag, 2, 1).unwrap());
        let g = a0_g(&a);
        let t = tightness(&a, &g).unwrap();
        assert_eq!(t.describe(&a, &g), "m1 replaceable by m1'");
        assert!(is_weakly_tight(&a, &g).unwrap());
    }

    #[test]
    fn combination_sets_agree_with_structured_check() {
        let a = a0();
        let ag = compose(&a, &a0_g(&a)).unwrap();
        for (m, m2) in [(1, 2), (2, 1)] {
            let sets = path_combination_sets(&ag, m2, m, 22).unwrap();
            assert!(!sets.is_empty());
            let all_accepting = sets.iter().all(|s| ag.automaton.satisfies(s).unwrap());
            assert_eq!(all_accepting, replaceable(&ag, m, m2).unwrap());
        }
    }

    #[test]
    fn ill_formed_step_is_named() {
        let a = a0();
        let err = StrategyTransducer::from_names("bad", &a, [("m", "q2")], "m", ["m a m"]).unwrap_err();
        assert!(matches!(err, Error::IllFormedStrategy { ref memory, ref letter, .. } if memory == "m" && letter == "a"));
    }

    #[test]
    fn merge_redirects_steps() {
        let a = a0();
        let g = a0_g(&a).merge(1, 2).unwrap();
        assert_eq!(g.memories(), &["m0".to_string(), "m1'".into(), "m2".into()]);
        assert_eq!(g.step(0, 0), Some(1));
        let used = used_transitions(&a, &g).unwrap();
        assert_eq!(used.len(), 6);
        assert!(!used.contains(&a.find_transition("q1", "a", "q2").unwrap()));
    }
}
