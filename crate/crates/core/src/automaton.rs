//! The automaton data model.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::acceptance::{Acceptance, Pair};
use crate::error::{Error, Result};
use crate::graph::{self, Component};
use crate::stateset::StateSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transition {
    pub source: usize,
    pub letter: usize,
    pub target: usize,
}

impl Transition {
    pub fn new(source: usize, letter: usize, target: usize) -> Self {
        Transition { source, letter, target }
    }
}

/// A nondeterministic automaton with state-based acceptance.
///
/// States and letters are interned: they are referred to by index, and the
/// index order is the declaration order. Values are immutable; every
/// modifying operation returns a new automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    name: String,
    alphabet: Vec<String>,
    states: Vec<String>,
    initial: StateSet,
    transitions: Vec<Transition>,
    acceptance: Acceptance,
    // [state][letter] -> targets, in declaration order
    delta: Vec<Vec<Vec<usize>>>,
    // letter-erased successor lists, deduplicated
    succ: Vec<Vec<usize>>,
}

fn check_name(kind: &str, name: &str) -> Result<()> {
    let bad = name.is_empty()
        || name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '(' | ')' | '|' | '#' | ':'));
    if bad {
        return Err(Error::InvalidAutomaton(format!("invalid {kind} name '{name}'")));
    }
    Ok(())
}

fn check_unique(kind: &str, names: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for n in names {
        check_name(kind, n)?;
        if !seen.insert(n) {
            return Err(Error::InvalidAutomaton(format!("duplicate {kind} '{n}'")));
        }
    }
    Ok(())
}

impl Automaton {
    pub fn new(
        name: impl Into<String>,
        alphabet: Vec<String>,
        states: Vec<String>,
        initial: StateSet,
        transitions: Vec<Transition>,
        acceptance: Acceptance,
    ) -> Result<Self> {
        let name = name.into();
        check_name("automaton", &name)?;
        if alphabet.is_empty() {
            return Err(Error::InvalidAutomaton("empty alphabet".into()));
        }
        check_unique("letter", &alphabet)?;
        check_unique("state", &states)?;
        let n = states.len();
        if initial.is_empty() {
            return Err(Error::InvalidAutomaton("no initial state".into()));
        }
        if let Some(q) = initial.iter().find(|&q| q >= n) {
            return Err(Error::ForeignState(q));
        }
        let mut delta = vec![vec![Vec::new(); alphabet.len()]; n];
        let mut seen = HashSet::new();
        for t in &transitions {
            if t.source >= n || t.target >= n {
                return Err(Error::ForeignState(t.source.max(t.target)));
            }
            if t.letter >= alphabet.len() {
                return Err(Error::InvalidAutomaton(format!("unknown letter index {}", t.letter)));
            }
            if !seen.insert(*t) {
                return Err(Error::InvalidAutomaton(format!(
                    "duplicate transition ({}, {}, {})",
                    states[t.source], alphabet[t.letter], states[t.target]
                )));
            }
            delta[t.source][t.letter].push(t.target);
        }
        if let Some(q) = acceptance.max_state() {
            if q >= n {
                return Err(Error::ForeignState(q));
            }
        }
        if let Acceptance::Parity(prio) = &acceptance {
            if prio.len() != n {
                return Err(Error::InvalidAutomaton(format!(
                    "parity map covers {} of {} states",
                    prio.len(),
                    n
                )));
            }
        }
        let succ = delta
            .iter()
            .map(|row| {
                let mut ts: Vec<usize> = row.iter().flatten().copied().collect();
                ts.sort_unstable();
                ts.dedup();
                ts
            })
            .collect();
        let a = Automaton {
            name,
            alphabet,
            states,
            initial,
            transitions,
            acceptance,
            delta,
            succ,
        };
        if let Acceptance::Weak(set) = &a.acceptance {
            if let Some(comp) = a.weak_violation(set) {
                return Err(Error::InvalidAutomaton(format!(
                    "weak condition is not homogeneous on component {{{}}}",
                    a.names(comp.iter().copied()).join(", ")
                )));
            }
        }
        Ok(a)
    }

    pub fn builder(name: impl Into<String>) -> AutomatonBuilder {
        AutomatonBuilder {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_letters(&self) -> usize {
        self.alphabet.len()
    }

    pub fn initial(&self) -> &StateSet {
        &self.initial
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn acceptance(&self) -> &Acceptance {
        &self.acceptance
    }

    pub fn state_name(&self, q: usize) -> &str {
        &self.states[q]
    }

    pub fn letter_name(&self, a: usize) -> &str {
        &self.alphabet[a]
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    pub fn letter_index(&self, name: &str) -> Option<usize> {
        self.alphabet.iter().position(|s| s == name)
    }

    pub fn names(&self, qs: impl IntoIterator<Item = usize>) -> Vec<String> {
        qs.into_iter().map(|q| self.states[q].clone()).collect()
    }

    /// `(src,letter,dst)` with names.
    pub fn transition_label(&self, t: &Transition) -> String {
        format!(
            "({},{},{})",
            self.states[t.source], self.alphabet[t.letter], self.states[t.target]
        )
    }

    pub fn find_transition(&self, source: &str, letter: &str, target: &str) -> Option<Transition> {
        let t = Transition::new(
            self.state_index(source)?,
            self.letter_index(letter)?,
            self.state_index(target)?,
        );
        self.transitions.contains(&t).then_some(t)
    }

    pub fn successors(&self, q: usize, letter: usize) -> &[usize] {
        &self.delta[q][letter]
    }

    pub fn has_transition(&self, t: &Transition) -> bool {
        self.delta[t.source][t.letter].contains(&t.target)
    }

    /// Letter-erased successor lists.
    pub fn graph(&self) -> &[Vec<usize>] {
        &self.succ
    }

    /// `(letter, target)` lists per state, letters in alphabet order.
    pub fn labeled_edges(&self) -> Vec<Vec<(usize, usize)>> {
        self.delta
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .flat_map(|(a, ts)| ts.iter().map(move |&t| (a, t)))
                    .collect()
            })
            .collect()
    }

    /// Checks that `s` only mentions states of this automaton and evaluates
    /// the acceptance condition on it.
    pub fn satisfies(&self, s: &StateSet) -> Result<bool> {
        if let Some(q) = s.last().filter(|&q| q >= self.num_states()) {
            return Err(Error::ForeignState(q));
        }
        self.acceptance.satisfies(s)
    }

    /// The first `(state, letter)` with more than one successor, if any.
    pub fn first_nondeterminism(&self) -> Option<(usize, usize)> {
        (0..self.num_states())
            .flat_map(|q| (0..self.num_letters()).map(move |a| (q, a)))
            .find(|&(q, a)| self.delta[q][a].len() > 1)
    }

    pub fn is_deterministic(&self) -> bool {
        self.initial.len() == 1 && self.first_nondeterminism().is_none()
    }

    pub fn is_complete(&self) -> bool {
        self.delta.iter().all(|row| row.iter().all(|ts| !ts.is_empty()))
    }

    pub fn sccs(&self) -> Vec<Component> {
        graph::sccs(&self.succ, None)
    }

    pub fn reachable(&self, from: &StateSet) -> StateSet {
        graph::reachable(&self.succ, from, None)
    }

    pub fn reachable_from_initial(&self) -> StateSet {
        self.reachable(&self.initial)
    }

    pub fn cycle_sets(&self, restrict: &StateSet, anchor: Option<usize>, cap: usize) -> Result<graph::CycleSets> {
        graph::cycle_sets(&self.succ, restrict, anchor, cap)
    }

    /// A component that meets `candidate` without being contained in it.
    pub fn weak_violation(&self, candidate: &StateSet) -> Option<Vec<usize>> {
        self.sccs()
            .into_iter()
            .find(|c| {
                let set = c.to_set();
                set.intersects(candidate) && !set.is_subset(candidate)
            })
            .map(|c| c.states)
    }

    pub fn is_weak_shape(&self, candidate: &StateSet) -> bool {
        self.weak_violation(candidate).is_none()
    }

    pub fn with_name(&self, name: impl Into<String>) -> Result<Automaton> {
        let mut a = self.clone();
        a.name = name.into();
        check_name("automaton", &a.name)?;
        Ok(a)
    }

    pub fn with_acceptance(&self, acceptance: Acceptance) -> Result<Automaton> {
        Automaton::new(
            self.name.clone(),
            self.alphabet.clone(),
            self.states.clone(),
            self.initial.clone(),
            self.transitions.clone(),
            acceptance,
        )
    }

    pub fn with_initial(&self, initial: StateSet) -> Result<Automaton> {
        Automaton::new(
            self.name.clone(),
            self.alphabet.clone(),
            self.states.clone(),
            initial,
            self.transitions.clone(),
            self.acceptance.clone(),
        )
    }

    /// Keeps the transitions for which `keep` holds, in their original order.
    pub fn retain_transitions(&self, keep: impl Fn(&Transition) -> bool) -> Automaton {
        let transitions = self.transitions.iter().copied().filter(|t| keep(t)).collect();
        Automaton::new(
            self.name.clone(),
            self.alphabet.clone(),
            self.states.clone(),
            self.initial.clone(),
            transitions,
            self.acceptance.clone(),
        )
        .expect("removing transitions preserves validity")
    }

    pub fn without_transitions(&self, removed: &[Transition]) -> Automaton {
        self.retain_transitions(|t| !removed.contains(t))
    }

    /// Restricts the automaton to the states in `keep`, renumbering them in
    /// order. Returns the old-to-new index map alongside.
    pub fn restrict_states(&self, keep: &StateSet) -> Result<(Automaton, Vec<Option<usize>>)> {
        let mut map = vec![None; self.num_states()];
        let mut states = Vec::new();
        for (q, slot) in map.iter_mut().enumerate() {
            if keep.contains(q) {
                *slot = Some(states.len());
                states.push(self.states[q].clone());
            }
        }
        let initial = self.initial.iter().filter_map(|q| map[q]).collect();
        let transitions = self
            .transitions
            .iter()
            .filter_map(|t| Some(Transition::new(map[t.source]?, t.letter, map[t.target]?)))
            .collect();
        let a = Automaton::new(
            self.name.clone(),
            self.alphabet.clone(),
            states,
            initial,
            transitions,
            self.acceptance.restrict(&map),
        )?;
        Ok((a, map))
    }

    /// Completes the automaton with a fresh rejecting sink, if it is not
    /// already complete. Returns the sink index when one was added.
    pub fn completed(&self) -> (Automaton, Option<usize>) {
        if self.is_complete() {
            return (self.clone(), None);
        }
        let n = self.num_states();
        let mut sink_name = "sink".to_string();
        while self.states.contains(&sink_name) {
            sink_name.push('\'');
        }
        let mut states = self.states.clone();
        states.push(sink_name);
        let mut transitions = self.transitions.clone();
        for q in 0..n {
            for a in 0..self.num_letters() {
                if self.delta[q][a].is_empty() {
                    transitions.push(Transition::new(q, a, n));
                }
            }
        }
        for a in 0..self.num_letters() {
            transitions.push(Transition::new(n, a, n));
        }
        let a = Automaton::new(
            self.name.clone(),
            self.alphabet.clone(),
            states,
            self.initial.clone(),
            transitions,
            self.acceptance.with_rejecting_sink(n),
        )
        .expect("sink completion preserves validity");
        (a, Some(n))
    }

    /// Runs of a deterministic automaton: the state reached on `word` from
    /// `from`, or `None` if the run gets stuck.
    pub fn run_deterministic(&self, from: usize, word: &[usize]) -> Option<usize> {
        word.iter()
            .try_fold(from, |q, &a| self.delta[q][a].first().copied())
    }
}

/// An acceptance condition given by state names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedAcceptance {
    Buchi(Vec<String>),
    CoBuchi(Vec<String>),
    Parity(Vec<(String, u32)>),
    Rabin(Vec<(Vec<String>, Vec<String>)>),
    Streett(Vec<(Vec<String>, Vec<String>)>),
    Weak(Vec<String>),
}

impl NamedAcceptance {
    fn resolve(&self, index: &HashMap<&str, usize>, n: usize) -> Result<Acceptance> {
        let set = |names: &[String]| -> Result<StateSet> {
            names
                .iter()
                .map(|s| {
                    index
                        .get(s.as_str())
                        .copied()
                        .ok_or_else(|| Error::InvalidAutomaton(format!("unknown state '{s}' in acceptance")))
                })
                .collect()
        };
        let pairs = |ps: &[(Vec<String>, Vec<String>)]| -> Result<Vec<Pair>> {
            ps.iter().map(|(e, f)| Ok(Pair::new(set(e)?, set(f)?))).collect()
        };
        Ok(match self {
            NamedAcceptance::Buchi(s) => Acceptance::Buchi(set(s)?),
            NamedAcceptance::CoBuchi(s) => Acceptance::CoBuchi(set(s)?),
            NamedAcceptance::Weak(s) => Acceptance::Weak(set(s)?),
            NamedAcceptance::Rabin(ps) => Acceptance::Rabin(pairs(ps)?),
            NamedAcceptance::Streett(ps) => Acceptance::Streett(pairs(ps)?),
            NamedAcceptance::Parity(entries) => {
                let mut prio = vec![None; n];
                for (s, p) in entries {
                    let q = *index
                        .get(s.as_str())
                        .ok_or_else(|| Error::InvalidAutomaton(format!("unknown state '{s}' in acceptance")))?;
                    if prio[q].replace(*p).is_some() {
                        return Err(Error::InvalidAutomaton(format!("priority of '{s}' given twice")));
                    }
                }
                let mut out = Vec::with_capacity(n);
                for (q, p) in prio.into_iter().enumerate() {
                    match p {
                        Some(p) => out.push(p),
                        None => {
                            return Err(Error::InvalidAutomaton(format!(
                                "parity map has no priority for state index {q}"
                            )))
                        }
                    }
                }
                Acceptance::Parity(out)
            }
        })
    }
}

/// Name-based construction, used by the parser, the corpus and tests.
#[derive(Clone, Debug, Default)]
pub struct AutomatonBuilder {
    name: String,
    alphabet: Vec<String>,
    states: Vec<String>,
    initial: Vec<String>,
    transitions: Vec<(String, String, String)>,
    acceptance: Option<NamedAcceptance>,
}

fn strings<I, S>(xs: I) -> Vec<String>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    xs.into_iter().map(Into::into).collect()
}

impl AutomatonBuilder {
    pub fn alphabet<I: IntoIterator<Item = S>, S: Into<String>>(mut self, letters: I) -> Self {
        self.alphabet = strings(letters);
        self
    }

    pub fn states<I: IntoIterator<Item = S>, S: Into<String>>(mut self, states: I) -> Self {
        self.states = strings(states);
        self
    }

    pub fn initial<I: IntoIterator<Item = S>, S: Into<String>>(mut self, states: I) -> Self {
        self.initial = strings(states);
        self
    }

    pub fn transition(mut self, source: impl Into<String>, letter: impl Into<String>, target: impl Into<String>) -> Self {
        self.transitions.push((source.into(), letter.into(), target.into()));
        self
    }

    /// Adds transitions given as `"src letter dst"` strings.
    pub fn transitions<'a>(mut self, lines: impl IntoIterator<Item = &'a str>) -> Self {
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            assert_eq!(parts.len(), 3, "transition '{line}' must have three fields");
            self.transitions
                .push((parts[0].into(), parts[1].into(), parts[2].into()));
        }
        self
    }

    pub fn acceptance(mut self, acc: NamedAcceptance) -> Self {
        self.acceptance = Some(acc);
        self
    }

    pub fn buchi<I: IntoIterator<Item = S>, S: Into<String>>(self, states: I) -> Self {
        self.acceptance(NamedAcceptance::Buchi(strings(states)))
    }

    pub fn cobuchi<I: IntoIterator<Item = S>, S: Into<String>>(self, states: I) -> Self {
        self.acceptance(NamedAcceptance::CoBuchi(strings(states)))
    }

    pub fn weak<I: IntoIterator<Item = S>, S: Into<String>>(self, states: I) -> Self {
        self.acceptance(NamedAcceptance::Weak(strings(states)))
    }

    pub fn parity<'a>(self, entries: impl IntoIterator<Item = (&'a str, u32)>) -> Self {
        self.acceptance(NamedAcceptance::Parity(
            entries.into_iter().map(|(s, p)| (s.to_string(), p)).collect(),
        ))
    }

    pub fn build(self) -> Result<Automaton> {
        let index: HashMap<&str, usize> = self
            .states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let letters: HashMap<&str, usize> = self
            .alphabet
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let state = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::InvalidAutomaton(format!("unknown state '{s}'")))
        };
        let initial = self
            .initial
            .iter()
            .map(|s| state(s))
            .collect::<Result<StateSet>>()?;
        let mut transitions = Vec::with_capacity(self.transitions.len());
        for (src, letter, dst) in &self.transitions {
            let a = letters
                .get(letter.as_str())
                .copied()
                .ok_or_else(|| Error::InvalidAutomaton(format!("unknown letter '{letter}'")))?;
            transitions.push(Transition::new(state(src)?, a, state(dst)?));
        }
        let acceptance = self
            .acceptance
            .as_ref()
            .ok_or_else(|| Error::InvalidAutomaton("missing acceptance condition".into()))?
            .resolve(&index, self.states.len())?;
        Automaton::new(
            self.name,
            self.alphabet,
            self.states,
            initial,
            transitions,
            acceptance,
        )
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.source, self.letter, self.target)
    }
}
