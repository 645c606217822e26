//! Language-level queries: emptiness with witnesses, lasso membership,
//! containment in deterministic automata and bounded equivalence.
//!
//! Every acceptance kind is normalized into a [`GeneralCondition`] (a
//! disjunction of Streett conditions); emptiness of such a condition is
//! decided by an Emerson-Lei style recursive restriction of strongly
//! connected components.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;

use crate::acceptance::{GeneralCondition, Pair};
use crate::automaton::{Automaton, Transition};
use crate::error::{Error, Result};
use crate::graph;
use crate::lasso::Lasso;
use crate::stateset::StateSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// A lasso on which the compared sides differ.
    Fails(Lasso),
    /// No difference found up to the given bound.
    Unknown(usize),
}

impl Verdict {
    pub fn counterexample(&self) -> Option<&Lasso> {
        match self {
            Verdict::Fails(l) => Some(l),
            _ => None,
        }
    }
}

/// Searches the region `allowed` for a cycle set satisfying the Streett
/// conjunction `pairs`, containing `anchor` when given.
fn streett_search(
    succ: &[Vec<usize>],
    allowed: &StateSet,
    pairs: &[Pair],
    anchor: Option<usize>,
) -> Option<StateSet> {
    let components = |region: &StateSet| -> Vec<StateSet> {
        graph::sccs(succ, Some(region))
            .into_iter()
            .filter(|c| c.nontrivial && anchor.is_none_or(|q| c.states.contains(&q)))
            .map(|c| c.to_set())
            .collect()
    };
    let mut work = components(allowed);
    while let Some(c) = work.pop() {
        let mut remove = StateSet::new();
        for p in pairs {
            if c.intersects(&p.bad) && !c.intersects(&p.good) {
                remove.union_with(&p.bad);
            }
        }
        if remove.is_empty() {
            return Some(c);
        }
        if anchor.is_some_and(|q| remove.contains(q)) {
            continue;
        }
        work.extend(components(&c.difference(&remove)));
    }
    None
}

/// A cycle set inside `allowed` on which `cond` holds, if one exists. The
/// returned set is strongly connected with every member on a cycle in it.
pub fn accepting_cycle_set(
    succ: &[Vec<usize>],
    allowed: &StateSet,
    cond: &GeneralCondition,
    anchor: Option<usize>,
) -> Option<StateSet> {
    if anchor.is_some_and(|q| !allowed.contains(q)) {
        return None;
    }
    cond.disjuncts
        .iter()
        .find_map(|pairs| streett_search(succ, allowed, pairs, anchor))
}

/// Shortest-path BFS over labeled edges from `sources` to the first node
/// satisfying `goal`, staying inside `within` (when given). Returns the
/// reached node and the letters read; a source satisfying `goal` yields an
/// empty path.
fn bfs_path(
    edges: &[Vec<(usize, usize)>],
    sources: &[usize],
    goal: impl Fn(usize) -> bool,
    within: Option<&StateSet>,
) -> Option<(usize, Vec<usize>)> {
    let mut parent: HashMap<usize, Option<(usize, usize)>> = HashMap::new();
    let mut queue = VecDeque::new();
    for &s in sources {
        if parent.insert(s, None).is_none() {
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        if goal(x) {
            let mut letters = Vec::new();
            let mut cur = x;
            while let Some(Some((prev, a))) = parent.get(&cur) {
                letters.push(*a);
                cur = *prev;
            }
            letters.reverse();
            return Some((x, letters));
        }
        for &(a, y) in &edges[x] {
            if within.is_some_and(|w| !w.contains(y)) {
                continue;
            }
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(y) {
                e.insert(Some((x, a)));
                queue.push_back(y);
            }
        }
    }
    None
}

/// A lasso whose run from `initial` reaches `c` and then cycles through
/// exactly the members of `c` forever.
fn witness_lasso(edges: &[Vec<(usize, usize)>], initial: &[usize], c: &StateSet) -> Lasso {
    let (start, spoke) = bfs_path(edges, initial, |x| c.contains(x), None)
        .expect("accepting cycle set is reachable");
    let mut cycle = Vec::new();
    let mut cur = start;
    let mut pending: Vec<usize> = c.iter().filter(|&x| x != start).collect();
    while !pending.is_empty() {
        let (next, path) = bfs_path(edges, &[cur], |x| pending.contains(&x), Some(c))
            .expect("cycle set is strongly connected");
        cycle.extend(path);
        pending.retain(|&x| x != next);
        cur = next;
    }
    if cur == start {
        // singleton: take the self-loop
        let &(a, _) = edges[start]
            .iter()
            .find(|&&(_, y)| y == start)
            .expect("nontrivial singleton has a self-loop");
        cycle.push(a);
    } else {
        let (_, path) = bfs_path(edges, &[cur], |x| x == start, Some(c))
            .expect("cycle set is strongly connected");
        cycle.extend(path);
    }
    Lasso { spoke, cycle }
}

/// A synchronized product of automata over a shared alphabet, restricted to
/// reachable tuples, carrying a condition over product states.
#[derive(Clone, Debug)]
pub struct ProductAutomaton {
    pub tuples: Vec<Vec<usize>>,
    pub initial: Vec<usize>,
    pub edges: Vec<Vec<(usize, usize)>>,
    pub condition: GeneralCondition,
}

impl ProductAutomaton {
    /// Builds the reachable product. The condition starts as
    /// [`GeneralCondition::always`].
    pub fn new(components: &[&Automaton]) -> Result<Self> {
        let alphabet = components[0].alphabet();
        if components.iter().any(|c| c.alphabet() != alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut tuples: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::new();
        let mut intern = |t: Vec<usize>, tuples: &mut Vec<Vec<usize>>, queue: &mut VecDeque<usize>| -> usize {
            *index.entry(t.clone()).or_insert_with(|| {
                tuples.push(t);
                queue.push_back(tuples.len() - 1);
                tuples.len() - 1
            })
        };
        let mut initial = Vec::new();
        for t in cartesian(components.iter().map(|c| c.initial().iter().collect()).collect()) {
            let x = intern(t, &mut tuples, &mut queue);
            initial.push(x);
        }
        let mut edges: Vec<Vec<(usize, usize)>> = Vec::new();
        while let Some(x) = queue.pop_front() {
            let tuple = tuples[x].clone();
            let mut out = Vec::new();
            for a in 0..alphabet.len() {
                let choices = components
                    .iter()
                    .zip(&tuple)
                    .map(|(c, &q)| c.successors(q, a).to_vec())
                    .collect();
                for t in cartesian(choices) {
                    out.push((a, intern(t, &mut tuples, &mut queue)));
                }
            }
            if edges.len() <= x {
                edges.resize(x + 1, Vec::new());
            }
            edges[x] = out;
        }
        edges.resize(tuples.len(), Vec::new());
        Ok(ProductAutomaton {
            tuples,
            initial,
            edges,
            condition: GeneralCondition::always(),
        })
    }

    /// Index map from product states to states of component `i`.
    pub fn projection(&self, i: usize) -> Vec<usize> {
        self.tuples.iter().map(|t| t[i]).collect()
    }

    /// Pulls a condition of component `i` back to product states.
    pub fn lift(&self, i: usize, cond: &GeneralCondition) -> GeneralCondition {
        cond.pullback(&self.projection(i))
    }

    pub fn with_condition(mut self, condition: GeneralCondition) -> Self {
        self.condition = condition;
        self
    }

    fn succ(&self) -> Vec<Vec<usize>> {
        erase(&self.edges)
    }

    /// A lasso with an accepting product run, if any.
    pub fn accepting_lasso(&self) -> Option<Lasso> {
        let succ = self.succ();
        let all = StateSet::full(self.tuples.len());
        let c = accepting_cycle_set(&succ, &all, &self.condition, None)?;
        Some(witness_lasso(&self.edges, &self.initial, &c))
    }
}

fn erase(edges: &[Vec<(usize, usize)>]) -> Vec<Vec<usize>> {
    edges
        .iter()
        .map(|es| {
            let mut ts: Vec<usize> = es.iter().map(|&(_, t)| t).collect();
            ts.sort_unstable();
            ts.dedup();
            ts
        })
        .collect()
}

fn cartesian(choices: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for options in choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |&o| {
                    let mut t = prefix.clone();
                    t.push(o);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn condition_of(a: &Automaton) -> GeneralCondition {
    GeneralCondition::from_acceptance(a.acceptance(), a.num_states())
}

/// An accepted lasso, or `None` when the language is empty.
pub fn accepting_lasso(a: &Automaton) -> Option<Lasso> {
    let reach = a.reachable_from_initial();
    let c = accepting_cycle_set(a.graph(), &reach, &condition_of(a), None)?;
    let initial: Vec<usize> = a.initial().iter().collect();
    Some(witness_lasso(&a.labeled_edges(), &initial, &c))
}

pub fn is_empty(a: &Automaton) -> bool {
    accepting_lasso(a).is_none()
}

/// The deterministic automaton reading exactly `w`, one state per position.
fn lasso_automaton(alphabet: &[String], w: &Lasso) -> Automaton {
    let k = w.len();
    let states = (0..k).map(|i| format!("p{i}")).collect();
    let transitions = (0..k)
        .map(|i| {
            let next = if i + 1 < k { i + 1 } else { w.spoke.len() };
            Transition::new(i, w.letter_at(i), next)
        })
        .collect();
    Automaton::new(
        "lasso",
        alphabet.to_vec(),
        states,
        StateSet::singleton(0),
        transitions,
        crate::acceptance::Acceptance::Buchi(StateSet::full(k)),
    )
    .expect("lasso automaton is well formed")
}

/// Does `a` accept `u·v^ω`?
pub fn member(a: &Automaton, w: &Lasso) -> bool {
    let l = lasso_automaton(a.alphabet(), w);
    let p = ProductAutomaton::new(&[a, &l]).expect("same alphabet");
    let cond = p.lift(0, &condition_of(a));
    let succ = p.succ();
    accepting_cycle_set(&succ, &StateSet::full(p.tuples.len()), &cond, None).is_some()
}

/// Decides `L(a) ⊆ L(d)` exactly for deterministic `d`, by emptiness of
/// `a × complement(d)`, where `d` is first completed with a rejecting sink.
pub fn contained_in_deterministic(a: &Automaton, d: &Automaton) -> Result<Verdict> {
    if a.alphabet() != d.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    require_deterministic(d)?;
    let (d, _) = d.completed();
    let p = ProductAutomaton::new(&[a, &d])?;
    let dual = GeneralCondition::from_acceptance(&d.acceptance().negation(), d.num_states());
    let cond = p.lift(0, &condition_of(a)).and(&p.lift(1, &dual));
    let p = p.with_condition(cond);
    Ok(match p.accepting_lasso() {
        Some(l) => Verdict::Fails(l),
        None => Verdict::Holds,
    })
}

pub fn require_deterministic(d: &Automaton) -> Result<()> {
    if d.initial().len() != 1 {
        return Err(Error::NotDeterministic {
            state: "initial".into(),
            letter: "-".into(),
        });
    }
    if let Some((q, l)) = d.first_nondeterminism() {
        return Err(Error::NotDeterministic {
            state: d.state_name(q).into(),
            letter: d.letter_name(l).into(),
        });
    }
    Ok(())
}

/// Largest number of lassos a bounded sweep enumerates.
pub const MAX_LASSOS: u128 = 1 << 22;

/// The bound used when none is given: the product of the state counts,
/// capped at 6.
pub fn default_bound(a: &Automaton, b: &Automaton) -> usize {
    (a.num_states() * b.num_states()).clamp(1, 6)
}

fn sweep(num_letters: usize, max_spoke: usize, max_cycle: usize) -> Result<Vec<Lasso>> {
    let needed = Lasso::count(num_letters, max_spoke, max_cycle);
    if needed > MAX_LASSOS {
        return Err(Error::BudgetExceeded {
            needed,
            budget: MAX_LASSOS,
        });
    }
    Ok(Lasso::enumerate(num_letters, max_spoke, max_cycle))
}

/// Compares memberships on every lasso with `|u| <= max_spoke` and
/// `1 <= |v| <= max_cycle`. Returns the first disagreement in enumeration
/// order (see [`Lasso::enumerate`]).
pub fn first_disagreement(a: &Automaton, b: &Automaton, max_spoke: usize, max_cycle: usize) -> Result<Option<Lasso>> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let lassos = sweep(a.num_letters(), max_spoke, max_cycle)?;
    Ok(lassos
        .into_par_iter()
        .find_first(|w| member(a, w) != member(b, w)))
}

/// Bounded equivalence sweep; never returns [`Verdict::Holds`].
pub fn bounded_equiv(a: &Automaton, b: &Automaton, bound: usize) -> Result<Verdict> {
    if bound == 0 {
        return Err(Error::Precondition("bound must be at least 1".into()));
    }
    Ok(match first_disagreement(a, b, bound, bound)? {
        Some(l) => Verdict::Fails(l),
        None => Verdict::Unknown(bound),
    })
}

/// Bounded sweep for `L(a) ⊆ L(b)`: the first lasso up to `bound` accepted
/// by `a` and rejected by `b`.
pub fn bounded_containment(a: &Automaton, b: &Automaton, bound: usize) -> Result<Verdict> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    if bound == 0 {
        return Err(Error::Precondition("bound must be at least 1".into()));
    }
    let lassos = sweep(a.num_letters(), bound, bound)?;
    Ok(match lassos.into_par_iter().find_first(|w| member(a, w) && !member(b, w)) {
        Some(l) => Verdict::Fails(l),
        None => Verdict::Unknown(bound),
    })
}

/// The first lasso whose membership in `a` differs from the expected one.
pub fn separated_by_witnesses(a: &Automaton, expected: &[(Lasso, bool)]) -> Option<Lasso> {
    expected
        .iter()
        .find(|(w, e)| member(a, w) != *e)
        .map(|(w, _)| w.clone())
}
