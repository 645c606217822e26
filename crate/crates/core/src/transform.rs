//! Constructions on GFG automata: tightening, strong tightening, the
//! typeness transformations, pruning to determinism, dualization and a
//! brute-force typeness search.

use std::fmt;

use rayon::prelude::*;

use crate::acceptance::{Acceptance, AcceptanceKind, GeneralCondition, Pair};
use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::graph::DEFAULT_CAP;
use crate::io::format_acceptance;
use crate::lasso::Lasso;
use crate::oracles::{self, Verdict};
use crate::stateset::StateSet;
use crate::strategy::{self, StrategyTransducer};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformConfig {
    /// Region cap for cycle enumeration.
    pub cap: usize,
    /// Lasso bound for verifying the output against the input; `None`
    /// skips verification.
    pub verify_bound: Option<usize>,
    /// Quantify over all memories instead of reachable ones when computing
    /// the co-Büchi set of [`streett_to_cobuchi`].
    pub include_unreachable: bool,
}

impl Default for TransformConfig {
    fn default() -> Self {
        TransformConfig {
            cap: DEFAULT_CAP,
            verify_bound: Some(4),
            include_unreachable: false,
        }
    }
}

/// One logged modification. Names refer to the automaton or strategy as it
/// was when the step was applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    RemoveTransition { source: String, letter: String, target: String },
    MergeMemory { removed: String, into: String },
    DropMemory(String),
    /// Replace the acceptance condition; `text` is its rendering.
    SetAcceptance { acceptance: Acceptance, text: String },
    RemoveFromGoodSet { state: String, pair: usize },
    RemoveFromBadSet { state: String, pair: usize },
    RemoveState(String),
    RestrictInitial(String),
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::RemoveTransition { source, letter, target } => write!(f, "removed ({source},{letter},{target})"),
            Step::MergeMemory { removed, into } => write!(f, "merged {removed}→{into}"),
            Step::DropMemory(m) => write!(f, "dropped unreachable memory {m}"),
            Step::SetAcceptance { text, .. } => write!(f, "set acceptance {text}"),
            Step::RemoveFromGoodSet { state, pair } => write!(f, "removed {state} from good set {pair}"),
            Step::RemoveFromBadSet { state, pair } => write!(f, "removed {state} from bad set {pair}"),
            Step::RemoveState(q) => write!(f, "removed state {q}"),
            Step::RestrictInitial(q) => write!(f, "restricted initial states to {q}"),
        }
    }
}

/// A verification performed on a construction's output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub description: String,
    pub verdict: Verdict,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Holds => write!(f, "{}: holds", self.description),
            Verdict::Unknown(b) => write!(f, "{}: no counterexample up to bound {b}", self.description),
            Verdict::Fails(_) => write!(f, "{}: fails", self.description),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformReport {
    pub automaton: Automaton,
    pub strategy: Option<StrategyTransducer>,
    pub steps: Vec<Step>,
    /// How the input condition was re-read (e.g. parity as Rabin pairs).
    pub encoding: Option<String>,
    pub verification: Vec<Check>,
}

impl TransformReport {
    /// Applies the logged steps to the input, reproducing the output.
    pub fn replay(
        &self,
        input: &Automaton,
        g: Option<&StrategyTransducer>,
    ) -> Result<(Automaton, Option<StrategyTransducer>)> {
        let mut a = input.clone();
        let mut g = g.cloned();
        let need_g = |g: &Option<StrategyTransducer>| {
            g.clone()
                .ok_or_else(|| Error::Precondition("replay needs the input strategy".into()))
        };
        for step in &self.steps {
            match step {
                Step::RemoveTransition { source, letter, target } => {
                    let t = a
                        .find_transition(source, letter, target)
                        .ok_or_else(|| Error::Internal(format!("replay: no transition ({source},{letter},{target})")))?;
                    a = a.without_transitions(&[t]);
                }
                Step::MergeMemory { removed, into } => {
                    let cur = need_g(&g)?;
                    let (m, m2) = (memory(&cur, removed)?, memory(&cur, into)?);
                    g = Some(cur.merge(m, m2)?);
                }
                Step::DropMemory(name) => {
                    let cur = need_g(&g)?;
                    let m = memory(&cur, name)?;
                    g = Some(cur.without_memories(&StateSet::singleton(m)));
                }
                Step::SetAcceptance { acceptance, .. } => {
                    a = a.with_acceptance(acceptance.clone())?;
                }
                Step::RemoveFromGoodSet { state, pair } | Step::RemoveFromBadSet { state, pair } => {
                    let q = state_of(&a, state)?;
                    let Acceptance::Rabin(mut pairs) = a.acceptance().clone() else {
                        return Err(Error::Internal("replay: pair edits need a Rabin condition".into()));
                    };
                    let p = pairs
                        .get_mut(*pair)
                        .ok_or_else(|| Error::Internal(format!("replay: no pair {pair}")))?;
                    if matches!(step, Step::RemoveFromGoodSet { .. }) {
                        p.good.remove(q);
                    } else {
                        p.bad.remove(q);
                    }
                    a = a.with_acceptance(Acceptance::Rabin(pairs))?;
                }
                Step::RemoveState(name) => {
                    let q = state_of(&a, name)?;
                    let keep = StateSet::full(a.num_states()).difference(&StateSet::singleton(q));
                    let (r, map) = a.restrict_states(&keep)?;
                    if let Some(cur) = &g {
                        g = Some(cur.remap_states(&map)?);
                    }
                    a = r;
                }
                Step::RestrictInitial(name) => {
                    let q = state_of(&a, name)?;
                    a = a.with_initial(StateSet::singleton(q))?;
                }
            }
        }
        let a = a.with_name(self.automaton.name())?;
        let g = g.map(|g| match &self.strategy {
            Some(out) => g.with_name(out.name()).with_automaton_name(out.automaton_name()),
            None => g,
        });
        Ok((a, g))
    }

    /// The steps joined with `; `.
    pub fn summary(&self) -> String {
        self.steps.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("; ")
    }
}

fn memory(g: &StrategyTransducer, name: &str) -> Result<usize> {
    g.memory_index(name)
        .ok_or_else(|| Error::Internal(format!("replay: unknown memory {name}")))
}

fn state_of(a: &Automaton, name: &str) -> Result<usize> {
    a.state_index(name)
        .ok_or_else(|| Error::Internal(format!("replay: unknown state {name}")))
}

fn set_acceptance(a: &Automaton, acc: Acceptance) -> Step {
    Step::SetAcceptance {
        text: format_acceptance(a.states(), &acc),
        acceptance: acc,
    }
}

/// Compares output and input on all lassos up to the configured bound. A
/// difference aborts the construction with the counterexample.
fn verify(input: &Automaton, output: &Automaton, config: &TransformConfig) -> Result<Vec<Check>> {
    let Some(bound) = config.verify_bound else {
        return Ok(Vec::new());
    };
    let verdict = oracles::bounded_equiv(input, output, bound)?;
    if let Verdict::Fails(w) = &verdict {
        return Err(Error::VerificationFailed {
            lasso: w.display(input.alphabet()),
        });
    }
    Ok(vec![Check {
        description: "language agreement with input".into(),
        verdict,
    }])
}

fn rename(a: &Automaton, suffix: &str) -> Result<Automaton> {
    a.with_name(format!("{}_{suffix}", a.name()))
}

fn require_tight(a: &Automaton, g: &StrategyTransducer) -> Result<()> {
    let t = strategy::tightness(a, g)?;
    if !t.is_tight() {
        return Err(Error::Precondition(format!("not tight: {}", t.describe(a, g))));
    }
    Ok(())
}

/// Removes unused transitions and merges replaceable memories until the
/// automaton is tight with respect to the strategy. Pairs are scanned in
/// declaration order and the scan restarts after every merge.
pub fn tighten(a: &Automaton, g: &StrategyTransducer, config: &TransformConfig) -> Result<TransformReport> {
    g.validate(a)?;
    let mut cur = a.clone();
    let mut g = g.clone();
    let mut steps = Vec::new();
    loop {
        let reach = g.reachable();
        let dead: StateSet = (0..g.num_memories()).filter(|&m| !reach.contains(m)).collect();
        for m in dead.iter() {
            steps.push(Step::DropMemory(g.memory_name(m).to_string()));
        }
        if !dead.is_empty() {
            g = g.without_memories(&dead);
        }
        let used = strategy::used_transitions(&cur, &g)?;
        let unused: Vec<_> = cur.transitions().iter().copied().filter(|t| !used.contains(t)).collect();
        for t in &unused {
            steps.push(Step::RemoveTransition {
                source: cur.state_name(t.source).into(),
                letter: cur.letter_name(t.letter).into(),
                target: cur.state_name(t.target).into(),
            });
        }
        cur = cur.without_transitions(&unused);
        let ag = strategy::compose(&cur, &g)?;
        match strategy::first_replaceable(&ag)? {
            Some((m, into)) => {
                steps.push(Step::MergeMemory {
                    removed: g.memory_name(m).into(),
                    into: g.memory_name(into).into(),
                });
                g = g.merge(m, into)?;
            }
            None => break,
        }
    }
    let out = rename(&cur, "tight")?;
    let g = g.with_automaton_name(out.name());
    let verification = verify(a, &out, config)?;
    Ok(TransformReport {
        automaton: out,
        strategy: Some(g),
        steps,
        encoding: None,
        verification,
    })
}

fn rabin_view(a: &Automaton) -> Result<(Vec<Pair>, Option<String>)> {
    let pairs = strategy::rabin_encoding(a.acceptance(), a.num_states())?;
    let encoding = (a.acceptance().kind() != AcceptanceKind::Rabin).then(|| {
        format!(
            "{} read as {}",
            a.acceptance().kind().display_name(),
            format_acceptance(a.states(), &Acceptance::Rabin(pairs.clone()))
        )
    });
    Ok((pairs, encoding))
}

/// Whether every reachable cycle set of `succ` satisfying `from` satisfies
/// `to` as well.
fn implies(succ: &[Vec<usize>], reach: &StateSet, from: &Acceptance, to: &Acceptance, n: usize) -> bool {
    let cond = GeneralCondition::from_acceptance(from, n).and(&GeneralCondition::from_acceptance(&to.negation(), n));
    oracles::accepting_cycle_set(succ, reach, &cond, None).is_none()
}

/// A sound edit of `pairs` dropping `q` from good set `i`, or `None`. The
/// plain removal only shrinks the language, so it is kept when `A_g` loses
/// no accepting cycle. When some bad set holding `q` is what made the cycles
/// through `q` depend on `G_i`, `q` also leaves those bad sets, provided no
/// cycle of the automaton gains acceptance and tightness survives.
fn removal(
    a: &Automaton,
    g: &StrategyTransducer,
    pairs: &[Pair],
    q: usize,
    i: usize,
) -> Result<Option<(Vec<Pair>, Vec<Step>)>> {
    let k = g.num_memories();
    let ag = strategy::compose(a, g)?;
    let (ag_succ, ag_reach) = (ag.automaton.graph(), ag.reachable());
    let old = Acceptance::Rabin(pairs.to_vec());
    let name = a.state_name(q).to_string();
    let mut plain = pairs.to_vec();
    plain[i].good.remove(q);
    let new = Acceptance::Rabin(plain.clone());
    let mut steps = vec![Step::RemoveFromGoodSet { state: name.clone(), pair: i }];
    if implies(ag_succ, &ag_reach, &old.pullback(g.tau()), &new.pullback(g.tau()), k) {
        return Ok(Some((plain, steps)));
    }
    let mut repaired = plain;
    for (j, p) in repaired.iter_mut().enumerate() {
        if p.bad.remove(q) {
            steps.push(Step::RemoveFromBadSet { state: name.clone(), pair: j });
        }
    }
    if steps.len() == 1 {
        return Ok(None);
    }
    let new = Acceptance::Rabin(repaired.clone());
    let sound = implies(ag_succ, &ag_reach, &old.pullback(g.tau()), &new.pullback(g.tau()), k)
        && implies(a.graph(), &a.reachable_from_initial(), &new, &old, a.num_states())
        && strategy::is_tight(&a.with_acceptance(new)?, g)?;
    Ok(sound.then_some((repaired, steps)))
}

/// Removes good-set states without an exclusive accepting cycle until the
/// automaton is strongly tight. The condition is read as Rabin pairs. Each
/// removal is checked exactly on `A_g`; a state whose removal would change
/// the language stops the construction with an error.
pub fn strong_tighten(a: &Automaton, g: &StrategyTransducer, config: &TransformConfig) -> Result<TransformReport> {
    require_tight(a, g)?;
    let (mut pairs, encoding) = rabin_view(a)?;
    let mut steps = Vec::new();
    if encoding.is_some() {
        steps.push(set_acceptance(a, Acceptance::Rabin(pairs.clone())));
    }
    'outer: while let Some(q) = strategy::first_non_exclusive(a, g, &pairs, config.cap)? {
        let cur = a.with_acceptance(Acceptance::Rabin(pairs.clone()))?;
        for i in (0..pairs.len()).filter(|&i| pairs[i].good.contains(q)) {
            if let Some((next, s)) = removal(&cur, g, &pairs, q, i)? {
                pairs = next;
                steps.extend(s);
                continue 'outer;
            }
        }
        return Err(Error::Unsupported(format!(
            "strong tightening: removing {} from its good sets changes the language",
            a.state_name(q)
        )));
    }
    let out = rename(&a.with_acceptance(Acceptance::Rabin(pairs))?, "strong")?;
    let verification = verify(a, &out, config)?;
    Ok(TransformReport {
        strategy: Some(g.with_automaton_name(out.name())),
        automaton: out,
        steps,
        encoding,
        verification,
    })
}

/// Same structure, co-Büchi condition: a state is rejecting iff every cycle
/// of `A_g` through one of its memories is rejecting.
pub fn streett_to_cobuchi(a: &Automaton, g: &StrategyTransducer, config: &TransformConfig) -> Result<TransformReport> {
    if !strategy::is_weakly_tight(a, g)? {
        let t = strategy::tightness(a, g)?;
        return Err(Error::Precondition(format!("not weakly tight: {}", t.describe(a, g))));
    }
    let pairs = a.acceptance().streett_pairs(a.num_states()).ok_or_else(|| {
        Error::Unsupported("Rabin condition has no Streett view; use to-buchi".into())
    })?;
    let encoding = (a.acceptance().kind() != AcceptanceKind::Streett).then(|| {
        format!(
            "{} read as {}",
            a.acceptance().kind().display_name(),
            format_acceptance(a.states(), &Acceptance::Streett(pairs.clone()))
        )
    });
    let ag = strategy::compose(a, g)?;
    let cond = GeneralCondition::from_acceptance(&Acceptance::Streett(pairs).pullback(g.tau()), g.num_memories());
    let scope = if config.include_unreachable {
        StateSet::full(g.num_memories())
    } else {
        ag.reachable()
    };
    let rejecting: StateSet = (0..a.num_states())
        .filter(|&q| {
            scope
                .iter()
                .filter(|&m| g.tau()[m] == q)
                .all(|m| oracles::accepting_cycle_set(ag.automaton.graph(), &scope, &cond, Some(m)).is_none())
        })
        .collect();
    let acc = Acceptance::CoBuchi(rejecting);
    let steps = vec![set_acceptance(a, acc.clone())];
    let out = rename(&a.with_acceptance(acc)?, "ncw")?;
    let verification = verify(a, &out, config)?;
    Ok(TransformReport {
        strategy: Some(g.with_automaton_name(out.name())),
        automaton: out,
        steps,
        encoding,
        verification,
    })
}

/// Strongly tightens, then reads the union of the good sets as a Büchi
/// condition on the same structure.
pub fn rabin_to_buchi(a: &Automaton, g: &StrategyTransducer, config: &TransformConfig) -> Result<TransformReport> {
    require_tight(a, g)?;
    let strong = strong_tighten(a, g, &TransformConfig { verify_bound: None, ..config.clone() })?;
    let Acceptance::Rabin(pairs) = strong.automaton.acceptance() else {
        return Err(Error::Internal("strong tightening yields Rabin pairs".into()));
    };
    let mut good = StateSet::new();
    for p in pairs {
        good.union_with(&p.good);
    }
    let acc = Acceptance::Buchi(good);
    let mut steps = strong.steps.clone();
    steps.push(set_acceptance(a, acc.clone()));
    let out = rename(&a.with_acceptance(acc)?, "nbw")?;
    let verification = verify(a, &out, config)?;
    Ok(TransformReport {
        strategy: Some(g.with_automaton_name(out.name())),
        automaton: out,
        steps,
        encoding: strong.encoding,
        verification,
    })
}

/// Adds to the rejecting set every state none of whose memories lies on an
/// accepting cycle of `A_g`, and checks that the result is weak.
pub fn cobuchi_to_weak(a: &Automaton, g: &StrategyTransducer, config: &TransformConfig) -> Result<TransformReport> {
    let Acceptance::CoBuchi(rejecting) = a.acceptance() else {
        return Err(Error::Unsupported(format!(
            "{} input; expected co-Büchi",
            a.acceptance().kind().display_name()
        )));
    };
    require_tight(a, g)?;
    let ag = strategy::compose(a, g)?;
    let reach = ag.reachable();
    let cond = ag.condition();
    let mut joined = rejecting.clone();
    for q in 0..a.num_states() {
        let accepting_somewhere = reach
            .iter()
            .filter(|&m| g.tau()[m] == q)
            .any(|m| oracles::accepting_cycle_set(ag.automaton.graph(), &reach, &cond, Some(m)).is_some());
        if !accepting_somewhere {
            joined.insert(q);
        }
    }
    let accepting = joined.complement(a.num_states());
    if let Some(comp) = a.weak_violation(&accepting) {
        return Err(Error::NotWeak {
            component: a.names(comp),
        });
    }
    let acc = Acceptance::Weak(accepting);
    let steps = vec![set_acceptance(a, acc.clone())];
    let out = rename(&a.with_acceptance(acc)?, "nww")?;
    let verification = verify(a, &out, config)?;
    Ok(TransformReport {
        strategy: Some(g.with_automaton_name(out.name())),
        automaton: out,
        steps,
        encoding: None,
        verification,
    })
}

/// Keeps the reachable states with a nonempty residual language; for an
/// unambiguous GFG input the result is deterministic.
pub fn unambiguous_detbyp(a: &Automaton, config: &TransformConfig) -> Result<TransformReport> {
    let reach = a.reachable_from_initial();
    let mut keep = StateSet::new();
    let mut steps = Vec::new();
    for q in 0..a.num_states() {
        let live = reach.contains(q) && !oracles::is_empty(&a.with_initial(StateSet::singleton(q))?);
        if live {
            keep.insert(q);
        } else {
            steps.push(Step::RemoveState(a.state_name(q).into()));
        }
    }
    let survivors = a.initial().intersection(&keep);
    match survivors.len() {
        0 => return Err(Error::Precondition("language is empty".into())),
        1 => {}
        k => return Err(Error::AmbiguousInitial(k)),
    }
    let mut out = a.clone();
    // states are removed one at a time so that the log replays verbatim
    for q in (0..a.num_states()).rev().filter(|&q| !keep.contains(q)) {
        let (r, _) = out.restrict_states(&StateSet::full(out.num_states()).difference(&StateSet::singleton(q)))?;
        out = r;
    }
    if let Some((q, l)) = out.first_nondeterminism() {
        return Err(Error::NotUnambiguousGfg {
            state: out.state_name(q).into(),
            letter: out.letter_name(l).into(),
        });
    }
    let out = rename(&out, "det")?;
    let verification = verify(a, &out, config)?;
    Ok(TransformReport {
        automaton: out,
        strategy: None,
        steps,
        encoding: None,
        verification,
    })
}

/// Merges the memories of non-accepting states, then prunes to the used
/// transitions; for a strongly tight weak GFG input the result is
/// deterministic.
pub fn weak_detbyp(a: &Automaton, g: &StrategyTransducer, config: &TransformConfig) -> Result<TransformReport> {
    let Acceptance::Weak(accepting) = a.acceptance() else {
        return Err(Error::Unsupported(format!(
            "{} input; expected weak",
            a.acceptance().kind().display_name()
        )));
    };
    match strategy::strong_tightness(a, g, config.cap)? {
        strategy::StrongTightness::Strong => {}
        other => {
            return Err(Error::Precondition(format!("not strongly tight: {other:?}")));
        }
    }
    let mut g = g.clone();
    let mut steps = Vec::new();
    'merge: loop {
        let reach = g.reachable();
        let dead: StateSet = (0..g.num_memories()).filter(|&m| !reach.contains(m)).collect();
        for m in dead.iter() {
            steps.push(Step::DropMemory(g.memory_name(m).to_string()));
        }
        if !dead.is_empty() {
            g = g.without_memories(&dead);
            continue;
        }
        for q in 0..a.num_states() {
            let mems: Vec<usize> = g.memories_of(q).collect();
            if mems.len() < 2 {
                continue;
            }
            if accepting.contains(q) {
                return Err(Error::Internal(format!(
                    "accepting state {} has {} memories",
                    a.state_name(q),
                    mems.len()
                )));
            }
            let (keep, removed) = (mems[0], mems[1]);
            steps.push(Step::MergeMemory {
                removed: g.memory_name(removed).into(),
                into: g.memory_name(keep).into(),
            });
            g = g.merge(removed, keep)?;
            continue 'merge;
        }
        break;
    }
    let used = strategy::used_transitions(a, &g)?;
    let unused: Vec<_> = a.transitions().iter().copied().filter(|t| !used.contains(t)).collect();
    for t in &unused {
        steps.push(Step::RemoveTransition {
            source: a.state_name(t.source).into(),
            letter: a.letter_name(t.letter).into(),
            target: a.state_name(t.target).into(),
        });
    }
    let mut out = a.without_transitions(&unused);
    let q0 = g.tau()[g.initial()];
    if out.initial().len() > 1 {
        steps.push(Step::RestrictInitial(a.state_name(q0).into()));
        out = out.with_initial(StateSet::singleton(q0))?;
    }
    if let Some((q, l)) = out.first_nondeterminism() {
        return Err(Error::NotWeakGfg {
            state: out.state_name(q).into(),
            letter: out.letter_name(l).into(),
        });
    }
    let out = rename(&out, "det")?;
    let verification = verify(a, &out, config)?;
    Ok(TransformReport {
        strategy: Some(g.with_automaton_name(out.name())),
        automaton: out,
        steps,
        encoding: None,
        verification,
    })
}

/// The complement of a deterministic automaton on the same structure,
/// completed with a rejecting sink first when needed.
pub fn dualize_deterministic(d: &Automaton) -> Result<Automaton> {
    oracles::require_deterministic(d)?;
    let (d, _) = d.completed();
    let acc = match d.acceptance() {
        Acceptance::Weak(s) => Acceptance::Weak(s.complement(d.num_states())),
        other => other.negation(),
    };
    rename(&d.with_acceptance(acc)?, "dual")
}

/// Targets of [`typeness_search`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypenessTarget {
    Buchi,
    CoBuchi,
    Weak,
}

impl TypenessTarget {
    pub fn kind(self) -> AcceptanceKind {
        match self {
            TypenessTarget::Buchi => AcceptanceKind::Buchi,
            TypenessTarget::CoBuchi => AcceptanceKind::CoBuchi,
            TypenessTarget::Weak => AcceptanceKind::Weak,
        }
    }

    fn condition(self, set: StateSet) -> Acceptance {
        match self {
            TypenessTarget::Buchi => Acceptance::Buchi(set),
            TypenessTarget::CoBuchi => Acceptance::CoBuchi(set),
            TypenessTarget::Weak => Acceptance::Weak(set),
        }
    }
}

impl std::str::FromStr for TypenessTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "buchi" => Ok(TypenessTarget::Buchi),
            "cobuchi" => Ok(TypenessTarget::CoBuchi),
            "weak" => Ok(TypenessTarget::Weak),
            other => Err(Error::Unsupported(format!("typeness target '{other}'"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Largest number of candidate sets per structure.
    pub budget: u128,
    /// Bound for the lasso sweep that checks `L(reference) ⊆ L(candidate)`.
    pub bound: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: 1 << 20,
            bound: 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypenessOutcome {
    pub target: TypenessTarget,
    /// The first surviving candidate: structure index and condition.
    pub found: Option<(usize, Acceptance)>,
    pub candidates: usize,
    /// Candidates ruled out before the first survivor (all of them when
    /// nothing survives).
    pub separated: usize,
    /// Weak-target candidates ruled out because they are not weak-shaped.
    pub not_weak: usize,
}

/// Enumerates candidate sets `α ⊆ Q` on each structure (the automaton
/// itself when `substructures` is empty) and returns the first one whose
/// automaton agrees with every witness and, when a deterministic
/// reference is given, is contained in it exactly and contains it on all
/// lassos up to the configured bound.
pub fn typeness_search(
    a: &Automaton,
    target: TypenessTarget,
    witnesses: &[(Lasso, bool)],
    reference: Option<&Automaton>,
    substructures: &[Automaton],
    config: &SearchConfig,
) -> Result<TypenessOutcome> {
    let n = a.num_states();
    let per = 1u128.checked_shl(n as u32).unwrap_or(u128::MAX);
    if per > config.budget || n > 63 {
        return Err(Error::BudgetExceeded {
            needed: per,
            budget: config.budget,
        });
    }
    if let Some(d) = reference {
        oracles::require_deterministic(d)?;
    }
    let structures: Vec<&Automaton> = if substructures.is_empty() {
        vec![a]
    } else {
        substructures.iter().collect()
    };
    let per = per as usize;
    let total = per * structures.len();
    let survives = |idx: usize| -> Result<Option<Acceptance>> {
        let s = structures[idx / per];
        let set = StateSet::from_mask((idx % per) as u64, &(0..n).collect::<Vec<_>>());
        if target == TypenessTarget::Weak && !s.is_weak_shape(&set) {
            return Ok(None);
        }
        let acc = target.condition(set);
        let cand = s.with_acceptance(acc.clone())?;
        if oracles::separated_by_witnesses(&cand, witnesses).is_some() {
            return Ok(None);
        }
        if let Some(d) = reference {
            if oracles::contained_in_deterministic(&cand, d)? != Verdict::Holds {
                return Ok(None);
            }
            if oracles::first_disagreement(&cand, d, config.bound, config.bound)?.is_some() {
                return Ok(None);
            }
        }
        Ok(Some(acc))
    };
    let hit = (0..total)
        .into_par_iter()
        .map(|i| survives(i).map(|r| r.map(|acc| (i, acc))))
        .find_first(|r| !matches!(r, Ok(None)));
    let not_weak = if target == TypenessTarget::Weak {
        (0..total)
            .filter(|&i| {
                let set = StateSet::from_mask((i % per) as u64, &(0..n).collect::<Vec<_>>());
                !structures[i / per].is_weak_shape(&set)
            })
            .count()
    } else {
        0
    };
    Ok(match hit {
        Some(Err(e)) => return Err(e),
        Some(Ok(Some((i, acc)))) => TypenessOutcome {
            target,
            found: Some((i / per, acc)),
            candidates: total,
            separated: i,
            not_weak,
        },
        _ => TypenessOutcome {
            target,
            found: None,
            candidates: total,
            separated: total,
            not_weak,
        },
    })
}
