#![allow(dead_code)]

use gfg_core::acceptance::Pair;
use gfg_core::games::{self, GameArena, Player};
use gfg_core::strategy::{self, StrategyTransducer};
use gfg_core::transform::{self, TransformConfig};
use gfg_core::{io, oracles, Acceptance, Automaton, GeneralCondition, Lasso, StateSet, Transition, Verdict};
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Check = Result<(), TestCaseError>;

/// No counterexample was found.
pub fn agrees(v: &Verdict) -> bool {
    !matches!(v, Verdict::Fails(_))
}

pub const A: usize = 0;
pub const B: usize = 1;

pub fn letters() -> Vec<String> {
    vec!["a".into(), "b".into()]
}

fn state_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn mask_set(mask: u64, n: usize) -> StateSet {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

// ---------------------------------------------------------------------------
// Language predicates over {a, b}, evaluated on the lasso itself.

/// Infinitely many b's.
pub fn l0(w: &Lasso) -> bool {
    w.cycle.contains(&B)
}

/// Infinitely many b's, and either infinitely many a's or an even number of
/// a's overall.
pub fn l1(w: &Lasso) -> bool {
    let a_count = w.spoke.iter().filter(|&&x| x == A).count();
    w.cycle.contains(&B) && (w.cycle.contains(&A) || a_count % 2 == 0)
}

/// Contains a b.
pub fn contains_b(w: &Lasso) -> bool {
    w.spoke.contains(&B) || w.cycle.contains(&B)
}

/// Finitely many b's.
pub fn fin_b(w: &Lasso) -> bool {
    !w.cycle.contains(&B)
}

/// The maximal a-blocks of the word: finite ones with their lengths, and
/// whether it ends in a^ω.
fn a_blocks(w: &Lasso) -> (Vec<(usize, usize)>, bool) {
    // Unrolling the cycle three times exposes every finite block shape.
    let mut word = w.spoke.clone();
    for _ in 0..3 {
        word.extend(&w.cycle);
    }
    let tail_a = !w.cycle.contains(&B);
    let mut blocks = Vec::new();
    let mut i = 0;
    let limit = if tail_a { w.spoke.len() + w.cycle.len() } else { word.len() };
    while i < limit.min(word.len()) {
        if word[i] == A {
            let start = i;
            while i < word.len() && word[i] == A {
                i += 1;
            }
            if i < word.len() {
                blocks.push((start, i - start));
            }
        } else {
            i += 1;
        }
    }
    (blocks, tail_a)
}

/// a^ω, or: the a-block before the first b has even length, some a follows
/// the first b, and every finite a-block after the first b has even length.
pub fn l3(w: &Lasso) -> bool {
    if !contains_b(w) {
        return true;
    }
    let first_b = match w.spoke.iter().chain(w.cycle.iter()).position(|&x| x == B) {
        Some(i) => i,
        None => return false,
    };
    if first_b % 2 == 1 {
        return false;
    }
    let a_after = (first_b..first_b + w.len() + w.cycle.len()).any(|i| w.letter_at(i) == A);
    if !a_after {
        return false;
    }
    let (blocks, _) = a_blocks(w);
    blocks.iter().filter(|(s, _)| *s > first_b).all(|(_, len)| len % 2 == 0)
}

/// a^ω, or: contains a b and an a after the first b.
pub fn l4(w: &Lasso) -> bool {
    if !contains_b(w) {
        return true;
    }
    match w.spoke.iter().chain(w.cycle.iter()).position(|&x| x == B) {
        None => false,
        Some(i) => (i..i + w.len() + w.cycle.len()).any(|j| w.letter_at(j) == A),
    }
}

// ---------------------------------------------------------------------------
// Membership by brute force over the run graph of the folded lasso.

fn strongly_connected(nodes: &[usize], succ: &[Vec<usize>]) -> bool {
    let inside = |v: usize| nodes.contains(&v);
    nodes.iter().all(|&u| {
        let mut seen = vec![false; succ.len()];
        let mut stack: Vec<usize> = succ[u].iter().copied().filter(|&v| inside(v)).collect();
        while let Some(v) = stack.pop() {
            if !seen[v] {
                seen[v] = true;
                stack.extend(succ[v].iter().copied().filter(|&x| inside(x)));
            }
        }
        nodes.iter().all(|&v| seen[v])
    })
}

fn closure(succ: &[Vec<usize>]) -> Vec<Vec<bool>> {
    let n = succ.len();
    let mut r = vec![vec![false; n]; n];
    for (u, out) in succ.iter().enumerate() {
        for &v in out {
            r[u][v] = true;
        }
    }
    for k in 0..n {
        let via = r[k].clone();
        for row in r.iter_mut() {
            if row[k] {
                for (x, &y) in row.iter_mut().zip(&via) {
                    *x |= y;
                }
            }
        }
    }
    r
}

/// Every cycle set of `succ` reachable from `start`, by subset enumeration
/// inside each class of mutually reachable nodes.
pub fn brute_cycle_sets(succ: &[Vec<usize>], start: &[usize]) -> Vec<Vec<usize>> {
    let r = closure(succ);
    let n = succ.len();
    let reachable = |v: usize| start.iter().any(|&s| s == v || r[s][v]);
    let mut done = vec![false; n];
    let mut out = Vec::new();
    for v in 0..n {
        if done[v] || !r[v][v] || !reachable(v) {
            continue;
        }
        let class: Vec<usize> = (0..n).filter(|&u| r[v][u] && r[u][v]).collect();
        for &u in &class {
            done[u] = true;
        }
        assert!(class.len() <= 16, "class of {} nodes is too large", class.len());
        for mask in 1u32..(1 << class.len()) {
            let nodes: Vec<usize> = (0..class.len()).filter(|&i| mask >> i & 1 == 1).map(|i| class[i]).collect();
            if strongly_connected(&nodes, succ) {
                out.push(nodes);
            }
        }
    }
    out
}

/// Whether some run of `a` on `w` is accepting.
pub fn dag_member(a: &Automaton, w: &Lasso) -> bool {
    let len = w.len();
    let loop_start = w.spoke.len();
    let n = a.num_states();
    let id = |q: usize, i: usize| q * len + i;
    let mut succ = vec![Vec::new(); n * len];
    for q in 0..n {
        for i in 0..len {
            let next = if i + 1 < len { i + 1 } else { loop_start };
            for &t in a.successors(q, w.letter_at(i)) {
                succ[id(q, i)].push(id(t, next));
            }
        }
    }
    let start: Vec<usize> = a.initial().iter().map(|q| id(q, 0)).collect();
    brute_cycle_sets(&succ, &start).iter().any(|nodes| {
        let inf: StateSet = nodes.iter().map(|v| v / len).collect();
        a.acceptance().satisfies(&inf).unwrap()
    })
}

// ---------------------------------------------------------------------------
// Generators.

pub fn state_set(n: usize) -> impl Strategy<Value = StateSet> {
    (0u64..(1 << n)).prop_map(move |m| mask_set(m, n))
}

pub fn nonempty_set(n: usize) -> impl Strategy<Value = StateSet> {
    (1u64..(1 << n)).prop_map(move |m| mask_set(m, n))
}

pub fn pairs(n: usize) -> impl Strategy<Value = Vec<Pair>> {
    vec((state_set(n), state_set(n)).prop_map(|(bad, good)| Pair::new(bad, good)), 1..=3)
}

/// Büchi, co-Büchi, parity, Rabin or Streett over `n` states.
pub fn acceptance(n: usize) -> BoxedStrategy<Acceptance> {
    prop_oneof![
        state_set(n).prop_map(Acceptance::Buchi),
        state_set(n).prop_map(Acceptance::CoBuchi),
        vec(0u32..4, n).prop_map(Acceptance::Parity),
        pairs(n).prop_map(Acceptance::Rabin),
        pairs(n).prop_map(Acceptance::Streett),
    ]
    .boxed()
}

fn build_deterministic(n: usize, delta: &[usize], acc: Acceptance) -> Automaton {
    let mut ts = Vec::new();
    for q in 0..n {
        for l in 0..2 {
            ts.push(Transition::new(q, l, delta[2 * q + l]));
        }
    }
    Automaton::new("d", letters(), state_names("s", n), StateSet::singleton(0), ts, acc).unwrap()
}

/// Complete deterministic automata over {a, b} with up to `max` states.
pub fn deterministic(max: usize) -> impl Strategy<Value = Automaton> {
    (1..=max)
        .prop_flat_map(|n| (Just(n), vec(0..n, 2 * n), acceptance(n)))
        .prop_map(|(n, delta, acc)| build_deterministic(n, &delta, acc))
}

/// Complete deterministic parity automata.
pub fn deterministic_parity(max: usize) -> impl Strategy<Value = Automaton> {
    (1..=max)
        .prop_flat_map(|n| (Just(n), vec(0..n, 2 * n), vec(0u32..4, n)))
        .prop_map(|(n, delta, prio)| build_deterministic(n, &delta, Acceptance::Parity(prio)))
}

/// Nondeterministic automata over {a, b}, possibly incomplete.
pub fn nondeterministic(max: usize) -> impl Strategy<Value = Automaton> {
    (1..=max)
        .prop_flat_map(|n| (Just(n), vec(0u64..(1 << n), 2 * n), 1u64..(1 << n), acceptance(n)))
        .prop_map(|(n, succ, init, acc)| {
            let mut ts = Vec::new();
            for q in 0..n {
                for l in 0..2 {
                    for t in mask_set(succ[2 * q + l], n).iter() {
                        ts.push(Transition::new(q, l, t));
                    }
                }
            }
            Automaton::new("n", letters(), state_names("s", n), mask_set(init, n), ts, acc).unwrap()
        })
}

/// Whether the accepting cycle sets of `d` are closed under taking larger
/// (`upward`) or smaller cycle sets.
pub fn cycle_sets_closed(d: &Automaton, upward: bool) -> bool {
    let succ = d.graph();
    let start: Vec<usize> = d.initial().iter().collect();
    let sets: Vec<(StateSet, bool)> = brute_cycle_sets(succ, &start)
        .into_iter()
        .map(|c| {
            let s: StateSet = c.into_iter().collect();
            let acc = d.acceptance().satisfies(&s).unwrap();
            (s, acc)
        })
        .collect();
    sets.iter().all(|(c, acc_c)| {
        sets.iter()
            .filter(|(c2, _)| c.is_subset(c2))
            .all(|(_, acc_c2)| if upward { !*acc_c || *acc_c2 } else { *acc_c || !*acc_c2 })
    })
}

/// A GFG automaton with a known witnessing strategy, built from a
/// deterministic base.
#[derive(Clone, Debug)]
pub struct GfgInstance {
    pub base: Automaton,
    pub automaton: Automaton,
    pub strategy: StrategyTransducer,
}

/// Two copies of every state of `d`, each transition leading to both
/// copies of its target. `choice[q]` picks the copy the strategy follows;
/// `traps` are (state, letter) pairs that also get a transition into a
/// rejecting trap.
pub fn twin_expand(d: &Automaton, choice: &[usize], traps: &[(usize, usize)]) -> GfgInstance {
    let n = d.num_states();
    let mut names = Vec::new();
    for q in 0..n {
        for i in 0..2 {
            names.push(format!("{}_{i}", d.state_name(q)));
        }
    }
    let proj: Vec<usize> = (0..2 * n).map(|v| v / 2).collect();
    let mut acc = d.acceptance().pullback(&proj);
    let mut ts = Vec::new();
    for t in d.transitions() {
        for i in 0..2 {
            for j in 0..2 {
                ts.push(Transition::new(2 * t.source + i, t.letter, 2 * t.target + j));
            }
        }
    }
    if !traps.is_empty() {
        let trap = 2 * n;
        names.push("trap".into());
        acc = acc.with_rejecting_sink(trap);
        for l in 0..2 {
            ts.push(Transition::new(trap, l, trap));
        }
        let mut seen = Vec::new();
        for &(v, l) in traps {
            let v = v % (2 * n);
            if !seen.contains(&(v, l)) {
                seen.push((v, l));
                ts.push(Transition::new(v, l, trap));
            }
        }
    }
    let q0 = d.initial().first().unwrap();
    let initial: StateSet = [2 * q0, 2 * q0 + 1].into_iter().collect();
    let automaton = Automaton::new("twin", letters(), names, initial, ts, acc).unwrap();
    // The memory of q follows the base run.
    let rho = (0..n)
        .map(|q| (0..2).map(|l| d.successors(q, l).first().copied()).collect())
        .collect();
    let tau = (0..n).map(|q| 2 * q + choice[q % choice.len()] % 2).collect();
    let strategy = StrategyTransducer::new("g", "twin", state_names("m", n), q0, tau, rho).unwrap();
    strategy.validate(&automaton).unwrap();
    GfgInstance {
        base: d.clone(),
        automaton,
        strategy,
    }
}

fn instance_from(base: impl Strategy<Value = Automaton>) -> impl Strategy<Value = GfgInstance> {
    (base, vec(0usize..2, 4), vec((0usize..8, 0usize..2), 0..3))
        .prop_map(|(d, choice, traps)| twin_expand(&d, &choice, &traps))
}

/// Twin expansions of random deterministic automata.
pub fn gfg_instance() -> impl Strategy<Value = GfgInstance> {
    instance_from(deterministic(3))
}

/// Twin expansions of deterministic parity automata whose language a
/// deterministic Büchi automaton recognizes.
pub fn buchi_realizable_instance() -> impl Strategy<Value = GfgInstance> {
    instance_from(deterministic_parity(3).prop_filter("Büchi-realizable", |d| cycle_sets_closed(d, true)))
}

/// Twin expansions of deterministic parity automata whose language a
/// deterministic co-Büchi automaton recognizes.
pub fn cobuchi_realizable_instance() -> impl Strategy<Value = GfgInstance> {
    instance_from(deterministic_parity(3).prop_filter("co-Büchi-realizable", |d| cycle_sets_closed(d, false)))
}

/// `d` with a rejecting trap reached by the given (state, letter) pairs:
/// unambiguous, GFG, and prunable back to `d`.
pub fn with_trap(d: &Automaton, traps: &[(usize, usize)]) -> Automaton {
    let n = d.num_states();
    let mut names = d.states().to_vec();
    names.push("trap".into());
    let mut ts = d.transitions().to_vec();
    ts.push(Transition::new(n, A, n));
    ts.push(Transition::new(n, B, n));
    for &(q, l) in traps {
        let t = Transition::new(q % n, l, n);
        if !ts.contains(&t) {
            ts.push(t);
        }
    }
    let acc = d.acceptance().with_rejecting_sink(n);
    Automaton::new("trapped", letters(), names, d.initial().clone(), ts, acc).unwrap()
}

pub fn unambiguous_instance() -> impl Strategy<Value = (Automaton, Automaton)> {
    let nonempty = deterministic(3).prop_filter("nonempty", |d| !oracles::is_empty(d));
    (nonempty, vec((0usize..3, 0usize..2), 1..4)).prop_map(|(d, traps)| {
        let a = with_trap(&d, &traps);
        (d, a)
    })
}

/// Arenas of 2 to 12 nodes; Eve nodes have at most two successors.
pub fn arena() -> impl Strategy<Value = GameArena> {
    (2usize..=12)
        .prop_flat_map(|n| {
            (
                Just(n),
                vec((any::<bool>(), vec(0..n, 1..=3)), n),
                0..n,
                vec((state_set(n), state_set(n)), 1..=2),
            )
        })
        .prop_map(|(n, nodes, initial, pairs)| {
            let mut owner = Vec::new();
            let mut succ = Vec::new();
            for (eve, mut out) in nodes {
                out.sort_unstable();
                out.dedup();
                if eve {
                    out.truncate(2);
                }
                owner.push(if eve { Player::Eve } else { Player::Adam });
                succ.push(out);
            }
            let pairs = pairs.into_iter().map(|(b, g)| Pair::new(b, g)).collect();
            let _ = n;
            GameArena::new(owner, succ, initial, pairs).unwrap()
        })
}

// ---------------------------------------------------------------------------
// Properties shared by the property suite and the acceptance runner.

pub fn prop_duality_sets(n: usize, ps: &[Pair], s: &StateSet) -> Check {
    let rabin = Acceptance::Rabin(ps.to_vec()).satisfies(s).unwrap();
    let swapped: Vec<Pair> = ps.iter().map(|p| Pair::new(p.good.clone(), p.bad.clone())).collect();
    let streett = Acceptance::Streett(swapped).satisfies(s).unwrap();
    prop_assert_ne!(rabin, streett, "pairs {:?} on {:?}", ps, s);
    let _ = n;
    Ok(())
}

/// Complementation on the same structure, checked on lassos.
pub fn prop_duality_automaton(d: &Automaton) -> Check {
    let dual = transform::dualize_deterministic(d).unwrap();
    // Negation alone complements only complete automata.
    let negated = d.with_acceptance(d.acceptance().negation()).unwrap();
    for w in Lasso::enumerate(2, 2, 3) {
        let m = oracles::member(d, &w);
        prop_assert_ne!(m, oracles::member(&dual, &w), "dual on {:?}", w);
        if d.is_complete() {
            prop_assert_ne!(m, oracles::member(&negated, &w), "negation on {:?}", w);
        }
    }
    Ok(())
}

/// Rabin rejection and Streett acceptance are closed under union.
pub fn prop_union_closure(ps: &[Pair], s1: &StateSet, s2: &StateSet) -> Check {
    let u = s1.union(s2);
    let rabin = Acceptance::Rabin(ps.to_vec());
    if !rabin.satisfies(s1).unwrap() && !rabin.satisfies(s2).unwrap() {
        prop_assert!(!rabin.satisfies(&u).unwrap());
    }
    let streett = Acceptance::Streett(ps.to_vec());
    if streett.satisfies(s1).unwrap() && streett.satisfies(s2).unwrap() {
        prop_assert!(streett.satisfies(&u).unwrap());
    }
    Ok(())
}

pub fn prop_member_matches_dag(a: &Automaton) -> Check {
    for w in Lasso::enumerate(2, 2, 2) {
        prop_assert_eq!(oracles::member(a, &w), dag_member(a, &w), "lasso {:?}", w);
    }
    Ok(())
}

/// The strategy's residuals match the automaton's, and the automaton
/// recognizes the base language.
pub fn prop_residuals(inst: &GfgInstance) -> Check {
    prop_assert_eq!(strategy::residual_check(&inst.automaton, &inst.strategy, 3).unwrap(), None);
    for w in Lasso::enumerate(2, 2, 3) {
        prop_assert_eq!(oracles::member(&inst.automaton, &w), oracles::member(&inst.base, &w));
    }
    Ok(())
}

/// After tightening and strong tightening, every good-set state has one
/// reachable memory and lies on no rejecting cycle of `A_g`.
pub fn prop_strongly_tight(inst: &GfgInstance) -> Check {
    let config = TransformConfig::default();
    let tight = transform::tighten(&inst.automaton, &inst.strategy, &config).unwrap();
    let g = tight.strategy.as_ref().unwrap();
    let strong = transform::strong_tighten(&tight.automaton, g, &config).unwrap();
    let (a, g) = (&strong.automaton, strong.strategy.as_ref().unwrap());
    prop_assert!(strategy::is_strongly_tight(a, g, config.cap).unwrap());
    let Acceptance::Rabin(ps) = a.acceptance() else {
        return Err(TestCaseError::fail("strong tightening must yield Rabin pairs"));
    };
    let ag = strategy::compose(a, g).unwrap();
    let reach = ag.reachable();
    let rejecting = GeneralCondition::from_acceptance(&ag.automaton.acceptance().negation(), g.num_memories());
    let good = ps.iter().fold(StateSet::new(), |acc, p| acc.union(&p.good));
    for q in good.iter() {
        let mems = ag.memories_of(q);
        prop_assert!(mems.len() <= 1, "state {} has memories {:?}", a.state_name(q), mems);
        for m in mems.iter() {
            let cycle = oracles::accepting_cycle_set(ag.automaton.graph(), &reach, &rejecting, Some(m));
            prop_assert!(cycle.is_none(), "rejecting cycle {:?} through {}", cycle, ag.memory_name(m));
        }
    }
    // The union of the good sets is then an equivalent Büchi condition.
    let nbw = transform::rabin_to_buchi(&tight.automaton, tight.strategy.as_ref().unwrap(), &config).unwrap();
    let v = oracles::bounded_equiv(&nbw.automaton, &inst.base, 4).unwrap();
    prop_assert!(agrees(&v), "{:?}", v);
    Ok(())
}

/// co-Büchi-realizable languages get an equivalent co-Büchi condition on
/// the tightened structure.
pub fn prop_to_cobuchi(inst: &GfgInstance) -> Check {
    let config = TransformConfig::default();
    let tight = transform::tighten(&inst.automaton, &inst.strategy, &config).unwrap();
    let ncw = transform::streett_to_cobuchi(&tight.automaton, tight.strategy.as_ref().unwrap(), &config).unwrap();
    prop_assert!(matches!(ncw.automaton.acceptance(), Acceptance::CoBuchi(_)));
    let v = oracles::bounded_equiv(&ncw.automaton, &inst.base, 4).unwrap();
    prop_assert!(agrees(&v), "{:?}", v);
    Ok(())
}

/// The pair-elimination solver agrees with strategy enumeration, and its
/// strategy wins on its region.
pub fn prop_solver(arena: &GameArena) -> Check {
    let verdict = games::solve_rabin_game(arena);
    let brute = arena.brute_force_region(1 << 16).unwrap();
    prop_assert_eq!(&verdict.eve_region, &brute);
    prop_assert!(arena.is_winning_strategy(&verdict.eve_region, &verdict.strategy));
    let expected = if verdict.eve_region.contains(arena.initial()) { Player::Eve } else { Player::Adam };
    prop_assert_eq!(verdict.winner, expected);
    if arena.num_nodes() <= 7 {
        prop_assert_eq!(&verdict.eve_region, &enumerated_region(arena));
    }
    Ok(())
}

/// Eve's winning region from memoryless strategy enumeration, judging each
/// strategy by subset enumeration of the cycles it leaves to Adam.
pub fn enumerated_region(arena: &GameArena) -> StateSet {
    let n = arena.num_nodes();
    let eve: Vec<usize> = (0..n).filter(|&v| arena.owner(v) == Player::Eve).collect();
    let total: usize = eve.iter().map(|&v| arena.successors(v).len()).product();
    let rabin = Acceptance::Rabin(arena.pairs().to_vec());
    let mut won = StateSet::new();
    for mut idx in 0..total {
        let mut succ: Vec<Vec<usize>> = (0..n).map(|v| arena.successors(v).to_vec()).collect();
        for &v in &eve {
            let k = arena.successors(v).len();
            succ[v] = vec![arena.successors(v)[idx % k]];
            idx /= k;
        }
        for v in 0..n {
            let losing = brute_cycle_sets(&succ, &[v]).into_iter().any(|c| {
                let s: StateSet = c.into_iter().collect();
                !rabin.satisfies(&s).unwrap()
            });
            if !losing {
                won.insert(v);
            }
        }
    }
    won
}

/// Pruning an unambiguous GFG automaton leaves a deterministic equivalent.
pub fn prop_unambiguous_detbyp(d: &Automaton, a: &Automaton) -> Check {
    let r = transform::unambiguous_detbyp(a, &TransformConfig::default()).unwrap();
    prop_assert!(r.automaton.is_deterministic());
    let v = oracles::bounded_equiv(&r.automaton, d, 5).unwrap();
    prop_assert!(agrees(&v), "{:?}", v);
    Ok(())
}

pub fn prop_io_roundtrip(a: &Automaton) -> Check {
    let text = io::print_automaton(a);
    let back = io::parse_automaton(&text).unwrap();
    prop_assert_eq!(&back, a);
    prop_assert_eq!(io::print_automaton(&back), text);
    Ok(())
}

pub fn prop_strategy_roundtrip(inst: &GfgInstance) -> Check {
    let text = io::print_strategy(&inst.strategy, &inst.automaton);
    let back = io::parse_strategy(&text, &inst.automaton).unwrap();
    prop_assert_eq!(&back, &inst.strategy);
    Ok(())
}
