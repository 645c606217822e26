mod common;

use common::*;
use gfg_core::corpus;
use gfg_core::strategy;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rabin_and_swapped_streett_are_complementary(
        (ps, s) in (1usize..=6).prop_flat_map(|n| (pairs(n), nonempty_set(n)))
    ) {
        let n = s.last().unwrap() + 1;
        prop_duality_sets(n, &ps, &s)?;
    }

    #[test]
    fn union_closure((ps, s1, s2) in (1usize..=6).prop_flat_map(|n| (pairs(n), nonempty_set(n), nonempty_set(n)))) {
        prop_union_closure(&ps, &s1, &s2)?;
    }

    #[test]
    fn io_roundtrip(a in nondeterministic(4)) {
        prop_io_roundtrip(&a)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dualization_complements(d in deterministic(4)) {
        prop_duality_automaton(&d)?;
    }

    #[test]
    fn member_matches_run_dag(a in nondeterministic(3)) {
        prop_member_matches_dag(&a)?;
    }

    #[test]
    fn witnessing_strategies_preserve_residuals(inst in gfg_instance()) {
        prop_residuals(&inst)?;
        prop_strategy_roundtrip(&inst)?;
    }

    #[test]
    fn strongly_tight_good_states_avoid_rejecting_cycles(inst in buchi_realizable_instance()) {
        prop_strongly_tight(&inst)?;
    }

    #[test]
    fn cobuchi_realizable_languages_get_cobuchi_conditions(inst in cobuchi_realizable_instance()) {
        prop_to_cobuchi(&inst)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn solver_matches_brute_force(arena in arena()) {
        prop_solver(&arena)?;
    }
}

#[test]
fn corpus_member_matches_run_dag() {
    for name in corpus::names() {
        let e = corpus::load(name).unwrap();
        prop_member_matches_dag(&e.automaton).unwrap_or_else(|err| panic!("{name}: {err}"));
    }
}

#[test]
fn corpus_strategies_preserve_residuals() {
    for name in corpus::names() {
        let e = corpus::load(name).unwrap();
        if let Some(g) = &e.strategy {
            assert_eq!(strategy::residual_check(&e.automaton, g, 3).unwrap(), None, "{name}");
        }
    }
}

#[test]
fn corpus_deterministic_duality() {
    for name in corpus::names() {
        let e = corpus::load(name).unwrap();
        if e.automaton.is_deterministic() {
            prop_duality_automaton(&e.automaton).unwrap_or_else(|err| panic!("{name}: {err}"));
        }
    }
}

#[test]
fn corpus_roundtrip() {
    for name in corpus::names() {
        prop_io_roundtrip(&corpus::load(name).unwrap().automaton).unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn unambiguous_gfg_automata_prune_to_determinism((d, a) in unambiguous_instance()) {
        prop_unambiguous_detbyp(&d, &a)?;
    }
}
