mod common;

use common::*;
use gfg_core::corpus;
use gfg_core::strategy::{self, StrategyTransducer};
use gfg_core::transform::{self, TransformConfig, TransformReport};
use gfg_core::{Acceptance, Automaton};

fn check_replay(input: &Automaton, g: Option<&StrategyTransducer>, r: &TransformReport) {
    let (a, g2) = r.replay(input, g).unwrap();
    assert_eq!(&a.with_acceptance(r.automaton.acceptance().clone()).unwrap(), &r.automaton);
    if let (Some(out), Some(replayed)) = (&r.strategy, g2) {
        assert_eq!(out.memories(), replayed.memories());
        assert_eq!(out.tau(), replayed.tau());
    }
}

#[test]
fn replays_reproduce_outputs() {
    let config = TransformConfig::default();
    let e = corpus::load("a0_g").unwrap();
    let g = e.strategy.as_ref().unwrap();
    let tight = transform::tighten(&e.automaton, g, &config).unwrap();
    check_replay(&e.automaton, Some(g), &tight);
    let tg = tight.strategy.as_ref().unwrap();
    let strong = transform::strong_tighten(&tight.automaton, tg, &config).unwrap();
    check_replay(&tight.automaton, Some(tg), &strong);
    assert!(strategy::is_strongly_tight(&strong.automaton, strong.strategy.as_ref().unwrap(), 16).unwrap());
    let u = corpus::load("unambiguous_l0").unwrap();
    let pruned = transform::unambiguous_detbyp(&u.automaton, &config).unwrap();
    check_replay(&u.automaton, None, &pruned);
    let w = corpus::load("weak_gfg").unwrap();
    let wg = w.strategy.as_ref().unwrap();
    let det = transform::weak_detbyp(&w.automaton, wg, &config).unwrap();
    check_replay(&w.automaton, Some(wg), &det);
}

#[test]
fn tightening_is_idempotent_on_corpus() {
    let config = TransformConfig::default();
    for name in corpus::names() {
        let e = corpus::load(name).unwrap();
        let Some(g) = &e.strategy else { continue };
        let once = transform::tighten(&e.automaton, g, &config).unwrap();
        let g1 = once.strategy.as_ref().unwrap();
        assert!(strategy::is_tight(&once.automaton, g1).unwrap(), "{name}");
        let twice = transform::tighten(&once.automaton, g1, &config).unwrap();
        assert!(twice.steps.is_empty(), "{name}: {}", twice.summary());
    }
}

#[test]
fn wrong_acceptance_kinds_are_rejected() {
    let config = TransformConfig::default();
    let e = corpus::load("a0").unwrap();
    let g = e.strategy.as_ref().unwrap();
    assert!(transform::cobuchi_to_weak(&e.automaton, g, &config).is_err());
    let rabin = e
        .automaton
        .with_acceptance(Acceptance::Rabin(e.automaton.acceptance().rabin_pairs(3).unwrap()))
        .unwrap();
    assert!(transform::streett_to_cobuchi(&rabin, g, &config).is_err());
    assert!(transform::rabin_to_buchi(&e.automaton, g, &config).is_err(), "untight input");
}

#[test]
fn dual_of_dbw_recognizes_finitely_many_bs() {
    let d = corpus::load("dbw_l0").unwrap().automaton;
    let dual = transform::dualize_deterministic(&d).unwrap();
    for w in gfg_core::Lasso::enumerate(2, 3, 3) {
        assert_eq!(gfg_core::oracles::member(&dual, &w), fin_b(&w));
    }
}
