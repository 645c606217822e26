//! Re-derives the documented results on the bundled corpus.

use std::fmt::Write as _;

use crate::acceptance::Acceptance;
use crate::automaton::Automaton;
use crate::corpus::{self, CorpusEntry};
use crate::error::{Error, Result};
use crate::games::{self, GfgReference, Player};
use crate::lasso::Lasso;
use crate::oracles::{self, Verdict};
use crate::stateset::StateSet;
use crate::strategy::{self, StrategyTransducer};
use crate::transform::{self, TransformConfig, TypenessTarget};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn() -> Result<(bool, String)>;

const CHECKS: &[(&str, &str, Check)] = &[
    ("l0", "a0 recognizes infinitely many b's", check_l0),
    ("tighten", "tightening a0 under g merges m1 into m1' and removes (q1,a,q2)", check_tighten),
    ("typeness-negative", "no Büchi/co-Büchi condition on a1, a4, a3, a2", check_negative_typeness),
    ("to-cobuchi", "pruned a3 becomes co-Büchi with rejecting set {p0}", check_to_cobuchi),
    ("to-buchi", "tightened a0 becomes Büchi with the union of good sets", check_to_buchi),
    ("to-weak", "co-Büchi to weak and weak pruning to determinism", check_weak),
    ("gfg", "letter games: a0 is GFG, the finitely-many-b's guesser is not", check_gfg),
    ("detbyp-unambiguous", "unambiguous GFG automata prune to determinism; a2 does not", check_unambiguous),
    ("pipelines", "dualization and to-cobuchi/to-buchi chains", check_pipelines),
    ("languages", "corpus automata agree with their references", check_languages),
];

pub fn run_all() -> Vec<CheckResult> {
    CHECKS
        .iter()
        .map(|&(id, title, check)| match check() {
            Ok((passed, detail)) => CheckResult { id, title, passed, detail },
            Err(e) => CheckResult {
                id,
                title,
                passed: false,
                detail: format!("error: {e}"),
            },
        })
        .collect()
}

fn entry(name: &str) -> Result<CorpusEntry> {
    corpus::load(name)
}

fn strategy_of(e: &CorpusEntry) -> Result<&StrategyTransducer> {
    e.strategy
        .as_ref()
        .ok_or_else(|| Error::Internal(format!("corpus entry {} has no strategy", e.name)))
}

fn reference_of(e: &CorpusEntry) -> Result<&Automaton> {
    e.reference
        .as_ref()
        .ok_or_else(|| Error::Internal(format!("corpus entry {} has no reference", e.name)))
}

fn no_counterexample(v: &Verdict) -> bool {
    !matches!(v, Verdict::Fails(_))
}

fn names(a: &Automaton, s: &StateSet) -> String {
    format!("{{{}}}", a.names(s.iter()).join(", "))
}

fn check_l0() -> Result<(bool, String)> {
    let e = entry("a0")?;
    let d = reference_of(&e)?;
    let lassos = Lasso::enumerate(2, 2, 3);
    let disagree = lassos
        .iter()
        .find(|w| oracles::member(&e.automaton, w) != oracles::member(d, w));
    let contained = oracles::contained_in_deterministic(&e.automaton, d)?;
    let ok = disagree.is_none() && contained == Verdict::Holds;
    let mut detail = format!("{} lassos compared", lassos.len());
    if let Some(w) = disagree {
        let _ = write!(detail, ", disagreement on {}", w.display(e.automaton.alphabet()));
    }
    let _ = write!(detail, "; containment {contained:?}");
    Ok((ok, detail))
}

fn check_tighten() -> Result<(bool, String)> {
    let e = entry("a0_g")?;
    let g = strategy_of(&e)?;
    let r = transform::tighten(&e.automaton, g, &TransformConfig::default())?;
    let out_g = r.strategy.as_ref().expect("tighten keeps a strategy");
    let tight = strategy::is_tight(&r.automaton, out_g)?;
    let expected = entry("a0_tight")?;
    let same = r.automaton == expected.automaton && Some(out_g) == expected.strategy.as_ref();
    let summary = r.summary();
    Ok((
        summary == "merged m1→m1'; removed (q1,a,q2)" && tight && same,
        format!("{summary}; tight: {tight}; matches a0_tight: {same}"),
    ))
}

fn check_negative_typeness() -> Result<(bool, String)> {
    let cases = [
        ("a1", TypenessTarget::Buchi, 128),
        ("a4", TypenessTarget::Buchi, 16),
        ("a3", TypenessTarget::CoBuchi, 32),
        ("a2", TypenessTarget::CoBuchi, 16),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, target, expected) in cases {
        let e = entry(name)?;
        let w = e.witnesses.clone().unwrap_or_default();
        let out = transform::typeness_search(&e.automaton, target, &w, None, &[], &Default::default())?;
        let pass = out.found.is_none() && out.candidates == expected && out.separated == expected;
        ok &= pass;
        parts.push(format!("{name}: {}/{} separated", out.separated, out.candidates));
    }
    Ok((ok, parts.join("; ")))
}

fn check_to_cobuchi() -> Result<(bool, String)> {
    let e = entry("a3_pruned")?;
    let g = strategy_of(&e)?;
    let r = transform::streett_to_cobuchi(&e.automaton, g, &TransformConfig::default())?;
    let expected = Acceptance::CoBuchi(StateSet::singleton(e.automaton.state_index("p0").unwrap()));
    let a3 = entry("a3")?.automaton;
    let agree = oracles::bounded_equiv(&r.automaton, &a3, 4)?;
    Ok((
        r.automaton.acceptance() == &expected && no_counterexample(&agree),
        format!("{}; against a3: {agree:?}", r.summary()),
    ))
}

fn check_to_buchi() -> Result<(bool, String)> {
    let e = entry("a0_tight")?;
    let g = strategy_of(&e)?;
    let d = reference_of(&e)?;
    let config = TransformConfig::default();
    let strong = transform::strong_tighten(&e.automaton, g, &config)?;
    let Acceptance::Rabin(pairs) = strong.automaton.acceptance() else {
        return Ok((false, "strong tightening did not yield Rabin pairs".into()));
    };
    let union = pairs.iter().fold(StateSet::new(), |acc, p| acc.union(&p.good));
    let r = transform::rabin_to_buchi(&e.automaton, g, &config)?;
    let structural = r.automaton.acceptance() == &Acceptance::Buchi(union.clone());
    let contained = oracles::contained_in_deterministic(&r.automaton, d)?;
    let bounded = oracles::bounded_equiv(&r.automaton, d, 6)?;
    Ok((
        structural && contained == Verdict::Holds && no_counterexample(&bounded),
        format!(
            "α = {}; containment {contained:?}; bound 6: {bounded:?}",
            names(&r.automaton, &union)
        ),
    ))
}

fn check_weak() -> Result<(bool, String)> {
    let config = TransformConfig::default();
    let e = entry("dcw_contains_b")?;
    let r = transform::cobuchi_to_weak(&e.automaton, strategy_of(&e)?, &config)?;
    let Acceptance::Weak(acc) = r.automaton.acceptance() else {
        return Ok((false, "output is not weak".into()));
    };
    let shape = r.automaton.is_weak_shape(acc);
    let v1 = oracles::bounded_equiv(&r.automaton, &e.automaton, 5)?;
    let w = entry("weak_gfg")?;
    let r2 = transform::weak_detbyp(&w.automaton, strategy_of(&w)?, &config)?;
    let det = r2.automaton.is_deterministic();
    let v2 = oracles::bounded_equiv(&r2.automaton, &w.automaton, 5)?;
    Ok((
        shape && no_counterexample(&v1) && det && no_counterexample(&v2),
        format!(
            "weak set {}; bound 5: {v1:?}; weak_gfg pruned: {}; deterministic: {det}; bound 5: {v2:?}",
            names(&r.automaton, acc),
            r2.summary()
        ),
    ))
}

fn check_gfg() -> Result<(bool, String)> {
    let e = entry("a0")?;
    let report = games::check_gfg(&e.automaton, reference_of(&e)?, &Default::default())?;
    let eve = report.winner == Player::Eve && report.residual_mismatch.is_none();
    let n = entry("nbw_fin_b")?;
    let d = reference_of(&n)?;
    let report2 = games::check_gfg(&n.automaton, d, &Default::default())?;
    let brute = games::brute_force_gfg(&n.automaton, 3, GfgReference::Deterministic(d), games::DEFAULT_BRUTE_BUDGET)?;
    Ok((
        eve && report2.winner == Player::Adam && brute.is_none(),
        format!(
            "a0: {} wins, {} memories; nbw_fin_b: {} wins, brute force up to 3 memories: {}",
            report.winner,
            report.strategy.as_ref().map_or(0, |g| g.num_memories()),
            report2.winner,
            if brute.is_none() { "none" } else { "found" }
        ),
    ))
}

fn check_unambiguous() -> Result<(bool, String)> {
    let config = TransformConfig::default();
    let e = entry("unambiguous_l0")?;
    let r = transform::unambiguous_detbyp(&e.automaton, &config)?;
    let v = oracles::bounded_equiv(&r.automaton, &e.automaton, 5)?;
    let ok1 = r.automaton.is_deterministic() && no_counterexample(&v);
    let a2 = entry("a2")?;
    let err = transform::unambiguous_detbyp(&a2.automaton, &config).unwrap_err();
    let ok2 = matches!(&err, Error::NotUnambiguousGfg { state, letter } if state == "q2" && letter == "a");
    Ok((ok1 && ok2, format!("{}; a2: {err}", r.summary())))
}

fn check_pipelines() -> Result<(bool, String)> {
    let config = TransformConfig::default();
    let d = entry("dbw_l0")?.automaton;
    let dual = transform::dualize_deterministic(&d)?;
    let complement = Lasso::enumerate(2, 3, 3)
        .iter()
        .all(|w| oracles::member(&d, w) != oracles::member(&dual, w));
    let e = entry("a3_pruned")?;
    let g = strategy_of(&e)?;
    let ncw = transform::streett_to_cobuchi(&e.automaton, g, &config)?;
    let nbw = transform::rabin_to_buchi(&ncw.automaton, ncw.strategy.as_ref().unwrap(), &config)?;
    let v = oracles::bounded_equiv(&nbw.automaton, &e.automaton, 4)?;
    Ok((
        complement && no_counterexample(&v),
        format!(
            "dual of dbw_l0 complements it: {complement}; a3_pruned → {} → {}: {v:?}",
            ncw.automaton.acceptance().kind().display_name(),
            nbw.automaton.acceptance().kind().display_name()
        ),
    ))
}

fn check_languages() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for name in corpus::names() {
        let e = entry(name)?;
        if let Some(d) = &e.reference {
            let v = oracles::bounded_equiv(&e.automaton, d, 4)?;
            ok &= no_counterexample(&v);
            parts.push(format!("{name}: {v:?}"));
        }
        if let Some(w) = &e.witnesses {
            let sep = oracles::separated_by_witnesses(&e.automaton, w);
            ok &= sep.is_none();
        }
        if let Some(g) = &e.strategy {
            let res = strategy::residual_check(&e.automaton, g, 3)?;
            ok &= res.is_none();
        }
    }
    Ok((ok, parts.join("; ")))
}

#[cfg(test)]
mod tests {
    #[test]
    fn corpus_checks_pass() {
        let results = super::run_all();
        for r in &results {
            println!("{} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.id, r.detail);
        }
        assert!(results.iter().all(|r| r.passed));
    }
}
