//! The bundled example automata, with their strategies, deterministic
//! references and witness lassos.

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::io;
use crate::lasso::Lasso;
use crate::strategy::StrategyTransducer;

macro_rules! file {
    ($name:literal) => {
        ($name, include_str!(concat!("../corpus/", $name)))
    };
}

/// Every bundled file as `(file name, contents)`.
pub const FILES: &[(&str, &str)] = &[
    file!("a0.aut"),
    file!("a0_g.strat"),
    file!("a0_g3.strat"),
    file!("a0_tight.aut"),
    file!("a0_tight.strat"),
    file!("dbw_l0.aut"),
    file!("a1.aut"),
    file!("a1.wit"),
    file!("dbw_l1.aut"),
    file!("a2.aut"),
    file!("a2.wit"),
    file!("a3.aut"),
    file!("a3.wit"),
    file!("a3_pruned.aut"),
    file!("a4.aut"),
    file!("a4.wit"),
    file!("dcw_contains_b.aut"),
    file!("nbw_fin_b.aut"),
    file!("dcw_fin_b.aut"),
    file!("weak_gfg.aut"),
    file!("weak_gfg.strat"),
    file!("ncw_join.aut"),
    file!("unambiguous_l0.aut"),
];

struct EntryDef {
    name: &'static str,
    automaton: &'static str,
    strategy: Option<&'static str>,
    reference: Option<&'static str>,
    witnesses: Option<&'static str>,
}

const fn entry(
    name: &'static str,
    automaton: &'static str,
    strategy: Option<&'static str>,
    reference: Option<&'static str>,
    witnesses: Option<&'static str>,
) -> EntryDef {
    EntryDef {
        name,
        automaton,
        strategy,
        reference,
        witnesses,
    }
}

const ENTRIES: &[EntryDef] = &[
    entry("a0", "a0.aut", Some("a0_g.strat"), Some("dbw_l0.aut"), None),
    entry("a0_g", "a0.aut", Some("a0_g.strat"), Some("dbw_l0.aut"), None),
    entry("a0_g3", "a0.aut", Some("a0_g3.strat"), Some("dbw_l0.aut"), None),
    entry("a0_tight", "a0_tight.aut", Some("a0_tight.strat"), Some("dbw_l0.aut"), None),
    entry("dbw_l0", "dbw_l0.aut", None, None, None),
    entry("a1", "a1.aut", None, Some("dbw_l1.aut"), Some("a1.wit")),
    entry("dbw_l1", "dbw_l1.aut", None, None, None),
    entry("a2", "a2.aut", None, Some("dcw_contains_b.aut"), Some("a2.wit")),
    entry("a3", "a3.aut", None, Some("a3_pruned.aut"), Some("a3.wit")),
    entry("a3_pruned", "a3_pruned.aut", None, None, Some("a3.wit")),
    entry("a4", "a4.aut", None, None, Some("a4.wit")),
    entry("dcw_contains_b", "dcw_contains_b.aut", None, None, None),
    entry("nbw_fin_b", "nbw_fin_b.aut", None, Some("dcw_fin_b.aut"), None),
    entry("dcw_fin_b", "dcw_fin_b.aut", None, None, None),
    entry("weak_gfg", "weak_gfg.aut", Some("weak_gfg.strat"), None, None),
    entry("ncw_join", "ncw_join.aut", None, None, None),
    entry("unambiguous_l0", "unambiguous_l0.aut", None, Some("dbw_l0.aut"), None),
];

/// A corpus automaton with what comes with it. Deterministic automata
/// without a bundled strategy carry their identity strategy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub automaton: Automaton,
    pub strategy: Option<StrategyTransducer>,
    pub reference: Option<Automaton>,
    pub witnesses: Option<Vec<(Lasso, bool)>>,
    /// Bundled files this entry is built from.
    pub files: Vec<&'static str>,
}

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

/// Contents of a bundled file.
pub fn file(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

fn text(name: &str) -> Result<&'static str> {
    file(name).ok_or_else(|| Error::Internal(format!("missing corpus file {name}")))
}

pub fn load(name: &str) -> Result<CorpusEntry> {
    let def = ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownCorpusEntry(name.to_string()))?;
    let automaton = io::parse_automaton(text(def.automaton)?)?;
    let strategy = match def.strategy {
        Some(f) => Some(io::parse_strategy(text(f)?, &automaton)?),
        None if automaton.is_deterministic() => Some(StrategyTransducer::identity(&automaton)?),
        None => None,
    };
    let reference = def.reference.map(|f| io::parse_automaton(text(f)?)).transpose()?;
    let witnesses = def
        .witnesses
        .map(|f| io::parse_witnesses(text(f)?, automaton.alphabet()))
        .transpose()?;
    let files = [Some(def.automaton), def.strategy, def.reference, def.witnesses]
        .into_iter()
        .flatten()
        .collect();
    Ok(CorpusEntry {
        name: def.name.to_string(),
        automaton,
        strategy,
        reference,
        witnesses,
        files,
    })
}
