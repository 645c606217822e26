//! Good-for-games ω-automata: acceptance conditions, strategy transducers,
//! tightening, typeness transformations, pruning to determinism and a
//! letter-game GFGness check.

pub mod acceptance;
pub mod automaton;
pub mod corpus;
pub mod error;
pub mod games;
pub mod graph;
pub mod io;
pub mod lasso;
pub mod oracles;
pub mod stateset;
pub mod strategy;
pub mod transform;
pub mod verify;

pub use acceptance::{Acceptance, AcceptanceKind, GeneralCondition, Pair};
pub use automaton::{Automaton, AutomatonBuilder, NamedAcceptance, Transition};
pub use error::{Error, Result};
pub use lasso::Lasso;
pub use oracles::Verdict;
pub use stateset::StateSet;
pub use strategy::{ComposedAutomaton, StrategyTransducer};
