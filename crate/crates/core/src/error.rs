use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("parity condition is undefined on empty set")]
    ParityOnEmptySet,

    #[error("state index {0} is not a state of the automaton")]
    ForeignState(usize),

    #[error("enumeration cap exceeded: region of {region} states, cap {cap}")]
    EnumerationCap { region: usize, cap: usize },

    #[error("budget exceeded: {needed} candidates, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("automaton is not deterministic at ({state}, {letter})")]
    NotDeterministic { state: String, letter: String },

    #[error("ill-formed strategy at ({memory}, {letter}): {reason}")]
    IllFormedStrategy {
        memory: String,
        letter: String,
        reason: String,
    },

    #[error("invalid strategy: {0}")]
    InvalidStrategy(String),

    #[error("unsupported acceptance condition: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not weak: precondition (NWW-realizability or tightness) violated; mixed component {{{}}}", .component.join(", "))]
    NotWeak { component: Vec<String> },

    #[error("input not unambiguous-GFG: residual nondeterminism at ({state}, {letter})")]
    NotUnambiguousGfg { state: String, letter: String },

    #[error("input not unambiguous-GFG: {0} surviving initial states")]
    AmbiguousInitial(usize),

    #[error("input not weak-GFG (or not strongly tight): nondeterminism remains at ({state}, {letter})")]
    NotWeakGfg { state: String, letter: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("verification failed: languages differ on {lasso}")]
    VerificationFailed { lasso: String },

    #[error("alphabets differ")]
    AlphabetMismatch,

    #[error("Adam wins the letter game; no strategy to extract")]
    AdamWins,

    #[error("unknown corpus entry '{0}'")]
    UnknownCorpusEntry(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
