mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Good-for-games ω-automata: membership, tightening, typeness
/// transformations, pruning and letter-game GFGness checks.
#[derive(Parser, Debug)]
#[command(name = "gfg", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Print a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Inputs {
    /// Automaton file.
    #[arg(short = 'a', value_name = "FILE")]
    pub automaton: Option<PathBuf>,

    /// Strategy file for the automaton.
    #[arg(short = 'g', value_name = "FILE")]
    pub strategy: Option<PathBuf>,

    /// Deterministic reference automaton file.
    #[arg(short = 'd', value_name = "FILE")]
    pub reference: Option<PathBuf>,

    /// Witness file with `accept U:V` / `reject U:V` lines.
    #[arg(long, value_name = "FILE")]
    pub witness: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Output {
    /// Directory for output files.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,

    /// Also emit the result in Graphviz dot format.
    #[arg(long)]
    pub dot: bool,

    /// Also emit the result in HOA format.
    #[arg(long)]
    pub hoa: bool,
}

#[derive(Args, Debug, Clone)]
pub struct TransformArgs {
    #[command(flatten)]
    pub inputs: Inputs,

    #[command(flatten)]
    pub output: Output,

    /// Lasso bound for verifying the result against the input (0 skips).
    #[arg(long, default_value_t = 4)]
    pub bound: usize,

    /// Largest SCC region for cycle enumeration.
    #[arg(long, default_value_t = gfg_core::graph::DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Buchi,
    Cobuchi,
    Weak,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether a lasso U:V is accepted.
    Member {
        #[command(flatten)]
        inputs: Inputs,
        /// The word U·V^ω, e.g. `ab:ba` or `:b`.
        #[arg(long, value_name = "U:V")]
        lasso: String,
    },
    /// Decide language emptiness.
    Empty {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Compare the automaton with a reference: exact containment in a
    /// deterministic reference, bounded sweep for the other direction.
    Equiv {
        #[command(flatten)]
        inputs: Inputs,
        /// Lasso bound; defaults to one derived from the state counts.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Remove unused transitions and merge replaceable memories.
    Tighten(TransformArgs),
    /// Shrink the good sets until the automaton is strongly tight.
    StrongTighten(TransformArgs),
    /// Streett/parity/Büchi to co-Büchi on the same structure.
    ToCobuchi(TransformArgs),
    /// Rabin/parity/co-Büchi to Büchi on the same structure.
    ToBuchi(TransformArgs),
    /// co-Büchi to weak on the same structure.
    ToWeak(TransformArgs),
    /// Prune an unambiguous GFG automaton to a deterministic one.
    DetbypUnambiguous(TransformArgs),
    /// Prune a strongly tight weak GFG automaton to a deterministic one.
    DetbypWeak(TransformArgs),
    /// Complement a deterministic automaton on its own structure.
    Dualize {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        output: Output,
    },
    /// Solve the letter game against a deterministic reference.
    CheckGfg {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        output: Output,
        /// Lasso bound for the reference and strategy checks.
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Search all strategies with at most --bound memories.
    BruteGfg {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        output: Output,
        /// Memory bound.
        #[arg(long, default_value_t = 3)]
        bound: usize,
        /// Largest number of transducers to enumerate.
        #[arg(long, default_value_t = gfg_core::games::DEFAULT_BRUTE_BUDGET)]
        budget: u128,
    },
    /// Search for an equivalent Büchi, co-Büchi or weak condition on the
    /// automaton's structure.
    TypenessSearch {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum)]
        target: Target,
        /// Lasso bound for the sweep against the reference.
        #[arg(long, default_value_t = 4)]
        bound: usize,
        /// Largest number of candidate sets.
        #[arg(long, default_value_t = 1 << 20)]
        budget: u128,
    },
    /// List the bundled corpus, or show or extract one entry.
    Corpus {
        name: Option<String>,
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
    /// Re-run the checks on the bundled corpus.
    VerifyCorpus,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Member { .. } => "member",
            Command::Empty { .. } => "empty",
            Command::Equiv { .. } => "equiv",
            Command::Tighten(_) => "tighten",
            Command::StrongTighten(_) => "strong-tighten",
            Command::ToCobuchi(_) => "to-cobuchi",
            Command::ToBuchi(_) => "to-buchi",
            Command::ToWeak(_) => "to-weak",
            Command::DetbypUnambiguous(_) => "detbyp-unambiguous",
            Command::DetbypWeak(_) => "detbyp-weak",
            Command::Dualize { .. } => "dualize",
            Command::CheckGfg { .. } => "check-gfg",
            Command::BruteGfg { .. } => "brute-gfg",
            Command::TypenessSearch { .. } => "typeness-search",
            Command::Corpus { .. } => "corpus",
            Command::VerifyCorpus => "verify-corpus",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();
    let (code, text) = match commands::run(&cli.command) {
        Ok(outcome) => {
            let text = if cli.json {
                outcome.json
            } else {
                outcome.text
            };
            (outcome.exit, text)
        }
        Err(e) => {
            let code = e.exit_code();
            if cli.json {
                let r = report::ErrorReport {
                    command: name,
                    error: e.to_string(),
                    exit_code: code,
                };
                (code, serde_json::to_string_pretty(&r).expect("reports serialize"))
            } else {
                eprintln!("gfg {name}: {e}");
                (code, String::new())
            }
        }
    };
    if !text.is_empty() {
        println!("{}", text.trim_end());
    }
    ExitCode::from(code)
}
