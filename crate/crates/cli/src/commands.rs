use std::fmt::{self, Write as _};
use std::fs;
use std::path::{Path, PathBuf};

use gfg_core::games::{self, GfgConfig, GfgReference, Player};
use gfg_core::io;
use gfg_core::oracles;
use gfg_core::transform::{self, SearchConfig, TransformConfig, TypenessTarget};
use gfg_core::{corpus, verify, Automaton, Error, Lasso, StrategyTransducer, Verdict};
use serde::Serialize;

use crate::report::{self, CheckReport, StrategySummary, VerdictReport};
use crate::{Command, Inputs, Output, Target, TransformArgs};

pub struct Outcome {
    pub exit: u8,
    pub text: String,
    /// The pretty-printed JSON report.
    pub json: String,
}

impl Outcome {
    fn new(exit: u8, text: String, report: impl Serialize) -> Self {
        Outcome {
            exit,
            text,
            json: serde_json::to_string_pretty(&report).expect("reports serialize"),
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(PathBuf, std::io::Error),
    Core(Option<PathBuf>, Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(..) => 2,
            CliError::Core(_, e) => match e {
                Error::EnumerationCap { .. } | Error::BudgetExceeded { .. } => 3,
                Error::Parse { .. }
                | Error::InvalidAutomaton(_)
                | Error::InvalidStrategy(_)
                | Error::IllFormedStrategy { .. }
                | Error::ForeignState(_)
                | Error::AlphabetMismatch
                | Error::NotDeterministic { .. }
                | Error::Unsupported(_)
                | Error::UnknownCorpusEntry(_)
                | Error::ParityOnEmptySet => 2,
                _ => 1,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Core(Some(p), e) => write!(f, "{}: {e}", p.display()),
            CliError::Core(None, e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(None, e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cmd: &Command) -> Result<Outcome> {
    let name = cmd.name();
    match cmd {
        Command::Member { inputs, lasso } => member(inputs, lasso),
        Command::Empty { inputs } => empty(inputs),
        Command::Equiv { inputs, bound } => equiv(inputs, *bound),
        Command::Tighten(args)
        | Command::StrongTighten(args)
        | Command::ToCobuchi(args)
        | Command::ToBuchi(args)
        | Command::ToWeak(args)
        | Command::DetbypUnambiguous(args)
        | Command::DetbypWeak(args) => transform_cmd(name, args),
        Command::Dualize { inputs, output } => dualize(inputs, output),
        Command::CheckGfg { inputs, output, bound } => check_gfg(inputs, output, *bound),
        Command::BruteGfg {
            inputs,
            output,
            bound,
            budget,
        } => brute_gfg(inputs, output, *bound, *budget),
        Command::TypenessSearch {
            inputs,
            target,
            bound,
            budget,
        } => typeness(inputs, *target, *bound, *budget),
        Command::Corpus { name, out } => corpus_cmd(name.as_deref(), out.as_deref()),
        Command::VerifyCorpus => verify_corpus(),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn required<'p>(p: &'p Option<PathBuf>, flag: &str) -> Result<&'p Path> {
    p.as_deref().ok_or_else(|| CliError::Usage(format!("{flag} FILE is required")))
}

fn load_automaton(path: &Path) -> Result<Automaton> {
    io::parse_automaton(&read(path)?).map_err(|e| CliError::Core(Some(path.to_path_buf()), e))
}

fn automaton(inputs: &Inputs) -> Result<Automaton> {
    load_automaton(required(&inputs.automaton, "-a")?)
}

fn reference(inputs: &Inputs) -> Result<Automaton> {
    load_automaton(required(&inputs.reference, "-d")?)
}

/// The strategy from `-g`, or the identity strategy of a deterministic
/// automaton.
fn strategy(inputs: &Inputs, a: &Automaton) -> Result<StrategyTransducer> {
    match &inputs.strategy {
        Some(p) => io::parse_strategy(&read(p)?, a).map_err(|e| CliError::Core(Some(p.clone()), e)),
        None if a.is_deterministic() => Ok(StrategyTransducer::identity(a)?),
        None => Err(CliError::Usage("-g FILE is required for a nondeterministic automaton".into())),
    }
}

fn witnesses(inputs: &Inputs, a: &Automaton) -> Result<Option<Vec<(Lasso, bool)>>> {
    inputs
        .witness
        .as_ref()
        .map(|p| io::parse_witnesses(&read(p)?, a.alphabet()).map_err(|e| CliError::Core(Some(p.clone()), e)))
        .transpose()
}

fn write_file(dir: &Path, name: &str, text: &str, written: &mut Vec<String>) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| CliError::Io(dir.to_path_buf(), e))?;
    let path = dir.join(name);
    fs::write(&path, text).map_err(|e| CliError::Io(path.clone(), e))?;
    written.push(path.display().to_string());
    Ok(())
}

/// Writes the result files into `--out`, or appends them to the text
/// report when no directory is given.
fn emit(output: &Output, a: &Automaton, g: Option<&StrategyTransducer>, text: &mut String) -> Result<Vec<String>> {
    let mut written = Vec::new();
    let mut parts = vec![(format!("{}.aut", a.name()), io::print_automaton(a))];
    if let Some(g) = g {
        parts.push((format!("{}.strat", a.name()), io::print_strategy(g, a)));
    }
    if output.dot {
        parts.push((format!("{}.dot", a.name()), io::to_dot(a)));
        if let Some(g) = g {
            parts.push((format!("{}.strat.dot", a.name()), io::strategy_to_dot(g, a)));
        }
    }
    if output.hoa {
        parts.push((format!("{}.hoa", a.name()), io::to_hoa(a)));
    }
    match &output.out {
        Some(dir) => {
            for (name, body) in &parts {
                write_file(dir, name, body, &mut written)?;
            }
            for w in &written {
                let _ = writeln!(text, "wrote {w}");
            }
        }
        None => {
            for (_, body) in &parts {
                let _ = write!(text, "\n{body}");
            }
        }
    }
    Ok(written)
}

fn verdict_text(v: &Verdict, alphabet: &[String]) -> String {
    match v {
        Verdict::Holds => "holds".into(),
        Verdict::Fails(w) => format!("fails on {}", w.display(alphabet)),
        Verdict::Unknown(b) => format!("no counterexample up to bound {b}"),
    }
}

fn summary(g: &StrategyTransducer, a: &Automaton) -> StrategySummary {
    StrategySummary {
        name: g.name().to_string(),
        memories: g.memories().to_vec(),
        text: io::print_strategy(g, a),
    }
}

fn member(inputs: &Inputs, lasso: &str) -> Result<Outcome> {
    let a = automaton(inputs)?;
    let w = Lasso::parse(lasso, a.alphabet())?;
    let accepted = oracles::member(&a, &w);
    Ok(Outcome::new(
        if accepted { 0 } else { 1 },
        if accepted { "accepted" } else { "rejected" }.to_string(),
        report::MemberReport {
            command: "member",
            automaton: a.name().to_string(),
            lasso: w.display(a.alphabet()),
            accepted,
        },
    ))
}

fn empty(inputs: &Inputs) -> Result<Outcome> {
    let a = automaton(inputs)?;
    let witness = oracles::accepting_lasso(&a).map(|w| w.display(a.alphabet()));
    let text = match &witness {
        None => "empty".to_string(),
        Some(w) => format!("nonempty: accepts {w}"),
    };
    Ok(Outcome::new(
        if witness.is_none() { 0 } else { 1 },
        text,
        report::EmptyReport {
            command: "empty",
            automaton: a.name().to_string(),
            empty: witness.is_none(),
            witness,
        },
    ))
}

fn equiv(inputs: &Inputs, bound: Option<usize>) -> Result<Outcome> {
    let a = automaton(inputs)?;
    let d = reference(inputs)?;
    let bound = bound.unwrap_or_else(|| oracles::default_bound(&a, &d)).max(1);
    let direction = |x: &Automaton, y: &Automaton| {
        if y.is_deterministic() {
            oracles::contained_in_deterministic(x, y)
        } else {
            oracles::bounded_containment(x, y, bound)
        }
    };
    let forward = direction(&a, &d)?;
    let backward = direction(&d, &a)?;
    let alphabet = a.alphabet();
    let differ = matches!(forward, Verdict::Fails(_)) || matches!(backward, Verdict::Fails(_));
    let text = if forward == Verdict::Holds && backward == Verdict::Holds {
        "equivalent".to_string()
    } else if let Verdict::Fails(w) = &forward {
        format!("not equivalent: {} accepts {}, {} rejects it", a.name(), w.display(alphabet), d.name())
    } else if let Verdict::Fails(w) = &backward {
        format!("not equivalent: {} accepts {}, {} rejects it", d.name(), w.display(alphabet), a.name())
    } else {
        format!(
            "no counterexample: {} ⊆ {}: {}; {} ⊆ {}: {}",
            a.name(),
            d.name(),
            verdict_text(&forward, alphabet),
            d.name(),
            a.name(),
            verdict_text(&backward, alphabet)
        )
    };
    Ok(Outcome::new(
        if differ { 1 } else { 0 },
        text,
        report::EquivReport {
            command: "equiv",
            automaton: a.name().to_string(),
            reference: d.name().to_string(),
            forward: VerdictReport::new(&forward, alphabet),
            backward: VerdictReport::new(&backward, alphabet),
        },
    ))
}

fn transform_cmd(name: &'static str, args: &TransformArgs) -> Result<Outcome> {
    let a = automaton(&args.inputs)?;
    let config = TransformConfig {
        cap: args.cap,
        verify_bound: (args.bound > 0).then_some(args.bound),
        include_unreachable: false,
    };
    let r = if name == "detbyp-unambiguous" {
        transform::unambiguous_detbyp(&a, &config)?
    } else {
        let g = strategy(&args.inputs, &a)?;
        match name {
            "tighten" => transform::tighten(&a, &g, &config)?,
            "strong-tighten" => transform::strong_tighten(&a, &g, &config)?,
            "to-cobuchi" => transform::streett_to_cobuchi(&a, &g, &config)?,
            "to-buchi" => transform::rabin_to_buchi(&a, &g, &config)?,
            "to-weak" => transform::cobuchi_to_weak(&a, &g, &config)?,
            "detbyp-weak" => transform::weak_detbyp(&a, &g, &config)?,
            other => unreachable!("not a transformation: {other}"),
        }
    };
    let out = &r.automaton;
    let mut text = if r.steps.is_empty() {
        "no changes".to_string()
    } else {
        r.summary()
    };
    if let Some(e) = &r.encoding {
        let _ = write!(text, "\nencoding: {e}");
    }
    for c in &r.verification {
        let _ = write!(text, "\ncheck: {c}");
    }
    let condition = io::format_acceptance(out.states(), out.acceptance());
    let _ = writeln!(text, "\noutput: {} (acc {condition})", out.name());
    let files = emit(&args.output, out, r.strategy.as_ref(), &mut text)?;
    let verification = r
        .verification
        .iter()
        .map(|c| CheckReport {
            description: c.description.clone(),
            result: VerdictReport::new(&c.verdict, a.alphabet()),
        })
        .collect();
    Ok(Outcome::new(
        0,
        text,
        report::TransformReport {
            command: name,
            input: a.name().to_string(),
            output: out.name().to_string(),
            acceptance: out.acceptance().kind(),
            condition,
            steps: r.steps.iter().map(|s| s.to_string()).collect(),
            encoding: r.encoding.clone(),
            verification,
            automaton_text: io::print_automaton(out),
            strategy_text: r.strategy.as_ref().map(|g| io::print_strategy(g, out)),
            files,
        },
    ))
}

fn dualize(inputs: &Inputs, output: &Output) -> Result<Outcome> {
    let a = automaton(inputs)?;
    let out = transform::dualize_deterministic(&a)?;
    let condition = io::format_acceptance(out.states(), out.acceptance());
    let mut text = format!("complement of {}: {} (acc {condition})\n", a.name(), out.name());
    let files = emit(output, &out, None, &mut text)?;
    Ok(Outcome::new(
        0,
        text,
        report::TransformReport {
            command: "dualize",
            input: a.name().to_string(),
            output: out.name().to_string(),
            acceptance: out.acceptance().kind(),
            condition,
            steps: Vec::new(),
            encoding: None,
            verification: Vec::new(),
            automaton_text: io::print_automaton(&out),
            strategy_text: None,
            files,
        },
    ))
}

fn check_gfg(inputs: &Inputs, output: &Output, bound: usize) -> Result<Outcome> {
    let a = automaton(inputs)?;
    let d = reference(inputs)?;
    let r = games::check_gfg(
        &a,
        &d,
        &GfgConfig {
            bound: bound.max(1),
            ..GfgConfig::default()
        },
    )?;
    let alphabet = a.alphabet();
    let mut text = match r.winner {
        Player::Eve => format!("Eve wins: {} is GFG", a.name()),
        Player::Adam => format!("Adam wins: {} is not GFG", a.name()),
    };
    let _ = write!(
        text,
        "\narena: {} Adam nodes, {} Eve nodes\n{} ⊆ {}: {}\n{} ⊆ {}: {}",
        r.adam_nodes,
        r.eve_nodes,
        a.name(),
        d.name(),
        verdict_text(&r.automaton_in_reference, alphabet),
        d.name(),
        a.name(),
        verdict_text(&r.reference_in_automaton, alphabet)
    );
    let mut files = Vec::new();
    if let Some(g) = &r.strategy {
        let _ = write!(text, "\nstrategy {} with {} memories", g.name(), g.num_memories());
        match &r.residual_mismatch {
            None => {
                let _ = write!(text, "\nresiduals: no counterexample up to bound {bound}");
            }
            Some((m, w)) => {
                let _ = write!(text, "\nresiduals: memory {m} differs on {}", w.display(alphabet));
            }
        }
        if let Some(v) = &r.strategy_language {
            let _ = write!(text, "\nL(A_g) vs {}: {}", d.name(), verdict_text(v, alphabet));
        }
        let strat = io::print_strategy(g, &a);
        match &output.out {
            Some(dir) => {
                write_file(dir, &format!("{}.strat", g.name()), &strat, &mut files)?;
                if output.dot {
                    write_file(dir, &format!("{}.strat.dot", g.name()), &io::strategy_to_dot(g, &a), &mut files)?;
                }
                for f in &files {
                    let _ = write!(text, "\nwrote {f}");
                }
            }
            None => {
                let _ = write!(text, "\n\n{strat}");
            }
        }
    }
    Ok(Outcome::new(
        if r.winner == Player::Eve { 0 } else { 1 },
        text,
        report::GfgReport {
            command: "check-gfg",
            automaton: a.name().to_string(),
            reference: d.name().to_string(),
            winner: r.winner.to_string(),
            adam_nodes: r.adam_nodes,
            eve_nodes: r.eve_nodes,
            automaton_in_reference: VerdictReport::new(&r.automaton_in_reference, alphabet),
            reference_in_automaton: VerdictReport::new(&r.reference_in_automaton, alphabet),
            strategy: r.strategy.as_ref().map(|g| summary(g, &a)),
            residual_mismatch: r
                .residual_mismatch
                .as_ref()
                .map(|(m, w)| format!("{m} {}", w.display(alphabet))),
            strategy_language: r.strategy_language.as_ref().map(|v| VerdictReport::new(v, alphabet)),
            files,
        },
    ))
}

fn brute_gfg(inputs: &Inputs, output: &Output, bound: usize, budget: u128) -> Result<Outcome> {
    let a = automaton(inputs)?;
    let wits = witnesses(inputs, &a)?;
    let d = inputs.reference.as_deref().map(load_automaton).transpose()?;
    let reference = match (&d, &wits) {
        (Some(d), _) => GfgReference::Deterministic(d),
        (None, Some(w)) => GfgReference::Witnesses(w),
        (None, None) => return Err(CliError::Usage("-d FILE or --witness FILE is required".into())),
    };
    let found = games::brute_force_gfg(&a, bound, reference, budget)?;
    let mut files = Vec::new();
    let text = match &found {
        None => format!("no strategy with at most {bound} memories"),
        Some(g) => {
            let strat = io::print_strategy(g, &a);
            let mut t = format!("found strategy {} with {} memories", g.name(), g.num_memories());
            match &output.out {
                Some(dir) => {
                    write_file(dir, &format!("{}.strat", g.name()), &strat, &mut files)?;
                    for f in &files {
                        let _ = write!(t, "\nwrote {f}");
                    }
                }
                None => {
                    let _ = write!(t, "\n\n{strat}");
                }
            }
            t
        }
    };
    Ok(Outcome::new(
        if found.is_some() { 0 } else { 1 },
        text,
        report::BruteReport {
            command: "brute-gfg",
            automaton: a.name().to_string(),
            memory_bound: bound,
            strategy: found.as_ref().map(|g| summary(g, &a)),
            files,
        },
    ))
}

fn typeness(inputs: &Inputs, target: Target, bound: usize, budget: u128) -> Result<Outcome> {
    let a = automaton(inputs)?;
    let wits = witnesses(inputs, &a)?.unwrap_or_default();
    let d = inputs.reference.as_deref().map(load_automaton).transpose()?;
    let target = match target {
        Target::Buchi => TypenessTarget::Buchi,
        Target::Cobuchi => TypenessTarget::CoBuchi,
        Target::Weak => TypenessTarget::Weak,
    };
    let r = transform::typeness_search(
        &a,
        target,
        &wits,
        d.as_ref(),
        &[],
        &SearchConfig {
            budget,
            bound: bound.max(1),
        },
    )?;
    let kind = target.kind();
    let found = r
        .found
        .as_ref()
        .map(|(_, acc)| io::format_acceptance(a.states(), acc));
    let text = match &found {
        Some(acc) => format!(
            "found {} condition: acc {acc} ({} of {} candidates ruled out first)",
            kind.display_name(),
            r.separated,
            r.candidates
        ),
        None => format!(
            "no {} condition on structure: {}/{} candidates separated",
            kind.display_name(),
            r.separated,
            r.candidates
        ),
    };
    Ok(Outcome::new(
        if found.is_some() { 0 } else { 1 },
        text,
        report::TypenessReport {
            command: "typeness-search",
            automaton: a.name().to_string(),
            target: kind,
            found,
            structure: r.found.as_ref().map(|(i, _)| *i),
            candidates: r.candidates,
            separated: r.separated,
        },
    ))
}

fn corpus_cmd(name: Option<&str>, out: Option<&Path>) -> Result<Outcome> {
    let Some(name) = name else {
        let entries = corpus::names();
        return Ok(Outcome::new(
            0,
            entries.join("\n"),
            report::CorpusListReport {
                command: "corpus",
                entries,
            },
        ));
    };
    let e = corpus::load(name)?;
    let mut written = Vec::new();
    let mut text = format!("{}: {}", e.name, e.files.join(" "));
    for f in &e.files {
        let body = corpus::file(f).expect("listed corpus files exist");
        match out {
            Some(dir) => write_file(dir, f, body, &mut written)?,
            None => {
                let _ = write!(text, "\n\n# {f}\n{}", body.trim_end());
            }
        }
    }
    for w in &written {
        let _ = write!(text, "\nwrote {w}");
    }
    Ok(Outcome::new(
        0,
        text,
        report::CorpusEntryReport {
            command: "corpus",
            name: e.name.clone(),
            files: e.files.clone(),
            has_strategy: e.strategy.is_some(),
            has_reference: e.reference.is_some(),
            witnesses: e.witnesses.as_ref().map(Vec::len),
            written,
        },
    ))
}

fn verify_corpus() -> Result<Outcome> {
    let results = verify::run_all();
    let passed = results.iter().all(|r| r.passed);
    let mut text = String::new();
    for r in &results {
        let _ = writeln!(
            text,
            "{} {}: {} ({})",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.title,
            r.detail
        );
    }
    let _ = write!(
        text,
        "{}/{} checks passed",
        results.iter().filter(|r| r.passed).count(),
        results.len()
    );
    Ok(Outcome::new(
        if passed { 0 } else { 1 },
        text,
        report::VerifyReport {
            command: "verify-corpus",
            passed,
            checks: results
                .into_iter()
                .map(|r| report::VerifyItem {
                    id: r.id,
                    title: r.title,
                    passed: r.passed,
                    detail: r.detail,
                })
                .collect(),
        },
    ))
}
