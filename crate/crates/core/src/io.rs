//! Line-based text formats for automata, strategies and witness lists, plus
//! HOA and DOT export.
//!
//! Automaton format (`#` starts a comment):
//!
//! ```text
//! automaton a0
//! alphabet a b
//! states q0 q1 q2
//! initial q2
//! trans q2 b q2
//! acc parity q0:0 q1:1 q2:2
//! ```
//!
//! Acceptance lines are `acc buchi q..`, `acc cobuchi q..`, `acc weak q..`,
//! `acc parity q:p ..`, `acc rabin (E: q.. | F: q..) ..` and
//! `acc streett (E: q.. | F: q..) ..`.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::acceptance::{Acceptance, Pair};
use crate::automaton::{Automaton, Transition};
use crate::error::{Error, Result};
use crate::lasso::Lasso;
use crate::stateset::StateSet;
use crate::strategy::StrategyTransducer;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Token {
    text: String,
    column: usize,
}

/// Splits a line into tokens, treating `(`, `)` and `|` as tokens of their
/// own. Comments are stripped. Columns are 1-based character positions.
fn tokenize(line: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start = 0;
    for (i, c) in line.chars().enumerate() {
        if c == '#' {
            break;
        }
        if c.is_whitespace() || matches!(c, '(' | ')' | '|') {
            if !cur.is_empty() {
                out.push(Token {
                    text: std::mem::take(&mut cur),
                    column: start + 1,
                });
            }
            if !c.is_whitespace() {
                out.push(Token {
                    text: c.to_string(),
                    column: i + 1,
                });
            }
        } else {
            if cur.is_empty() {
                start = i;
            }
            cur.push(c);
        }
    }
    if !cur.is_empty() {
        out.push(Token {
            text: cur,
            column: start + 1,
        });
    }
    out
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Renders an acceptance condition in the `acc` line syntax (without the
/// leading `acc`).
pub fn format_acceptance(states: &[String], acc: &Acceptance) -> String {
    let names = |s: &StateSet| s.iter().map(|q| states[q].as_str()).collect::<Vec<_>>();
    let list = |kw: &str, s: &StateSet| {
        let mut parts = vec![kw];
        parts.extend(names(s));
        parts.join(" ")
    };
    let pairs = |kw: &str, ps: &[Pair]| {
        let mut out = kw.to_string();
        for p in ps {
            let side = |s: &StateSet| {
                let n = names(s);
                if n.is_empty() {
                    String::new()
                } else {
                    format!(" {}", n.join(" "))
                }
            };
            let _ = write!(out, " (E:{} | F:{})", side(&p.bad), side(&p.good));
        }
        out
    };
    match acc {
        Acceptance::Buchi(s) => list("buchi", s),
        Acceptance::CoBuchi(s) => list("cobuchi", s),
        Acceptance::Weak(s) => list("weak", s),
        Acceptance::Parity(prio) => {
            let mut out = "parity".to_string();
            for (q, p) in prio.iter().enumerate() {
                let _ = write!(out, " {}:{}", states[q], p);
            }
            out
        }
        Acceptance::Rabin(ps) => pairs("rabin", ps),
        Acceptance::Streett(ps) => pairs("streett", ps),
    }
}

pub fn print_automaton(a: &Automaton) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "automaton {}", a.name());
    let _ = writeln!(out, "alphabet {}", a.alphabet().join(" "));
    let _ = writeln!(out, "states {}", a.states().join(" "));
    let _ = writeln!(out, "initial {}", a.names(a.initial().iter()).join(" "));
    for t in a.transitions() {
        let _ = writeln!(
            out,
            "trans {} {} {}",
            a.state_name(t.source),
            a.letter_name(t.letter),
            a.state_name(t.target)
        );
    }
    let _ = writeln!(out, "acc {}", format_acceptance(a.states(), a.acceptance()));
    out
}

struct Header {
    line: usize,
    tokens: Vec<Token>,
}

fn parse_pairs(line: usize, toks: &[Token], resolve: &impl Fn(&Token) -> Result<usize>) -> Result<Vec<Pair>> {
    let mut pairs = Vec::new();
    let mut i = 0;
    let expect = |i: usize, what: &str| -> Result<&Token> {
        toks.get(i).ok_or_else(|| {
            let col = toks.last().map_or(1, |t| t.column + t.text.chars().count());
            parse_err(line, col, format!("expected {what}"))
        })
    };
    while i < toks.len() {
        let open = expect(i, "'('")?;
        if open.text != "(" {
            return Err(parse_err(line, open.column, format!("expected '(', found '{}'", open.text)));
        }
        i += 1;
        let e = expect(i, "'E:'")?;
        if e.text != "E:" {
            return Err(parse_err(line, e.column, format!("expected 'E:', found '{}'", e.text)));
        }
        i += 1;
        let mut bad = StateSet::new();
        while expect(i, "'|'")?.text != "|" {
            bad.insert(resolve(&toks[i])?);
            i += 1;
        }
        i += 1;
        let f = expect(i, "'F:'")?;
        if f.text != "F:" {
            return Err(parse_err(line, f.column, format!("expected 'F:', found '{}'", f.text)));
        }
        i += 1;
        let mut good = StateSet::new();
        while expect(i, "')'")?.text != ")" {
            good.insert(resolve(&toks[i])?);
            i += 1;
        }
        i += 1;
        pairs.push(Pair::new(bad, good));
    }
    Ok(pairs)
}

pub fn parse_automaton(text: &str) -> Result<Automaton> {
    let mut headers: HashMap<&'static str, Header> = HashMap::new();
    let mut trans: Vec<Header> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens = tokenize(raw);
        let Some(first) = tokens.first() else { continue };
        let key: &'static str = match first.text.as_str() {
            "automaton" => "automaton",
            "alphabet" => "alphabet",
            "states" => "states",
            "initial" => "initial",
            "acc" => "acc",
            "trans" => {
                trans.push(Header { line, tokens });
                continue;
            }
            other => return Err(parse_err(line, first.column, format!("unknown directive '{other}'"))),
        };
        if headers.contains_key(key) {
            return Err(parse_err(line, first.column, format!("duplicate '{key}' line")));
        }
        headers.insert(key, Header { line, tokens });
    }
    let last_line = text.lines().count().max(1);
    let header = |key: &str| {
        headers
            .get(key)
            .ok_or_else(|| parse_err(last_line, 1, format!("missing '{key}' line")))
    };

    let name_h = header("automaton")?;
    if name_h.tokens.len() != 2 {
        return Err(parse_err(name_h.line, name_h.tokens[0].column, "expected 'automaton NAME'"));
    }
    let name = name_h.tokens[1].text.clone();
    let alphabet: Vec<String> = header("alphabet")?.tokens[1..].iter().map(|t| t.text.clone()).collect();
    let states_h = header("states")?;
    let states: Vec<String> = states_h.tokens[1..].iter().map(|t| t.text.clone()).collect();
    let state_ix: HashMap<&str, usize> = states.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let letter_ix: HashMap<&str, usize> = alphabet.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let state_at = |line: usize| {
        let state_ix = &state_ix;
        move |t: &Token| {
            state_ix
                .get(t.text.as_str())
                .copied()
                .ok_or_else(|| parse_err(line, t.column, format!("unknown state '{}'", t.text)))
        }
    };

    let init_h = header("initial")?;
    let resolve = state_at(init_h.line);
    let initial = init_h.tokens[1..].iter().map(&resolve).collect::<Result<StateSet>>()?;

    let mut transitions = Vec::new();
    let mut seen = HashSet::new();
    for h in &trans {
        if h.tokens.len() != 4 {
            return Err(parse_err(h.line, h.tokens[0].column, "expected 'trans SRC LETTER DST'"));
        }
        let resolve = state_at(h.line);
        let src = resolve(&h.tokens[1])?;
        let lt = &h.tokens[2];
        let letter = *letter_ix
            .get(lt.text.as_str())
            .ok_or_else(|| parse_err(h.line, lt.column, format!("unknown letter '{}'", lt.text)))?;
        let dst = resolve(&h.tokens[3])?;
        let t = Transition::new(src, letter, dst);
        if !seen.insert(t) {
            return Err(parse_err(h.line, h.tokens[0].column, "duplicate transition"));
        }
        transitions.push(t);
    }

    let acc_h = header("acc")?;
    let resolve = state_at(acc_h.line);
    let kind = acc_h
        .tokens
        .get(1)
        .ok_or_else(|| parse_err(acc_h.line, acc_h.tokens[0].column, "missing acceptance kind"))?;
    let rest = &acc_h.tokens[2..];
    let set = || rest.iter().map(&resolve).collect::<Result<StateSet>>();
    let acceptance = match kind.text.as_str() {
        "buchi" => Acceptance::Buchi(set()?),
        "cobuchi" => Acceptance::CoBuchi(set()?),
        "weak" => Acceptance::Weak(set()?),
        "rabin" => Acceptance::Rabin(parse_pairs(acc_h.line, rest, &resolve)?),
        "streett" => Acceptance::Streett(parse_pairs(acc_h.line, rest, &resolve)?),
        "parity" => {
            let mut prio = vec![None; states.len()];
            for t in rest {
                let (s, p) = t
                    .text
                    .rsplit_once(':')
                    .ok_or_else(|| parse_err(acc_h.line, t.column, format!("expected STATE:PRIORITY, found '{}'", t.text)))?;
                let q = resolve(&Token {
                    text: s.to_string(),
                    column: t.column,
                })?;
                let p: u32 = p
                    .parse()
                    .map_err(|_| parse_err(acc_h.line, t.column, format!("invalid priority '{p}'")))?;
                if prio[q].replace(p).is_some() {
                    return Err(parse_err(acc_h.line, t.column, format!("priority of '{s}' given twice")));
                }
            }
            if let Some(q) = prio.iter().position(Option::is_none) {
                return Err(parse_err(
                    acc_h.line,
                    kind.column,
                    format!("parity map has no priority for '{}'", states[q]),
                ));
            }
            Acceptance::Parity(prio.into_iter().flatten().collect())
        }
        other => return Err(parse_err(acc_h.line, kind.column, format!("unknown acceptance kind '{other}'"))),
    };

    Automaton::new(name, alphabet, states, initial, transitions, acceptance).map_err(|e| {
        let (line, column) = match &e {
            Error::InvalidAutomaton(m) if m.contains("weak") => (acc_h.line, kind.column),
            Error::InvalidAutomaton(m) if m.contains("state") => (states_h.line, 1),
            Error::InvalidAutomaton(m) if m.contains("initial") => (init_h.line, 1),
            _ => (name_h.line, 1),
        };
        parse_err(line, column, e.to_string())
    })
}

pub fn print_strategy(g: &StrategyTransducer, a: &Automaton) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "strategy {}", g.name());
    let _ = writeln!(out, "automaton {}", g.automaton_name());
    for m in 0..g.num_memories() {
        let _ = writeln!(out, "{}: {}", g.memory_name(m), a.state_name(g.tau()[m]));
    }
    let _ = writeln!(out, "initial {}", g.memory_name(g.initial()));
    for m in 0..g.num_memories() {
        for l in 0..a.num_letters() {
            if let Some(m2) = g.step(m, l) {
                let _ = writeln!(out, "{} {} {}", g.memory_name(m), a.letter_name(l), g.memory_name(m2));
            }
        }
    }
    out
}

/// Parses a strategy and resolves it against `a`, which must be the
/// automaton named in the document.
pub fn parse_strategy(text: &str, a: &Automaton) -> Result<StrategyTransducer> {
    let mut name = None;
    let mut owner = None;
    let mut initial: Option<(usize, Token)> = None;
    let mut memories: Vec<(String, usize)> = Vec::new();
    let mut steps: Vec<(usize, Token, Token, Token)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens = tokenize(raw);
        if tokens.is_empty() {
            continue;
        }
        let first = &tokens[0];
        if tokens.len() == 2 && first.text.ends_with(':') {
            let m = first.text.trim_end_matches(':').to_string();
            let q = a
                .state_index(&tokens[1].text)
                .ok_or_else(|| parse_err(line, tokens[1].column, format!("unknown state '{}'", tokens[1].text)))?;
            if memories.iter().any(|(x, _)| *x == m) {
                return Err(parse_err(line, first.column, format!("duplicate memory '{m}'")));
            }
            memories.push((m, q));
        } else if tokens.len() == 2 && first.text == "strategy" {
            name = Some(tokens[1].text.clone());
        } else if tokens.len() == 2 && first.text == "automaton" {
            if tokens[1].text != a.name() {
                return Err(parse_err(
                    line,
                    tokens[1].column,
                    format!("strategy is for '{}', not '{}'", tokens[1].text, a.name()),
                ));
            }
            owner = Some(tokens[1].text.clone());
        } else if tokens.len() == 2 && first.text == "initial" {
            initial = Some((line, tokens[1].clone()));
        } else if tokens.len() == 3 {
            steps.push((line, tokens[0].clone(), tokens[1].clone(), tokens[2].clone()));
        } else {
            return Err(parse_err(line, first.column, "unrecognized line"));
        }
    }
    let last_line = text.lines().count().max(1);
    let name = name.ok_or_else(|| parse_err(last_line, 1, "missing 'strategy' line"))?;
    let owner = owner.ok_or_else(|| parse_err(last_line, 1, "missing 'automaton' line"))?;
    let names: Vec<String> = memories.iter().map(|(m, _)| m.clone()).collect();
    let mem = |line: usize, t: &Token| {
        names
            .iter()
            .position(|m| *m == t.text)
            .ok_or_else(|| parse_err(line, t.column, format!("unknown memory '{}'", t.text)))
    };
    let (init_line, init_tok) = initial.ok_or_else(|| parse_err(last_line, 1, "missing 'initial' line"))?;
    let m0 = mem(init_line, &init_tok)?;
    let mut rho = vec![vec![None; a.num_letters()]; names.len()];
    for (line, from, letter, to) in &steps {
        let m = mem(*line, from)?;
        let l = a
            .letter_index(&letter.text)
            .ok_or_else(|| parse_err(*line, letter.column, format!("unknown letter '{}'", letter.text)))?;
        let m2 = mem(*line, to)?;
        if rho[m][l].replace(m2).is_some() {
            return Err(parse_err(*line, from.column, "step given twice"));
        }
    }
    let g = StrategyTransducer::new(name, owner, names, m0, memories.iter().map(|(_, q)| *q).collect(), rho)?;
    g.validate(a)?;
    Ok(g)
}

/// Parses `accept U:V` / `reject U:V` lines.
pub fn parse_witnesses(text: &str, alphabet: &[String]) -> Result<Vec<(Lasso, bool)>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (kw, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let expected = match kw {
            "accept" => true,
            "reject" => false,
            other => return Err(parse_err(line, 1, format!("expected 'accept' or 'reject', found '{other}'"))),
        };
        let lasso = Lasso::parse(rest.trim(), alphabet).map_err(|e| match e {
            Error::Parse { message, .. } => parse_err(line, kw.len() + 2, message),
            other => other,
        })?;
        out.push((lasso, expected));
    }
    Ok(out)
}

pub fn print_witnesses(witnesses: &[(Lasso, bool)], alphabet: &[String]) -> String {
    witnesses
        .iter()
        .map(|(w, e)| format!("{} {}\n", if *e { "accept" } else { "reject" }, w.display(alphabet)))
        .collect()
}

fn hoa_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// HOA export. Letters are encoded in binary over `⌈log2 |Σ|⌉` atomic
/// propositions; acceptance stays state-based.
pub fn to_hoa(a: &Automaton) -> String {
    let k = a.num_letters();
    let bits = (usize::BITS - (k.max(1) - 1).leading_zeros()) as usize;
    let n = a.num_states();
    let mut out = String::new();
    let _ = writeln!(out, "HOA: v1");
    let _ = writeln!(out, "name: {}", hoa_quote(a.name()));
    let _ = writeln!(out, "States: {n}");
    for q in a.initial().iter() {
        let _ = writeln!(out, "Start: {q}");
    }
    let aps: Vec<String> = (0..bits).map(|i| hoa_quote(&format!("l{i}"))).collect();
    let _ = writeln!(out, "AP: {}{}", bits, aps.iter().map(|s| format!(" {s}")).collect::<String>());
    let letters: Vec<String> = a.alphabet().iter().map(|l| hoa_quote(l)).collect();
    let _ = writeln!(out, "letters: {}", letters.join(" "));

    // state -> acceptance sets
    let mut marks: Vec<Vec<usize>> = vec![Vec::new(); n];
    let (count, formula, name) = match a.acceptance() {
        Acceptance::Buchi(s) | Acceptance::Weak(s) => {
            s.iter().for_each(|q| marks[q].push(0));
            (1, "Inf(0)".to_string(), "Buchi".to_string())
        }
        Acceptance::CoBuchi(s) => {
            s.iter().for_each(|q| marks[q].push(0));
            (1, "Fin(0)".to_string(), "co-Buchi".to_string())
        }
        Acceptance::Parity(prio) => {
            let max = prio.iter().copied().max().unwrap_or(0) as usize;
            for (q, &p) in prio.iter().enumerate() {
                marks[q].push(p as usize);
            }
            let mut f = String::new();
            for i in (0..=max).rev() {
                let atom = if i % 2 == 0 { format!("Inf({i})") } else { format!("Fin({i})") };
                f = if f.is_empty() {
                    atom
                } else if i % 2 == 0 {
                    format!("{atom} | ({f})")
                } else {
                    format!("{atom} & ({f})")
                };
            }
            (max + 1, f, format!("parity min even {}", max + 1))
        }
        Acceptance::Rabin(ps) | Acceptance::Streett(ps) => {
            let rabin = matches!(a.acceptance(), Acceptance::Rabin(_));
            for (i, p) in ps.iter().enumerate() {
                p.bad.iter().for_each(|q| marks[q].push(2 * i));
                p.good.iter().for_each(|q| marks[q].push(2 * i + 1));
            }
            let clauses: Vec<String> = (0..ps.len())
                .map(|i| {
                    if rabin {
                        format!("(Fin({}) & Inf({}))", 2 * i, 2 * i + 1)
                    } else {
                        format!("(Fin({}) | Inf({}))", 2 * i, 2 * i + 1)
                    }
                })
                .collect();
            let f = if clauses.is_empty() {
                (if rabin { "f" } else { "t" }).to_string()
            } else {
                clauses.join(if rabin { " | " } else { " & " })
            };
            let kind = if rabin { "Rabin" } else { "Streett" };
            (2 * ps.len(), f, format!("{kind} {}", ps.len()))
        }
    };
    let _ = writeln!(out, "acc-name: {name}");
    let _ = writeln!(out, "Acceptance: {count} {formula}");
    let _ = writeln!(out, "properties: state-acc");
    let _ = writeln!(out, "--BODY--");
    for (q, m) in marks.iter().enumerate() {
        let mut m = m.clone();
        m.sort_unstable();
        m.dedup();
        let acc = if m.is_empty() {
            String::new()
        } else {
            format!(" {{{}}}", m.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        };
        let _ = writeln!(out, "State: {q} {}{acc}", hoa_quote(a.state_name(q)));
        for t in a.transitions().iter().filter(|t| t.source == q) {
            let label = if bits == 0 {
                "t".to_string()
            } else {
                (0..bits)
                    .map(|b| if t.letter >> b & 1 == 1 { b.to_string() } else { format!("!{b}") })
                    .collect::<Vec<_>>()
                    .join("&")
            };
            let _ = writeln!(out, "[{label}] {}", t.target);
        }
    }
    let _ = writeln!(out, "--END--");
    out
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

pub fn to_dot(a: &Automaton) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", dot_quote(a.name()));
    let _ = writeln!(out, "  rankdir=LR;");
    for q in 0..a.num_states() {
        let (shape, extra) = match a.acceptance() {
            Acceptance::Buchi(s) | Acceptance::Weak(s) if s.contains(q) => ("doublecircle", String::new()),
            Acceptance::CoBuchi(s) if s.contains(q) => ("circle", ", style=dashed".to_string()),
            Acceptance::Parity(prio) => ("circle", format!(", xlabel=\"{}\"", prio[q])),
            _ => ("circle", String::new()),
        };
        let _ = writeln!(out, "  {} [shape={shape}{extra}];", dot_quote(a.state_name(q)));
    }
    for (i, q) in a.initial().iter().enumerate() {
        let _ = writeln!(out, "  __init{i} [shape=point];");
        let _ = writeln!(out, "  __init{i} -> {};", dot_quote(a.state_name(q)));
    }
    for t in a.transitions() {
        let _ = writeln!(
            out,
            "  {} -> {} [label={}];",
            dot_quote(a.state_name(t.source)),
            dot_quote(a.state_name(t.target)),
            dot_quote(a.letter_name(t.letter))
        );
    }
    let _ = writeln!(out, "}}");
    out
}

pub fn strategy_to_dot(g: &StrategyTransducer, a: &Automaton) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", dot_quote(g.name()));
    let _ = writeln!(out, "  rankdir=LR;");
    for m in 0..g.num_memories() {
        let label = format!("{} ({})", g.memory_name(m), a.state_name(g.tau()[m]));
        let _ = writeln!(out, "  {} [shape=box, label={}];", dot_quote(g.memory_name(m)), dot_quote(&label));
    }
    let _ = writeln!(out, "  __init [shape=point];");
    let _ = writeln!(out, "  __init -> {};", dot_quote(g.memory_name(g.initial())));
    for m in 0..g.num_memories() {
        for l in 0..a.num_letters() {
            if let Some(m2) = g.step(m, l) {
                let _ = writeln!(
                    out,
                    "  {} -> {} [label={}];",
                    dot_quote(g.memory_name(m)),
                    dot_quote(g.memory_name(m2)),
                    dot_quote(a.letter_name(l))
                );
            }
        }
    }
    let _ = writeln!(out, "}}");
    out
}
