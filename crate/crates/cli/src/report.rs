//! JSON report shapes. Every field is always present; absent values are
//! `null`.

use gfg_core::{AcceptanceKind, Verdict};
use serde::Serialize;

#[derive(Serialize)]
pub struct ErrorReport {
    pub command: &'static str,
    pub error: String,
    pub exit_code: u8,
}

#[derive(Serialize)]
pub struct VerdictReport {
    /// `holds`, `fails` or `unknown`.
    pub verdict: &'static str,
    pub bound: Option<usize>,
    pub counterexample: Option<String>,
}

impl VerdictReport {
    pub fn new(v: &Verdict, alphabet: &[String]) -> Self {
        match v {
            Verdict::Holds => VerdictReport {
                verdict: "holds",
                bound: None,
                counterexample: None,
            },
            Verdict::Fails(w) => VerdictReport {
                verdict: "fails",
                bound: None,
                counterexample: Some(w.display(alphabet)),
            },
            Verdict::Unknown(b) => VerdictReport {
                verdict: "unknown",
                bound: Some(*b),
                counterexample: None,
            },
        }
    }
}

#[derive(Serialize)]
pub struct MemberReport {
    pub command: &'static str,
    pub automaton: String,
    pub lasso: String,
    pub accepted: bool,
}

#[derive(Serialize)]
pub struct EmptyReport {
    pub command: &'static str,
    pub automaton: String,
    pub empty: bool,
    pub witness: Option<String>,
}

#[derive(Serialize)]
pub struct EquivReport {
    pub command: &'static str,
    pub automaton: String,
    pub reference: String,
    /// `L(automaton) ⊆ L(reference)`.
    pub forward: VerdictReport,
    /// `L(reference) ⊆ L(automaton)`.
    pub backward: VerdictReport,
}

#[derive(Serialize)]
pub struct CheckReport {
    pub description: String,
    pub result: VerdictReport,
}

#[derive(Serialize)]
pub struct TransformReport {
    pub command: &'static str,
    pub input: String,
    pub output: String,
    pub acceptance: AcceptanceKind,
    pub condition: String,
    pub steps: Vec<String>,
    pub encoding: Option<String>,
    pub verification: Vec<CheckReport>,
    pub automaton_text: String,
    pub strategy_text: Option<String>,
    pub files: Vec<String>,
}

#[derive(Serialize)]
pub struct StrategySummary {
    pub name: String,
    pub memories: Vec<String>,
    pub text: String,
}

#[derive(Serialize)]
pub struct GfgReport {
    pub command: &'static str,
    pub automaton: String,
    pub reference: String,
    pub winner: String,
    pub adam_nodes: usize,
    pub eve_nodes: usize,
    pub automaton_in_reference: VerdictReport,
    pub reference_in_automaton: VerdictReport,
    pub strategy: Option<StrategySummary>,
    pub residual_mismatch: Option<String>,
    pub strategy_language: Option<VerdictReport>,
    pub files: Vec<String>,
}

#[derive(Serialize)]
pub struct BruteReport {
    pub command: &'static str,
    pub automaton: String,
    pub memory_bound: usize,
    pub strategy: Option<StrategySummary>,
    pub files: Vec<String>,
}

#[derive(Serialize)]
pub struct TypenessReport {
    pub command: &'static str,
    pub automaton: String,
    pub target: AcceptanceKind,
    pub found: Option<String>,
    pub structure: Option<usize>,
    pub candidates: usize,
    pub separated: usize,
}

#[derive(Serialize)]
pub struct CorpusListReport {
    pub command: &'static str,
    pub entries: Vec<&'static str>,
}

#[derive(Serialize)]
pub struct CorpusEntryReport {
    pub command: &'static str,
    pub name: String,
    pub files: Vec<&'static str>,
    pub has_strategy: bool,
    pub has_reference: bool,
    pub witnesses: Option<usize>,
    pub written: Vec<String>,
}

#[derive(Serialize)]
pub struct VerifyItem {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub command: &'static str,
    pub passed: bool,
    pub checks: Vec<VerifyItem>,
}
