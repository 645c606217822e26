use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/corpus")
}

fn gfg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gfg"))
        .args(args)
        .current_dir(corpus_dir())
        .output()
        .expect("gfg runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

/// Compares against `tests/golden/{name}.json`; `GOLDEN_UPDATE=1` rewrites it.
fn golden(name: &str, args: &[&str], expected_code: i32) {
    let o = gfg(args);
    assert_eq!(code(&o), expected_code, "{name}: {}", String::from_utf8_lossy(&o.stderr));
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"));
    let actual = stdout(&o);
    serde_json::from_str::<serde_json::Value>(&actual).expect("valid JSON");
    if std::env::var_os("GOLDEN_UPDATE").is_some() {
        std::fs::write(&path, &actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "{name} differs from its golden file");
}

#[test]
fn member_accepts_and_rejects() {
    let o = gfg(&["member", "-a", "a0.aut", "--lasso", ":b"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "accepted"));
    let o = gfg(&["member", "-a", "a0.aut", "--lasso", "b:a"]);
    assert_eq!((code(&o), stdout(&o).trim()), (1, "rejected"));
}

#[test]
fn emptiness() {
    let o = gfg(&["empty", "-a", "a0.aut"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("nonempty: accepts "));
}

#[test]
fn tighten_writes_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = gfg(&["tighten", "-a", "a0.aut", "-g", "a0_g.strat", "--out", out, "--dot", "--hoa"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("merged m1→m1'; removed (q1,a,q2)"), "{text}");
    for f in ["a0_tight.aut", "a0_tight.strat", "a0_tight.dot", "a0_tight.strat.dot", "a0_tight.hoa"] {
        assert!(dir.path().join(f).exists(), "{f} missing");
    }
    let written = std::fs::read_to_string(dir.path().join("a0_tight.aut")).unwrap();
    let bundled = std::fs::read_to_string(corpus_dir().join("a0_tight.aut")).unwrap();
    let strip = |s: &str| s.lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>().join("\n");
    assert_eq!(strip(&written), strip(&bundled));
}

#[test]
fn typeness_search_reports_separation() {
    let o = gfg(&["typeness-search", "-a", "a1.aut", "--witness", "a1.wit", "--target", "buchi"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).trim(), "no Büchi condition on structure: 128/128 candidates separated");
}

#[test]
fn letter_game_verdicts() {
    let o = gfg(&["check-gfg", "-a", "a0.aut", "-d", "dbw_l0.aut"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("Eve wins: a0 is GFG"));
    let o = gfg(&["check-gfg", "-a", "nbw_fin_b.aut", "-d", "dcw_fin_b.aut"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("Adam wins: nbw_fin_b is not GFG"));
}

#[test]
fn exit_codes_for_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.aut");
    std::fs::write(&bad, "bogus\n").unwrap();
    let o = gfg(&["empty", "-a", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error at line 1"));
    let o = gfg(&["brute-gfg", "-a", "a0.aut", "-d", "dbw_l0.aut", "--budget", "1"]);
    assert_eq!(code(&o), 3);
    let o = gfg(&["to-weak", "-a", "a0.aut", "-g", "a0_g.strat"]);
    assert_eq!(code(&o), 2, "{}", String::from_utf8_lossy(&o.stderr));
    let o = gfg(&["member", "-a", "a0.aut"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_corpus_passes() {
    let o = gfg(&["verify-corpus"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).trim_end().ends_with("10/10 checks passed"));
}

#[test]
fn corpus_extracts_entries() {
    let dir = tempfile::tempdir().unwrap();
    let o = gfg(&["corpus", "a1", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(dir.path().join("a1.aut").exists());
    assert!(dir.path().join("a1.wit").exists());
}

#[test]
fn golden_member() {
    golden("member", &["--json", "member", "-a", "a0.aut", "--lasso", ":b"], 0);
}

#[test]
fn golden_equiv() {
    golden("equiv", &["--json", "equiv", "-a", "a0.aut", "-d", "dbw_l0.aut", "--bound", "3"], 0);
}

#[test]
fn golden_tighten() {
    golden("tighten", &["--json", "tighten", "-a", "a0.aut", "-g", "a0_g.strat"], 0);
}

#[test]
fn golden_to_cobuchi() {
    golden("to_cobuchi", &["--json", "to-cobuchi", "-a", "a3_pruned.aut"], 0);
}

#[test]
fn golden_typeness() {
    golden(
        "typeness",
        &["--json", "typeness-search", "-a", "a1.aut", "--witness", "a1.wit", "--target", "buchi"],
        1,
    );
}

#[test]
fn golden_check_gfg() {
    golden("check_gfg", &["--json", "check-gfg", "-a", "a0.aut", "-d", "dbw_l0.aut"], 0);
}

#[test]
fn golden_error() {
    golden("error", &["--json", "detbyp-unambiguous", "-a", "a2.aut"], 1);
}
