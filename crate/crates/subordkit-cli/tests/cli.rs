//! End-to-end tests for the command-line interface: exit codes, canonical
//! formatting, verdict parity between text and JSON modes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_subordkit"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_three_atom_fails_s8_with_status_1() {
    let out = run(&["check", fixture("three_atom.sub").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("S7=pass"));
    assert!(text.contains("S8=FAIL at ({0})"), "{text}");
}

#[test]
fn check_devries_passes_with_status_0() {
    let out = run(&["check", fixture("devries.sub").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("de_vries=true"));
}

#[test]
fn round_ideals_lists_four_ideals_in_canonical_order() {
    let out = run(&[
        "round-ideals",
        fixture("three_atom.sub").to_str().unwrap(),
        "--algebra",
        "S",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("round ideals of S: 4"));
    let gens: Vec<&str> = text
        .lines()
        .skip(1)
        .filter_map(|l| l.trim().strip_prefix("I"))
        .map(|l| l.split_whitespace().nth(2).unwrap())
        .collect();
    assert_eq!(gens, vec!["↓{}", "↓{0,1}", "↓{0,1,2}", "↓{2}"]);
}

#[test]
fn fmt_is_idempotent_and_canonical() {
    let out1 = run(&["fmt", fixture("three_atom.sub").to_str().unwrap()]);
    assert_eq!(out1.status.code(), Some(0));
    let text1 = stdout(&out1);
    // formatting a canonical file reproduces it byte for byte
    let tmp = std::env::temp_dir().join("subordkit_fmt_test.sub");
    std::fs::write(&tmp, &text1).unwrap();
    let out2 = run(&["fmt", tmp.to_str().unwrap()]);
    assert_eq!(stdout(&out2), text1);
    // statement order is canonical: algebra before space before sub
    let kinds: Vec<&str> = text1
        .lines()
        .map(|l| l.split_whitespace().next().unwrap())
        .collect();
    assert_eq!(kinds, vec!["algebra", "space", "equiv", "sub"]);
}

#[test]
fn parse_errors_exit_2_with_location() {
    let tmp = std::env::temp_dir().join("subordkit_parse_err.sub");
    std::fs::write(&tmp, "algebra B atoms=2\nsub T :\n").unwrap();
    let out = run(&["check", tmp.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn missing_file_exits_2() {
    let out = run(&["check", "no_such_file.sub"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_error_exits_2() {
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_and_text_verdicts_agree() {
    let file = fixture("three_atom.sub");
    let text_out = run(&["check", file.to_str().unwrap()]);
    let json_out = run(&["--json", "check", file.to_str().unwrap()]);
    assert_eq!(text_out.status.code(), json_out.status.code());
    let v: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    assert_eq!(v["passed"], serde_json::Value::Bool(false));
}

#[test]
fn verify_single_law() {
    let file = fixture("three_atom.sub");
    let out = run(&["verify", file.to_str().unwrap(), "--law", "RI.frame"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS RI.frame"));

    let out = run(&["verify", file.to_str().unwrap(), "--law", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_list_names_the_pinned_law_ids() {
    let out = run(&["verify", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for id in ["RI.pseudocomplement", "NI.fixpoint", "S7.lemma.phi-box"] {
        assert!(text.contains(id), "missing law id {id}");
    }
}

#[test]
fn classify_reports_frame_validity() {
    let out = run(&[
        "check",
        fixture("m3_frame.sub").to_str().unwrap(),
        "--object",
        "M3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("distributivity fails"));
}

#[test]
fn booleanize_chain() {
    let out = run(&[
        "booleanize",
        fixture("m3_frame.sub").to_str().unwrap(),
        "--frame",
        "chain3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("2 of 3 elements"));
}

#[test]
fn suite_small_run_exits_0_and_is_deterministic() {
    let args = [
        "suite",
        "--seed",
        "5",
        "--max-atoms-exhaustive",
        "2",
        "--max-atoms-sampled",
        "2",
        "--samples-per-size",
        "3",
        "--laws",
        "RI.,dsl.",
    ];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    let b = run(&args);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("PASS RI.frame"));
}

#[test]
fn axiom_cap_env_override() {
    // a six-atom algebra is over the default scan cap of five
    let tmp = std::env::temp_dir().join("subordkit_cap_test.sub");
    std::fs::write(
        &tmp,
        "algebra B atoms=6\nequiv E on B classes={0},{1},{2},{3},{4},{5}\nsub S = from_equiv(E)\n",
    )
    .unwrap();
    let out = run(&["check", tmp.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["check", tmp.to_str().unwrap()])
        .env("SUBORDKIT_MAX_ATOMS", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
