//! End-to-end checks of the binary: exit codes, output shapes, stdin
//! plumbing, determinism, and checkpoint resume.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tourney"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn verify_small_tables_passes_and_unknown_suite_is_an_error() {
    let ok = run(&["verify", "small-tables"]);
    assert_eq!(ok.status.code(), Some(0));
    let text = stdout(&ok);
    assert!(text.contains("suite small-tables: 22 assertions, 0 failed"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");

    let bad = run(&["verify", "nonsense"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("unknown suite"));
}

#[test]
fn every_run_prints_version_and_flags_to_stderr() {
    let out = run(&["tables", "four"]);
    let err = stderr(&out);
    assert!(err.starts_with("tourney 0.1.0 ; flags: tables four"), "{err}");

    let walk = run(&["vn", "--method", "walk", "--gen", "transitive:3", "--seed", "9", "--trials", "500"]);
    let err = stderr(&walk);
    assert!(err.contains("seed: 9"), "stochastic runs must echo the seed: {err}");
}

#[test]
fn four_tournament_table_csv_is_exact() {
    let out = run(&["tables", "four", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "label,raw2,raw3,source\nTK4,12,21,reference\nTO4,12,27,reference\nTS4,10,12,reference\nTT4,14,36,reference\n"
    );
}

#[test]
fn gen_pipes_into_entropy_via_stdin() {
    let gen = run(&["gen", "transitive", "--n", "5"]);
    assert_eq!(gen.status.code(), Some(0));
    let lines = stdout(&gen);
    assert_eq!(lines.trim(), "n=5 bits=000");

    let mut child = bin()
        .args(["entropy", "--alpha", "2", "--exact", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(lines.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    // raw2(TT_5) = 30, so f_2 = 30/100 and H_2 = log2(10/3).
    assert!(text.contains("h*=-3/10"), "{text}");
    let h: f64 = text
        .split_whitespace()
        .find_map(|f| f.strip_prefix("H="))
        .unwrap()
        .parse()
        .unwrap();
    assert!((h - (10f64 / 3.0).log2()).abs() < 1e-12, "{text}");
}

#[test]
fn undefined_entropy_is_reported_not_faked() {
    let out = run(&["entropy", "--alpha", "3", "--gen", "consecutive:3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("H=UNDEFINED(NONPOSITIVE_SUM)"));
}

#[test]
fn runs_are_byte_identical() {
    for args in [
        vec!["entropy", "--alpha", "4", "--gen", "random:6:42", "--exact"],
        vec!["vn", "--method", "walk", "--gen", "qr:7", "--seed", "3", "--trials", "4000", "--format", "json"],
        vec!["spectrum", "--gen", "qr:7", "--format", "json"],
        vec!["hasse", "--n", "5", "--alpha", "3", "--format", "dot"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "stdout differs for {args:?}");
    }
}

#[test]
fn hasse_dot_output_is_a_chain_of_classes() {
    let out = run(&["hasse", "--n", "5", "--alpha", "4", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph hasse {"));
    // 11 classes under <_4, hence 10 covering arrows between class nodes.
    assert_eq!(dot.matches("->").count(), 10, "{dot}");
    for label in ["TT5", "R5", "UR1, UR2"] {
        assert!(dot.contains(&format!("[label=\"{label}\"]")), "{dot}");
    }
}

#[test]
fn regular_enumeration_is_gated_and_checkpoints_resume() {
    // n = 11 without --long must refuse.
    let gated = run(&["enum", "--regular", "--n", "11", "--count-only"]);
    assert_eq!(gated.status.code(), Some(2));
    assert!(stderr(&gated).contains("--long"), "{}", stderr(&gated));

    let dir = std::env::temp_dir().join(format!("tourney-ckpt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let dir_arg = dir.to_str().unwrap();

    let first = run(&["enum", "--regular", "--n", "9", "--checkpoint", dir_arg]);
    assert_eq!(first.status.code(), Some(0));
    let saved: Vec<String> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    assert!(
        saved.iter().any(|f| f.starts_with("regular-9-level-")),
        "checkpoint files written: {saved:?}"
    );

    // Resuming from the stored levels reproduces the same 15 classes.
    let second = run(&["enum", "--regular", "--n", "9", "--checkpoint", dir_arg]);
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(stderr(&second).contains("resuming"), "{}", stderr(&second));
    assert_eq!(stdout(&first).lines().count(), 15);

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn counts_and_walks_suites_pass() {
    let counts = run(&["verify", "counts"]);
    assert_eq!(counts.status.code(), Some(0), "{}", stdout(&counts));

    let walks = run(&["verify", "walks", "--trials", "20000", "--seed", "5"]);
    assert_eq!(walks.status.code(), Some(0), "{}", stdout(&walks));
    assert!(stdout(&walks).contains("monte-carlo-c3-within-3-sigma"));
}
