//! The `zdt` binary end to end.

use std::path::Path;
use std::process::{Command, Output};

fn zdt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zdt"))
        .args(args)
        .output()
        .expect("spawn zdt")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_fixture(dir: &Path, name: &str) -> String {
    let text = stdout(&zdt(&["fixtures", "--print", name]));
    let path = dir.join(format!("{name}.poset"));
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn fan3_is_not_weakly_meet() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_fixture(dir.path(), "fan3");
    let o = zdt(&[
        "check",
        "--poset",
        &f,
        "--system",
        "finite",
        "--property",
        "weakly-meet",
    ]);
    assert_eq!(code(&o), 1);
    let s = stdout(&o);
    assert!(s.starts_with("weakly-meet finite FAN3 FAILS\n"));
    assert!(s.contains("# D = {a,b}"));
    let o = zdt(&[
        "check",
        "--poset",
        &f,
        "--system",
        "directed",
        "--property",
        "weakly-meet",
    ]);
    assert_eq!(code(&o), 0);
}

#[test]
fn error_paths_exit_two() {
    let o = zdt(&[
        "check",
        "--poset",
        "nosuch.poset",
        "--system",
        "finite",
        "--property",
        "meet",
    ]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("nosuch.poset"));
    assert_eq!(
        code(&zdt(&[
            "check",
            "--fixture",
            "vee",
            "--system",
            "bogus",
            "--property",
            "meet"
        ])),
        2
    );
    assert_eq!(
        code(&zdt(&[
            "search",
            "--claim",
            "no-such-claim",
            "--max-size",
            "2"
        ])),
        2
    );
    assert_eq!(code(&zdt(&["frobnicate"])), 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.poset");
    std::fs::write(&bad, "poset X\nelements a b\norder a<b b<a\nend\n").unwrap();
    let o = zdt(&[
        "check",
        "--poset",
        bad.to_str().unwrap(),
        "--property",
        "meet",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn search_holds_and_reports() {
    let o = zdt(&[
        "search",
        "--claim",
        "lemma-wmc",
        "--max-size",
        "4",
        "--system",
        "finite",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "CLAIM lemma-wmc finite n=1 holds=1 fails=0 inapplicable=0\n\
         CLAIM lemma-wmc finite n=2 holds=2 fails=0 inapplicable=0\n\
         CLAIM lemma-wmc finite n=3 holds=5 fails=0 inapplicable=0\n\
         CLAIM lemma-wmc finite n=4 holds=16 fails=0 inapplicable=0\n"
    );
}

#[test]
fn search_is_independent_of_jobs() {
    let run = |jobs: &str| {
        stdout(&zdt(&[
            "search",
            "--claim",
            "thm-local-wmc",
            "--max-size",
            "4",
            "--system",
            "finite,connected",
            "--jobs",
            jobs,
        ]))
    };
    assert_eq!(run("1"), run("8"));
}

#[test]
fn emitted_counterexamples_replay() {
    let dir = tempfile::tempdir().unwrap();
    let cx = dir.path().join("cx.poset");
    let o = zdt(&[
        "search",
        "--claim",
        "thm-local-wmc",
        "--max-size",
        "4",
        "--system",
        "finite",
        "--labeled",
        "--emit-counterexamples",
        cx.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 1);
    let text = std::fs::read_to_string(&cx).unwrap();
    let posets = zdt::io::parse_many(&text).unwrap();
    assert!(!posets.is_empty());
    let o = zdt(&[
        "check",
        "--poset",
        cx.to_str().unwrap(),
        "--system",
        "finite",
        "--claim",
        "thm-local-wmc",
    ]);
    assert_eq!(code(&o), 1);
    let s = stdout(&o);
    let verdicts: Vec<&str> = s
        .lines()
        .filter(|l| l.starts_with("thm-local-wmc "))
        .collect();
    assert_eq!(verdicts.len(), posets.len());
    assert!(verdicts.iter().all(|l| l.ends_with(" FAILS")));
}

#[test]
fn relation_family_monad_export() {
    let o = zdt(&[
        "relation",
        "--fixture",
        "vee",
        "--system",
        "directed",
        "--relation",
        "beneath",
    ]);
    assert_eq!(stdout(&o), "  a b c\na 1 0 1\nb 0 1 1\nc 0 0 0\n");
    let o = zdt(&[
        "family",
        "--fixture",
        "vee",
        "--system",
        "finite",
        "--family",
        "gamma-subbasis",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o)
        .lines()
        .all(|l| l.starts_with('{') && l.ends_with('}')));

    let o = zdt(&[
        "monad",
        "--fixture",
        "diamond",
        "--system",
        "directed",
        "--verify",
        "monad-laws",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l == "CLAIM thm-monad HOLDS"));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("vee.dot");
    let o = zdt(&[
        "export",
        "--fixture",
        "vee",
        "--overlay",
        "beneath",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
    assert!(std::fs::read_to_string(out)
        .unwrap()
        .starts_with("digraph \"VEE\""));
}

#[test]
fn fixture_suite_passes() {
    let o = zdt(&["fixtures"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.starts_with("CLAIM fixture:"))
            .count(),
        6
    );
}
