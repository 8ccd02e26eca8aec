use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/corpus.txt")
}

fn feitlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_feitlab"))
        .args(args)
        .output()
        .unwrap()
}

fn temp_file(tag: &str, contents: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("feitlab-cli-{}-{tag}", std::process::id()));
    fs::write(&p, contents).unwrap();
    p
}

#[test]
fn table_c2() {
    let c = corpus();
    let out = feitlab(&["table", c.to_str().unwrap(), "--group", "C2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.ends_with("order\t1\t2\nsize\t1\t1\nX.0\t1\t1\nX.1\t1\t-1\n"),
        "{text}"
    );
}

#[test]
fn profile_gl23() {
    let c = corpus();
    let out = feitlab(&["profile", c.to_str().unwrap(), "--group", "GL(2,3)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text.lines()
            .filter(|l| l.split('\t').nth(2) == Some("8"))
            .count(),
        2
    );
    let a5 = feitlab(&["profile", c.to_str().unwrap(), "--group", "A5"]);
    assert!(String::from_utf8(a5.stdout).unwrap().contains("\tn/a"));
}

#[test]
fn verify_json_to_stdout() {
    let c = corpus();
    let out = feitlab(&[
        "verify",
        c.to_str().unwrap(),
        "--check",
        "theoremA",
        "--p",
        "3",
        "--json",
        "-",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let results = v["results"].as_array().unwrap();
    assert!(!results.is_empty());
    assert!(results
        .iter()
        .all(|r| r["p"] == 3 && r["check"] == "theoremA"));
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["seed"], 0);
    assert_eq!(v["corpus_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn max_order_skips() {
    let c = corpus();
    let out = feitlab(&[
        "verify",
        c.to_str().unwrap(),
        "--check",
        "amitchillag",
        "--max-order",
        "30",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("skipped GL(2,3)"));
    assert!(!String::from_utf8(out.stdout).unwrap().contains("GL(2,3)\t"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let c = corpus();
    let c = c.to_str().unwrap();
    assert_eq!(feitlab(&[]).status.code(), Some(2));
    assert_eq!(
        feitlab(&["verify", c, "--check", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(feitlab(&["verify", c, "--p", "4"]).status.code(), Some(2));
    assert_eq!(
        feitlab(&["table", c, "--group", "missing"]).status.code(),
        Some(2)
    );
    assert_eq!(
        feitlab(&["table", "/nonexistent/corpus", "--group", "C2"])
            .status
            .code(),
        Some(2)
    );

    let bad = temp_file("bad", "group A\ndegree 2\ngen (1 3)\nend\n");
    let out = feitlab(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 3"));
    let dup = temp_file(
        "dup",
        "group A\ndegree 2\ngen (1 2)\nend\ngroup A\ndegree 2\ngen ()\nend\n",
    );
    let out = feitlab(&["verify", dup.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("duplicate"));
    let _ = fs::remove_file(bad);
    let _ = fs::remove_file(dup);
}
