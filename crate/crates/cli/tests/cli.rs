use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spectral-cycles"))
}

fn tanner() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures/tanner_155_64.alist")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn count_tanner_auto_json() {
    let path = tanner();
    let out = run(&[
        "count",
        "--input",
        path.to_str().unwrap(),
        "--lengths",
        "auto",
        "--json",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc = json_of(&out);
    assert_eq!(
        doc["counts"].to_string(),
        r#"{"8":465,"10":3720,"12":22630}"#
    );
    assert_eq!(doc["girth"], 8);
    assert_eq!(doc["class"], "bi-regular(3,5)");
    assert_eq!(doc["methods"]["12"], "bi-regular+psi(g+4)");
    assert_eq!(doc["capability"]["10"], "P");
    assert_eq!(doc["terms"]["12"]["psi"].to_string(), "7053120");
    assert_eq!(doc["traces"]["8"].to_string(), "475230");
    for key in [
        "girth",
        "class",
        "counts",
        "traces",
        "methods",
        "capability",
        "degrees",
        "timing",
    ] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn counts_are_never_floats() {
    let path = tanner();
    let out = run(&[
        "count",
        "-i",
        path.to_str().unwrap(),
        "--json",
        "--arith",
        "big",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let doc: Value = serde_json::from_str(&text).unwrap();
    for v in doc["counts"].as_object().unwrap().values() {
        assert!(v.is_u64() || v.is_i64() || !v.to_string().contains(['.', 'e', 'E']));
    }
    assert_eq!(doc["counts"]["12"].to_string(), "22630");
}

#[test]
fn irregular_refusal_cites_ip() {
    let dir = tempfile::tempdir().unwrap();
    // K_{2,2} with a pendant check node
    let el = write(
        dir.path(),
        "star.el",
        "bipartite 2 3\n0 0\n0 1\n1 0\n1 1\n1 2\n",
    );
    let out = run(&["count", "--input", &el, "--lengths", "6"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("IP"));

    let out = run(&["count", "--input", &el, "--lengths", "4", "--json"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["counts"]["4"], 1);
}

#[test]
fn verify_generated_graph() {
    let dir = tempfile::tempdir().unwrap();
    let el = dir.path().join("random.el");
    let el = el.to_str().unwrap();
    let out = run(&[
        "gen",
        "--kind",
        "biregular:24,3,4",
        "--seed",
        "11",
        "--out",
        el,
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = run(&["verify", "--input", el, "--max-len", "8"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );

    let out = run(&["verify", "--input", el, "--max-len", "8", "--json"]);
    let doc = json_of(&out);
    assert_eq!(doc["agree"], true);
}

#[test]
fn gen_is_deterministic() {
    let a = run(&["gen", "--kind", "irregular:8,6,0.4", "--seed", "5"]);
    let b = run(&["gen", "--kind", "irregular:8,6,0.4", "--seed", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).starts_with("bipartite 8 6"));
}

#[test]
fn gen_alist_round_trips_through_count() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k33.alist");
    let p = path.to_str().unwrap();
    assert!(run(&[
        "gen",
        "--kind",
        "complete:3,3",
        "--format",
        "alist",
        "--out",
        p
    ])
    .status
    .success());
    let out = run(&["count", "-i", p, "-l", "4,6", "--json"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["counts"].to_string(), r#"{"4":9,"6":6}"#);
}

#[test]
fn format_override_wins() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "square.alist",
        "bipartite 2 2\n0 0\n0 1\n1 0\n1 1\n",
    );
    assert_eq!(run(&["girth", "-i", &p]).status.code(), Some(2));
    let out = run(&["girth", "-i", &p, "--format", "edgelist", "--json"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["girth"], 4);
    let q = write(
        dir.path(),
        "square.txt",
        "bipartite 2 2\n0 0\n0 1\n1 0\n1 1\n",
    );
    assert!(run(&["girth", "-i", &q]).status.success());
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.el", "bipartite 2 2\n2 0\n");
    let out = run(&["count", "-i", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));
    assert_eq!(
        run(&["count", "-i", "/nonexistent.el"]).status.code(),
        Some(2)
    );
    let ok = write(dir.path(), "ok.el", "bipartite 2 2\n0 0\n");
    assert_eq!(run(&["count", "-i", &ok, "-l", "5"]).status.code(), Some(2));
    assert_eq!(
        run(&["traces", "-i", &ok, "-k", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn empty_graph_counts_zero() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "empty.el", "bipartite 3 3\n");
    let out = run(&["count", "-i", &p, "-l", "4,6,8", "--json"]);
    assert!(out.status.success());
    let doc = json_of(&out);
    assert_eq!(doc["counts"].to_string(), r#"{"4":0,"6":0,"8":0}"#);
    assert_eq!(doc["girth"], Value::Null);
}

#[test]
fn overflow_and_budget_exit_five() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("k.el");
    let p = p.to_str().unwrap();
    assert!(run(&["gen", "--kind", "complete:6,6", "--out", p])
        .status
        .success());
    assert_eq!(
        run(&["oracle", "-i", p, "-m", "12", "--budget", "10"])
            .status
            .code(),
        Some(5)
    );
    let out = run(&["traces", "-i", p, "-k", "60"]);
    assert_eq!(out.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--arith big"));
    assert!(run(&["traces", "-i", p, "-k", "60", "--arith", "big"])
        .status
        .success());
}

#[test]
fn oracle_and_traces_output() {
    let path = tanner();
    let p = path.to_str().unwrap();
    let out = run(&["traces", "-i", p, "-k", "8", "--json"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["traces"]["6"].to_string(), "53010");

    let dir = tempfile::tempdir().unwrap();
    let sq = write(
        dir.path(),
        "c8.el",
        "bipartite 4 4\n0 0\n1 0\n1 1\n2 1\n2 2\n3 2\n3 3\n0 3\n",
    );
    let out = run(&["oracle", "-i", &sq, "-m", "8", "--json"]);
    assert_eq!(
        json_of(&out)["counts"].to_string(),
        r#"{"4":0,"6":0,"8":1}"#
    );
}

#[test]
fn thread_override_is_honoured() {
    let path = tanner();
    let out = bin()
        .args(["count", "-i", path.to_str().unwrap(), "--json"])
        .env("SPECTRAL_CYCLES_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = bin()
        .args(["count", "-i", path.to_str().unwrap()])
        .env("SPECTRAL_CYCLES_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
