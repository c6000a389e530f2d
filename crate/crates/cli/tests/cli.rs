use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn lodaykit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lodaykit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

const CYCLIC: &str = r#"{"name": "cyc", "field": "Q", "dim": 2,
  "brackets": [{"i": 1, "j": 1, "coeffs": [["2", 2]]}]}"#;

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.json", CYCLIC);
    let o = lodaykit(&["validate", &good]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("ok cyc"));

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"name": "bad", "field": "Q", "dim": 1, "brackets": [{"i": 1, "j": 1, "coeffs": [[1, "1"]]}]}"#,
    );
    let o = lodaykit(&["validate", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("violating"));

    let broken = write(
        dir.path(),
        "broken.json",
        "{\n \"name\": \"x\",\n \"dim\": ]\n}",
    );
    let o = lodaykit(&["validate", &broken]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let o = lodaykit(&["validate", "/nonexistent/file.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_passes_on_builtin_catalog() {
    let o = lodaykit(&["check", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.ends_with("verdict: pass\n"));
    assert!(out.contains("PASS    h3-q six-term extension:centre"));
}

#[test]
fn verdict_failure_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let liar = write(
        dir.path(),
        "liar.json",
        r#"{"name": "liar", "field": "Q", "dim": 1, "expected": {"HL2": {"dim": 3, "source": "made up"}}}"#,
    );
    let o = lodaykit(&["check", &liar, "--suite", "invariants"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    let o = lodaykit(&["report", &liar, "--format", "md"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("| liar | Q | 1 |"));
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["check", "--entry", "no-such-entry"][..],
        &["check", "--suite", "no-such-check"],
        &["check", "--field", "F4"],
        &["report", "--format", "xml"],
    ] {
        let o = lodaykit(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn empty_selection_passes() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "empty.json", "[]");
    let o = lodaykit(&["report", &empty]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 0);
    assert_eq!(v["verdict"], true);
}

#[test]
fn reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, jobs) in [(&a, "1"), (&b, "4")] {
        let o = lodaykit(&["report", "--jobs", jobs, "--out", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    let (ta, tb) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let v: serde_json::Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn single_algebra_verbs() {
    let o = lodaykit(&["invariants", "--entry", "h3-q"]);
    assert!(stdout(&o).contains("HL2=5"), "{}", stdout(&o));
    let o = lodaykit(&["homology", "--entry", "sl2-q", "--max-degree", "2"]);
    assert!(stdout(&o).contains("HL2 = 0  H2 = 0"), "{}", stdout(&o));
    let o = lodaykit(&["tensor-square", "--entry", "abelian-1-q"]);
    assert!(stdout(&o).contains("dim g⋆g = 2"), "{}", stdout(&o));
    let o = lodaykit(&["exterior-square", "--entry", "h3-q"]);
    assert!(stdout(&o).contains("dim ker θ = 5"), "{}", stdout(&o));
    let o = lodaykit(&["gamma", "--rank", "6", "--field", "F2"]);
    assert!(stdout(&o).contains("dim 21"), "{}", stdout(&o));
    let o = lodaykit(&["gamma", "--entry", "h3-q"]);
    assert!(stdout(&o).contains("dim Γ(g^ab) = 3"), "{}", stdout(&o));
}

#[test]
fn field_override_rereads_scalars() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "cyc.json", CYCLIC);
    // [e1, e1] = 2 e2 vanishes over F2
    let o = lodaykit(&["invariants", &f, "--field", "F2", "--max-degree", "1"]);
    assert!(stdout(&o).contains("HL1=2"), "{}", stdout(&o));
    let o = lodaykit(&["invariants", &f, "--max-degree", "1"]);
    assert!(stdout(&o).contains("HL1=1"), "{}", stdout(&o));
}
