use std::path::PathBuf;
use std::process::{Command, Output};

fn cdgforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdgforge")).args(args).output().unwrap()
}

fn corpus(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_all_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    for out in [&a, &b] {
        let o = cdgforge(&["verify", "all", "--seed", "7", "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
    let a = std::fs::read(a).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, std::fs::read(b).unwrap());
    let first = String::from_utf8(a).unwrap().lines().next().unwrap().to_string();
    for key in ["\"id\"", "\"status\":\"pass\"", "\"lhs_dims\"", "\"rhs_dims\"", "\"witness_present\""] {
        assert!(first.contains(key), "{first}");
    }
}

#[test]
fn run_shipped_scenarios() {
    let o = cdgforge(&["run", &corpus("mf_s4.json")]);
    assert_eq!(o.status.code(), Some(0));
    for op in ["check_mixed", "fold", "sbar", "completed_bar", "alpha_epi"] {
        assert!(stdout(&o).contains(&format!("/{op}/")), "{op}");
    }
    let o = cdgforge(&["run", "--only", "gorenstein", &corpus("s2.json")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("pd(k) = infinite") && text.contains("pd(S2) = 0"));
    assert!(text.contains("k: pd = infinite, GP = yes"));
    assert!(!text.contains("path_object"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    };
    let empty = write("empty.json", r#"{"commands": []}"#);
    let o = cdgforge(&["run", &empty]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 assertions, 0 failed"));

    assert_eq!(cdgforge(&["run", &write("bad.json", "{\"commands\": [")]).status.code(), Some(2));
    let invalid = write("invalid.json", r#"{"modules": {"m": {"algebra": "A", "free": 1}}}"#);
    assert_eq!(cdgforge(&["run", &invalid]).status.code(), Some(3));
    let failing = write(
        "fail.json",
        r#"{"algebras": {"S": {"truncated_polynomial": 2}},
            "modules": {"k": {"algebra": "S", "cyclic": [[0, 1]]}},
            "commands": [{"op": "ext1", "source": "k", "target": "k", "expect": 2}]}"#,
    );
    let o = cdgforge(&["run", &failing]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL 0/ext1/k,k"));

    assert_eq!(cdgforge(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(cdgforge(&["run", "/nonexistent/file.json"]).status.code(), Some(3));
}

#[test]
fn bar_with_zero_window_is_refused() {
    let o = cdgforge(&["verify", "bar", "--window", "0", "0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("window insufficient"));
    let o = cdgforge(&["verify", "bar", "--window", "-6", "6"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_flags() {
    let o = cdgforge(&["verify", "curvature", "--random-count", "3", "--field", "5", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("fold/random/2") && !stdout(&o).contains("fold/random/3"));
    let o = cdgforge(&["verify", "all", "--only", "sign"]);
    assert!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).all(|l| l.contains(" sign/")));
}

#[test]
fn describe() {
    let o = cdgforge(&["describe", "X_K"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("X_K: mixed complex"));
    assert!(stdout(&cdgforge(&["describe", "list"])).contains("D1:"));
    assert_eq!(cdgforge(&["describe", "nope"]).status.code(), Some(3));
}
