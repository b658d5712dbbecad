use cdgforge::scenario::{run, RunOptions, Scenario, Workspace};
use cdgforge::{Error, FieldSpec};

fn corpus_file(name: &str) -> String {
    std::fs::read_to_string(format!("{}/../../corpus/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn build(text: &str) -> cdgforge::Result<Workspace> {
    Workspace::build(&Scenario::from_json(text)?, None)
}

#[test]
fn shipped_scenarios_pass() {
    for name in ["s2.json", "mf_s4.json"] {
        let ws = build(&corpus_file(name)).unwrap();
        let report = run(&ws, &RunOptions::default()).unwrap();
        assert!(!report.records.is_empty());
        assert!(report.passed(), "{name}: {:?}", report.records.iter().filter(|r| !r.passed()).collect::<Vec<_>>());
    }
}

#[test]
fn only_selects_a_group() {
    let ws = build(&corpus_file("s2.json")).unwrap();
    let opts = RunOptions { only: Some("gorenstein".into()), ..RunOptions::default() };
    let report = run(&ws, &opts).unwrap();
    assert!(report.records.iter().all(|r| !r.id.contains("path_object") && !r.id.contains("weakly")));
    assert!(report.notes.iter().any(|n| n == "pd(k) = infinite"));
    assert!(report.notes.iter().any(|n| n == "pd(S2) = 0"));
}

#[test]
fn empty_scenario() {
    let report = run(&build("{}").unwrap(), &RunOptions::default()).unwrap();
    assert!(report.records.is_empty() && report.passed());
}

#[test]
fn parse_errors() {
    for text in ["{", r#"{"commands": [{"op": "nope"}]}"#, r#"{"bogus": 1}"#, r#"{"field": "R"}"#] {
        let e = build(text).unwrap_err();
        assert!(matches!(e, Error::Parse(_)), "{text}: {e}");
        assert_eq!(e.exit_code(), 2);
    }
}

#[test]
fn validation_errors() {
    let cases = [
        r#"{"modules": {"m": {"algebra": "A", "free": 1}}}"#,
        r#"{"modules": {"m": {"sum": ["m"]}}}"#,
        r#"{"algebras": {"S": {"truncated_polynomial": 2}},
            "modules": {"k": {"algebra": "S", "cyclic": [[0, 1]]}},
            "morphisms": {"f": {"source": "k", "target": "k", "matrix": [[1, 0]]}}}"#,
        r#"{"algebras": {"S": {"truncated_polynomial": 2}},
            "modules": {"k": {"algebra": "S", "cyclic": [[0, 1]]}, "F": {"algebra": "S", "free": 1}},
            "morphisms": {"f": {"source": "F", "target": "F", "matrix": [[0, 1], [0, 0]]}}}"#,
        r#"{"algebras": {"S": {"truncated_polynomial": 4}},
            "koszul": {"K": {"base": "S", "w": [0, 0, 1, 0]}},
            "modules": {"F": {"algebra": "S", "free": 1}},
            "duplexes": {"D": {"ring": "K", "m0": "F", "m1": "F",
                "f": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
                "g": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}}}"#,
        r#"{"commands": [{"op": "pd", "module": "k"}]}"#,
        r#"{"field": 4}"#,
    ];
    for text in cases {
        let e = Scenario::from_json(text).and_then(|s| {
            let ws = Workspace::build(&s, None)?;
            run(&ws, &RunOptions::default())
        });
        let e = e.unwrap_err();
        assert_eq!(e.exit_code(), 3, "{text}: {e}");
    }
}

#[test]
fn field_flag_overrides_scenario() {
    let sc = Scenario::from_json(&corpus_file("s2.json")).unwrap();
    let ws = Workspace::build(&sc, Some(FieldSpec::Prime(5))).unwrap();
    assert_eq!(ws.field.p(), 5);
    assert!(run(&ws, &RunOptions::default()).unwrap().passed());
    assert!(matches!(Workspace::build(&sc, Some(FieldSpec::Rationals)), Err(Error::Unsupported(_))));
}

#[test]
fn bar_acyclic_refuses_degenerate_window() {
    let text = corpus_file("mf_s4.json").replace(
        r#"{ "op": "bar_acyclic", "object": "X_K" }"#,
        r#"{ "op": "bar_acyclic", "object": "X_K", "window": [0, 0] }"#,
    );
    let e = run(&build(&text).unwrap(), &RunOptions::default()).unwrap_err();
    assert!(matches!(e, Error::WindowInsufficient(_)));
    assert!(e.to_string().contains("window insufficient"));
}
