use std::path::PathBuf;
use std::process::{Command, Output};

fn twochar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twochar")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("twochar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn fusion_text() {
    let o = twochar(&["fusion", "--builtin", "G1", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("S ⊠ S = 𝟙_c + S"));
}

#[test]
fn inner_matrix_json() {
    let o = twochar(&["inner", "--builtin", "G1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["matrix"], serde_json::json!([[2, 1, 0], [1, 2, 0], [0, 0, 1]]));
    assert_eq!(v["names"], serde_json::json!(["𝟙", "𝟙_c", "S"]));
}

#[test]
fn check_passes_on_catalogue() {
    for name in ["G1", "G2", "BA(Z2)", "grp(Z3)"] {
        let o = twochar(&["check", "--builtin", name]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
        assert!(stdout(&o).contains("all invariants hold"));
    }
}

#[test]
fn other_commands_run() {
    for args in [
        vec!["describe", "--builtin", "G2"],
        vec!["irreps", "--builtin", "grp(S3)"],
        vec!["chartable", "--builtin", "G1", "--format", "json"],
        vec!["jointtable", "--builtin", "G2"],
        vec!["center", "T", "--builtin", "G2"],
        vec!["fusion", "--builtin", "grp(S3)", "--parallel"],
        vec!["inner", "--builtin", "grp(S3)", "--parallel"],
    ] {
        let o = twochar(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(!o.stdout.is_empty());
    }
    let o = twochar(&["center", "T", "--builtin", "G2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["grades"][0]["dim"], 2);
    assert_eq!(v["grades"][1]["dim"], 0);
    assert_eq!(v["lagrangian"]["separability"], true);
}

#[test]
fn output_file() {
    let path = temp("out.txt", "");
    let o = twochar(&["fusion", "--builtin", "G2", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().contains("T ⊠ T = 2·𝟙_c"));
}

#[test]
fn json_round_trip_is_byte_identical() {
    for name in ["G1", "G2", "BA(Z3)", "grp(S3)"] {
        let first = stdout(&twochar(&["irreps", "--builtin", name, "--format", "json"]));
        let path = temp(&format!("{}.json", name.replace(['(', ')'], "_")), &first);
        let second = stdout(&twochar(&["irreps", "--input", path.to_str().unwrap(), "--format", "json"]));
        assert_eq!(first, second, "{name}");
        let spec = stdout(&twochar(&["describe", "--input", path.to_str().unwrap(), "--format", "json"]));
        let v: serde_json::Value = serde_json::from_str(&spec).unwrap();
        let bare = temp("bare.json", &serde_json::to_string(&v["two_group"]).unwrap());
        let again = stdout(&twochar(&["describe", "--input", bare.to_str().unwrap(), "--format", "json"]));
        assert_eq!(spec, again);
    }
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(twochar(&["fusion"]).status.code(), Some(2));
    assert_eq!(twochar(&["nonsense", "--builtin", "G1"]).status.code(), Some(2));
    assert_eq!(twochar(&["fusion", "--builtin", "G9"]).status.code(), Some(2));
    assert_eq!(twochar(&["fusion", "--builtin", "G1", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(twochar(&["center", "Q", "--builtin", "G1"]).status.code(), Some(2));
    let bad = temp("bad.json", "{\"pi1\": {\"kind\": \"cyclic\"}");
    let o = twochar(&["describe", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line"));
    let missing = temp("missing.json", "{\"pi1\": {\"kind\": \"cyclic\", \"n\": 2}}");
    let o = twochar(&["describe", "--input", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("pi2"));
}

#[test]
fn validation_failures_exit_1() {
    // a non-cocycle associator
    let bad_alpha = temp(
        "alpha.json",
        r#"{"pi1": {"kind": "cyclic", "n": 2}, "pi2": {"factors": [2]}, "alpha": {"entries": [[1, 1, 0, 1]]}}"#,
    );
    let o = twochar(&["describe", "--input", bad_alpha.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    // a rep whose cochain breaks the cocycle law
    let bundle = format!(
        r#"{{"two_group": {}, "reps": [{{"name": "bad", "rep": {{"n": 1, "c": [[1, 1, 0, {{"order": 1, "coefficients": ["2"]}}]]}}}}]}}"#,
        r#"{"pi1": {"kind": "cyclic", "n": 3}, "pi2": {"factors": []}}"#
    );
    let path = temp("badrep.json", &bundle);
    let o = twochar(&["check", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("FAIL"));
}
