use std::path::PathBuf;
use std::process::{Command, Output};

use hopf_link::format::{from_json, to_json};
use hopf_link::generate::CORPUS;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopf-link"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn corpus_files_round_trip() {
    for (id, _) in CORPUS {
        let path = corpus_dir().join(format!("{}.json", id));
        let text = std::fs::read_to_string(&path).unwrap();
        let h = from_json(&text, None).unwrap();
        assert_eq!(to_json(&h), text, "{}", id);
    }
}

#[test]
fn verify_dcp_on_taft() {
    let o = run(&["--json", "verify-dcp", "taft:3:zeta3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report_version"], 1);
    assert_eq!(v["summary"]["component_dims"], serde_json::json!([9]));
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    assert!(checks.iter().any(|c| c["name"] == "dcp/component-left-translate" && c["status"] == "pass"));
}

#[test]
fn components_of_dual_s3() {
    let o = run(&["--json", "components", "dual-group:S3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["component_dims"], serde_json::json!([1, 1, 4]));
}

#[test]
fn quiver_dot_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("hopf-link-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.dot");
    let b = dir.join("b.dot");
    assert_eq!(run(&["quiver", "sweedler", "--dot", a.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(run(&["quiver", "sweedler", "--dot", b.to_str().unwrap()]).status.code(), Some(0));
    let da = std::fs::read_to_string(&a).unwrap();
    assert_eq!(da, std::fs::read_to_string(&b).unwrap());
    assert_eq!(da.matches("label=").count(), 2);
    assert_eq!(da.matches(" -- ").count(), 1);
    assert_eq!(da.matches("subgraph cluster_").count(), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reports_are_byte_identical() {
    let a = run(&["--json", "analyze", "h24"]);
    let b = run(&["--json", "analyze", "h24"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn errors_and_not_applicable() {
    let dir = std::env::temp_dir().join(format!("hopf-link-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\n  \"field\": {\"cyclotomic_order\": 1},\n  \"dim\": oops\n}\n").unwrap();
    let o = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    std::fs::remove_dir_all(&dir).unwrap();

    let o = run(&["coradical", "dual-group:Z3", "--field-order", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("3"));

    let o = run(&["verify-dcp", "smash:H12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not applicable") || stdout(&o).contains("not_applicable"));

    assert_eq!(run(&["check", "no-such-generator"]).status.code(), Some(2));
}
