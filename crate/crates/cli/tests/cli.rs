use std::process::Command;

fn qdirac(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qdirac")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn rank_five_is_a_configuration_error() {
    let (code, _, err) = qdirac(&["--rank", "5"]);
    assert_eq!(code, 2);
    assert!(err.contains("outside the supported range"));
}

#[test]
fn small_bound_names_the_minimum() {
    let (code, _, err) = qdirac(&["--rank", "4", "--degree-bound", "5"]);
    assert_eq!(code, 2);
    assert!(err.contains("minimal sufficient bound is 7"), "{err}");
}

#[test]
fn all_ones_reports_witnesses_and_passes() {
    let (code, out, _) = qdirac(&["--c-profile", "all-ones", "--checks", "dirac", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let checks = v["checks"].as_array().unwrap();
    let main = checks.iter().find(|r| r["check_id"] == "dirac.main_theorem[N=2]").unwrap();
    assert_eq!(main["status"], "pass");
    assert!(main["witness"].as_str().unwrap().contains('*'));
    assert!(checks.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn failing_check_sets_exit_code_and_witness() {
    let (code, out, _) = qdirac(&[
        "--rank", "3", "--c0", "symbolic", "--c1", "symbolic", "--c-profile", "tprofile-printed",
        "--checks", "dirac.main_theorem", "--format", "json",
    ]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rec = &v["checks"][0];
    assert_eq!(rec["status"], "fail");
    assert!(rec["witness"].as_str().unwrap().contains("E3"));
}

#[test]
fn literal_scalings_and_output_file() {
    let dir = std::env::temp_dir().join(format!("qdirac-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let (code, out, _) = qdirac(&[
        "--c0", "q + 1", "--c1", "(v^2 - 1)/3", "--checks", "dirac.main_theorem", "--format", "json",
        "--output", path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["config"]["c0"], "v^2 + 1");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_literal_is_rejected() {
    let (code, _, err) = qdirac(&["--c1", "2/(q-q)"]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot parse literal"));
}
