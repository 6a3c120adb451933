//! Black-box tests of the agflag binary: exit codes, JSON output, caching.

use std::process::{Command, Output};

fn agflag() -> Command {
    Command::new(env!("CARGO_BIN_EXE_agflag"))
}

fn run(args: &[&str]) -> Output {
    agflag().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn repro_single_case_exits_zero() {
    let o = run(&["repro", "rs8"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("[PASS] rs8"));
}

#[test]
fn repro_unknown_case_exits_one() {
    let o = run(&["repro", "bogus"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_error_exits_two() {
    let o = run(&["flag"]); // missing --model
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_three() {
    let o = run(&["--budget", "10", "table", "--model", "hermitian_q3", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn flag_json_report() {
    let o = run(&[
        "--json",
        "flag",
        "--model",
        "hermitian_q2",
        "--columns",
        "(w,w),(w2,w2),(0,1)",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["m"], 3);
    assert_eq!(v["is_dual"], true);
    assert_eq!(v["wstar"], serde_json::json!([0, 2, 3]));
}

#[test]
fn flag_text_report_mentions_duality() {
    let o = run(&["flag", "--model", "rs_q8"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("isometry-dual: true"));
    assert!(s.contains("dualizing vector"));
}

#[test]
fn klein_ladder_lists_eight_dual_flags() {
    let o = run(&["klein-ladder"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(s.matches("dual: true").count(), 8);
    assert!(s.contains("D_23"));
}

#[test]
fn sg_profile_matches_the_worked_values() {
    let o = run(&["--json", "sg", "--gaps", "1,2,4", "profile", "7"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lambda"], 10);
    assert_eq!(v["D"], serde_json::json!([0, 3, 5, 7, 10]));
    assert_eq!(v["G"], 0);
}

#[test]
fn sg_empty_gaps_is_the_naturals() {
    let o = run(&["--json", "sg", "--gaps", "", "genus"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["genus"], 0);
    assert_eq!(v["conductor"], 0);
}

#[test]
fn sg_leaders_from_generators() {
    let o = run(&["--json", "sg", "--gens", "3,5,7", "leaders", "20"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let leaders: Vec<u64> = v["leaders"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(leaders, vec![7, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20]);
}

#[test]
fn sg_rejects_bad_generators() {
    let o = run(&["sg", "--gens", "4,6", "genus"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("gcd"));
}

#[test]
fn rm_count_and_weights() {
    let o = run(&["--json", "rm", "count", "--m", "3", "--size", "4"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 22);

    let o = run(&["rm", "weights", "--m", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0^1 4^4 8^54 12^4 16^1");
}

#[test]
fn rm_exhaustive_budget_guard() {
    let o = run(&["rm", "count", "--m", "5", "--size", "16", "--policy", "exhaustive"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn table_caches_and_reproduces() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["table", "--model", "hyperelliptic_f7", "--max-n", "4"];
    let o1 = agflag()
        .args(args)
        .env("AGFLAG_CACHE", dir.path())
        .output()
        .unwrap();
    assert!(o1.status.success());
    let cached = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(cached, 4, "one cache file per size");
    // second run hits the cache and prints the identical table
    let o2 = agflag()
        .args(args)
        .env("AGFLAG_CACHE", dir.path())
        .output()
        .unwrap();
    assert_eq!(stdout(&o1), stdout(&o2));
    let s = stdout(&o1);
    assert!(s.contains("n=1"));
    assert!(s.contains('*'));
}

#[test]
fn table_thread_count_does_not_change_results() {
    let dir1 = tempfile::tempdir().unwrap();
    let dir2 = tempfile::tempdir().unwrap();
    let base = ["table", "--model", "klein_f8", "--max-n", "5", "--json"];
    let o1 = agflag()
        .args(["--threads", "1"])
        .args(base)
        .env("AGFLAG_CACHE", dir1.path())
        .output()
        .unwrap();
    let o2 = agflag()
        .args(["--threads", "4"])
        .args(base)
        .env("AGFLAG_CACHE", dir2.path())
        .output()
        .unwrap();
    assert!(o1.status.success() && o2.status.success());
    assert_eq!(stdout(&o1), stdout(&o2));
}

#[test]
fn puncture_reports_inheritance_fields() {
    let o = run(&[
        "--json",
        "puncture",
        "--model",
        "klein_f8",
        "--keep",
        "0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["parent_n"], 23);
    assert_eq!(v["child_s"], 20);
    assert_eq!(v["parent_dual"], true);
    assert_eq!(v["child_dual"], true);
    assert_eq!(v["removed_in_w"], true);
}

#[test]
fn custom_model_config_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("toy.json");
    std::fs::write(
        &path,
        r#"{
            "name": "toy",
            "field": {"p": 2, "k": 1, "modulus": [0, 1]},
            "genus": 3,
            "points": ["P1", "P2", "P3"],
            "generators": [
                {"name": "u", "pole_order": 4, "values": [0, 0, 0]},
                {"name": "v", "pole_order": 5, "values": [0, 0, 0]},
                {"name": "w", "pole_order": 6, "values": [0, 0, 1]},
                {"name": "x", "pole_order": 7, "values": [0, 1, 0]}
            ]
        }"#,
    )
    .unwrap();
    let o = agflag()
        .args([
            "--json",
            "--model-config",
            path.to_str().unwrap(),
            "flag",
            "--model",
            "ignored",
            "--columns",
            "P1,P3",
        ])
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["m"], 6);
    assert_eq!(v["is_dual"], true);
}
