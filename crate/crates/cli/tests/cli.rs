use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .display()
        .to_string()
}

fn stabdis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stabdis"))
        .args(args)
        .env_remove("STABDIS_COSET_CAP")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--output", "json"]);
    let out = stabdis(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn validates_fixture() {
    let v = json(&["validate", &fixture("steane.txt")]);
    assert_eq!(v["n"], 7);
    assert_eq!(v["k"], 1);
}

#[test]
fn non_abelian_file_is_an_input_error() {
    let out = stabdis(&["validate", &fixture("non_abelian.txt")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("rows 0 and 1 anticommute"));
}

#[test]
fn parse_errors_name_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "3 1\nZZI\nIZQ\n").unwrap();
    let out = stabdis(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let msg = stderr(&out);
    assert!(msg.contains("bad.txt") && msg.contains("line 3"), "{msg}");
}

#[test]
fn case_study_distances_and_disjointness() {
    let d = json(&["distance", &fixture("code_14_3_3.txt")]);
    assert_eq!((d["d_min"].as_u64(), d["d_max"].as_u64()), (Some(3), Some(6)));
    let r = json(&["code-disjointness", &fixture("code_14_3_3.txt")]);
    assert_eq!(r["code_delta"], "2/1");
    assert_eq!(r["argmin_classes"].as_array().unwrap().len(), 4);
}

#[test]
fn output_is_deterministic() {
    let args = ["code-disjointness", &fixture("perfect_5_1_3.txt")];
    assert_eq!(stabdis(&args).stdout, stabdis(&args).stdout);
    let args = ["omega", &fixture("perfect_5_1_3.txt"), "--m", "2", "--output", "json"];
    assert_eq!(stabdis(&args).stdout, stabdis(&args).stdout);
}

#[test]
fn collection_report_round_trips() {
    let steane = fixture("steane.txt");
    let args = ["disjointness", &steane, "--class", "ZZZZZZZ", "--c", "3", "--output", "json"];
    let out = stabdis(&args);
    assert!(out.status.success());
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["classes"][0]["delta_c"], "7/3");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let p = path.to_str().unwrap();
    let ok = stabdis(&["verify-collection", &steane, "--class", "ZZZZZZZ", "--c", "3", "--collection", p, "--at-least", "7"]);
    assert_eq!(ok.status.code(), Some(0));
    let tight = stabdis(&["verify-collection", &steane, "--class", "ZZZZZZZ", "--c", "2", "--collection", p]);
    assert_eq!(tight.status.code(), Some(1));
}

#[test]
fn plain_collection_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("col.txt");
    std::fs::write(&path, "# bit-flip code\nZII\nIZI\nIIZ\n").unwrap();
    let out = stabdis(&[
        "verify-collection",
        &fixture("repetition_3.txt"),
        "--class",
        "ZII",
        "--c",
        "1",
        "--collection",
        path.to_str().unwrap(),
        "--output",
        "json",
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["size"], 3);
}

#[test]
fn coset_cap_is_a_resource_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_stabdis"))
        .args(["distance", &fixture("steane.txt")])
        .env("STABDIS_COSET_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn reduce_emits_a_valid_code_and_labels() {
    let dir = tempfile::tempdir().unwrap();
    let labels = dir.path().join("labels.json");
    let out = stabdis(&[
        "reduce",
        &fixture("path_3.graph"),
        "--c",
        "1",
        "--labels",
        labels.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let code = dir.path().join("code.txt");
    std::fs::write(&code, &out.stdout).unwrap();
    let v = json(&["validate", code.to_str().unwrap()]);
    let map: Value = serde_json::from_str(&std::fs::read_to_string(&labels).unwrap()).unwrap();
    assert_eq!(map.as_object().unwrap().len() as u64, v["n"].as_u64().unwrap());
}

#[test]
fn lemma3_on_star() {
    let v = json(&["verify-lemma3", &fixture("star_5.graph"), "--c", "1"]);
    assert_eq!(v["holds"], true);
    assert_eq!(v["hypothesis_met"], true);
    assert_eq!(v["c_disjointness"], "5/1");
}

#[test]
fn concat_and_hgp() {
    let c = fixture("code_4_1_2.txt");
    let v = json(&["concat", &c, &c]);
    assert_eq!((v["n"].as_u64(), v["k"].as_u64()), (Some(16), Some(1)));
    let out = stabdis(&["concat", &c, &fixture("css_4_2_2.txt")]);
    assert_eq!(out.status.code(), Some(2));

    let h = json(&["hgp", &fixture("h_repetition_3.mat"), &fixture("h_column_2.mat"), "--check"]);
    assert_eq!(h["status"], "Holds");
    let pair = fixture("h_pair.mat");
    let h = json(&["hgp", &pair, &pair, "--check"]);
    assert_eq!(h["status"], "Vacuous");
}

#[test]
fn unknown_flags_are_rejected() {
    let out = stabdis(&["validate", &fixture("steane.txt"), "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
