use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use torsion_galois::cli::CorpusReport;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_torsion-galois"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn divpoly_primitive() {
    let out = run(&["divpoly", "--curve", "0,0,0,0,1", "--n", "3", "--primitive"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["poly"]["coeffs"], serde_json::json!(["0", "12", "0", "0", "3"]));
    assert_eq!(v["degree"], 4);

    let out = run(&["divpoly", "--curve", "1,0,0,0,t", "--n", "4"]);
    let v = json_of(&out);
    assert_eq!(v["times_psi2"], true);
    assert_eq!(v["poly"]["ring"], "Qt");
}

#[test]
fn charpoly_both_routes_and_checks() {
    let out = run(&[
        "charpoly",
        "--curve",
        "1,0,0,0,-4/13",
        "--n",
        "3",
        "--method",
        "both",
        "--check-valuation",
        "3",
        "--numeric-check",
        "1e-6",
    ]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["chi"]["coeffs"][6], "-851/351");
    assert_eq!(v["report"]["routes_agree"], true);
    assert_eq!(v["report"]["valuation_min"]["3"]["min"], -3);
    assert!(v["report"]["numeric_residual"].as_f64().unwrap() < 1e-6);
    assert!(v["report"].get("elapsed_ms").is_none());

    let out = run(&["charpoly", "--curve", "1,0,0,0,1", "--n", "3", "--timings"]);
    assert!(json_of(&out)["report"]["elapsed_ms"].is_number());
}

#[test]
fn pretty_n2() {
    let out = run(&["--format", "pretty", "charpoly", "--curve", "0,0,0,2,-3", "--n", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("chi: x^3 + 2*x - 3\n"), "{text}");
}

#[test]
fn classify_and_probe() {
    let v = json_of(&run(&["classify-mod3", "--curve", "1,0,0,0,-4/13", "--probe-bound", "10000"]));
    assert_eq!(v["label"], "D12");
    assert_eq!(v["qualifier"], "exact");
    assert_eq!(v["evidence"]["factorization"], "1,3");
    let v = json_of(&run(&["classify-mod3", "--curve", "0,0,1,0,0", "--probe-bound", "1000"]));
    assert_eq!(v["label"], "TwoC2");

    let v = json_of(&run(&["minus-id", "--curve", "0,-1,1,-10,-20", "--ell", "3", "--bound", "1000"]));
    assert_eq!(v["result"]["outcome"], "found");
    assert_eq!(v["result"]["prime"], 7);
}

#[test]
fn scaling_check() {
    let out = run(&["scaling-check", "--curve", "0,0,0,1,1", "--prime", "5", "--m", "1"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["passes"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["charpoly", "--curve", "0,0,0,0,1", "--n", "3"],
        vec!["charpoly", "--curve", "1,2", "--n", "3"],
        vec!["minus-id", "--curve", "0,0,1,0,0", "--ell", "2"],
        vec!["divpoly", "--curve", "0,0,0,0,0", "--n", "3"],
        vec!["charpoly", "--n", "3"],
        vec!["frobnicate"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn empty_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.json");
    std::fs::write(&path, r#"{"entries": []}"#).unwrap();
    let out = run(&["corpus", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["entries"], serde_json::json!([]));
    assert_eq!(v["summary"]["total"], 0);
}

#[test]
fn failing_corpus_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"entries": [
            {"name": "wrong label", "curve": "1,0,0,0,1", "check": "classify", "label": "D8"},
            {"name": "ok", "curve": "0,-1,1,-10,-20", "check": "minus_id", "ell": 3, "bound": 100, "found": 7}
        ]}"#,
    )
    .unwrap();
    let out = run(&["corpus", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["entries"][0]["status"], "fail");
    assert_eq!(v["entries"][1]["status"], "pass");
    assert_eq!(v["summary"]["failed"], 1);
}

#[test]
fn undocumented_golden_mismatch_fails() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("g.json"),
        r#"{"ring": "Q", "coeffs": ["-6912/28561", "576/2197", "-16/169", "3076/4563", "760/507", "12/13", "-851/351", "1/3", "1"]}"#,
    )
    .unwrap();
    let path = dir.path().join("c.json");
    std::fs::write(
        &path,
        r#"{"entries": [{"name": "sign flip", "curve": "1,0,0,0,-4/13", "check": "charpoly", "u": "1,0,0", "n": 3, "golden": "g.json"}]}"#,
    )
    .unwrap();
    let out = run(&["corpus", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["entries"][0]["diffs"][0]["degree"], 7);

    // listing the degree as an erratum is not enough: the specialization
    // check must also reject the golden value, which it does here
    std::fs::write(
        &path,
        r#"{"entries": [{"name": "sign flip", "curve": "1,0,0,0,-4/13", "check": "charpoly", "u": "1,0,0", "n": 3, "golden": "g.json", "errata": [7]}]}"#,
    )
    .unwrap();
    let v = json_of(&run(&["corpus", path.to_str().unwrap()]));
    assert_eq!(v["entries"][0]["status"], "erratum");
}

#[test]
fn corpus_output_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let src = std::fs::read_to_string(corpus_dir().join("corpus.json")).unwrap();
    let mut corpus: Value = serde_json::from_str(&src).unwrap();
    // the family tables and a slice of the sweep keep this quick
    let keep: Vec<Value> = corpus["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| {
            let name = e["name"].as_str().unwrap();
            name.starts_with("family") || (name.starts_with("c0") && !name.ends_with("n=7"))
        })
        .cloned()
        .collect();
    corpus["entries"] = Value::Array(keep);
    let path = dir.path().join("corpus.json");
    std::fs::write(&path, serde_json::to_string(&corpus).unwrap()).unwrap();
    std::fs::create_dir(dir.path().join("golden")).unwrap();
    for f in std::fs::read_dir(corpus_dir().join("golden")).unwrap() {
        let f = f.unwrap();
        std::fs::copy(f.path(), dir.path().join("golden").join(f.file_name())).unwrap();
    }

    let p = path.to_str().unwrap();
    let one = bin().args(["corpus", p]).env("TORSION_GALOIS_THREADS", "1").output().unwrap();
    let three = bin().args(["corpus", p]).env("TORSION_GALOIS_THREADS", "3").output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, three.stdout);

    let report: CorpusReport = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), json_of(&one));

    let bad = bin().args(["corpus", p]).env("TORSION_GALOIS_THREADS", "zero").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
