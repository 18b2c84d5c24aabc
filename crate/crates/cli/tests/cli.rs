use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn ktorsion(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ktorsion"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn trivialize_identity() {
    let o = ktorsion(&["trivialize", "--ring", "Z/5", "--t", "3", "--k", "2", "--poly", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("conclusion: 1 = 1"));
}

#[test]
fn oracle_torsion() {
    for workers in ["1", "4"] {
        let o = ktorsion(&[
            "oracle",
            "torsion",
            "--ring",
            "Z/5",
            "--t",
            "3",
            "--k",
            "2",
            "--workers",
            workers,
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(
            stdout(&o).trim(),
            "125 series scanned, 1 k-torsion element (the identity)"
        );
    }
}

#[test]
fn emitted_logs_verify_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("log.json");
    let p = path.to_str().unwrap();
    let o = ktorsion(&[
        "theorem1",
        "--ring",
        "Z/9",
        "--k",
        "2",
        "--n",
        "[[0,1,0],[0,0,1],[0,0,0]]",
        "--emit-log",
        p,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = ktorsion(&["verify", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("accepted"));

    let mut log: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let steps = log["steps"].as_array_mut().unwrap();
    let i = steps.iter().position(|s| s["kind"] == "EXACT").unwrap();
    let rhs = steps[i]["rhs"].as_str().unwrap().to_string();
    steps[i]["rhs"] = Value::String(format!("({rhs}) + X^2"));
    let bad = dir.path().join("tampered.json");
    fs::write(&bad, serde_json::to_string(&log).unwrap()).unwrap();
    let o = ktorsion(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains(&format!("step {i}: identity fails")),
        "{}",
        stdout(&o)
    );

    let o = ktorsion(&["--json", "verify", bad.to_str().unwrap()]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["step"], i);
    assert_eq!(v["accepted"], false);
}

#[test]
fn json_logs_follow_the_schema() {
    let o = ktorsion(&[
        "--json",
        "trivialize",
        "--ring",
        "Z/9",
        "--t",
        "4",
        "--k",
        "2",
        "--poly",
        "1",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["context"]["ring"], "Z/9");
    assert_eq!(v["steps"][0]["kind"], "HYPOTHESIS");
    let log = ktorsion::DerivationLog::from_json(&stdout(&o)).unwrap();
    ktorsion::verify_derivation_log(&log).unwrap();
}

#[test]
fn certificates_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let c = cert.to_str().unwrap();
    let o = ktorsion(&[
        "higman",
        "--ring",
        "Z/6",
        "--matrix",
        "[[1 + 2X^3, X], [5, 1 - X^2]]",
        "--emit-cert",
        c,
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(ktorsion(&["verify", c]).status.code(), Some(0));

    let o = ktorsion(&[
        "whitehead",
        "--ring",
        "Z/7",
        "--matrix",
        "[[2, 1], [1, 1]]",
        "--inverse",
        "[[1, -1], [-1, 2]]",
        "--emit-cert",
        c,
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(ktorsion(&["verify", c]).status.code(), Some(0));
    let body = fs::read_to_string(&cert)
        .unwrap()
        .replacen("\"target\": \"[[2", "\"target\": \"[[3", 1);
    fs::write(&cert, body).unwrap();
    let o = ktorsion(&["verify", c]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("does not replay"));
}

#[test]
fn domain_errors_name_the_error() {
    let o = ktorsion(&[
        "trivialize",
        "--ring",
        "Z/8",
        "--t",
        "3",
        "--k",
        "2",
        "--poly",
        "1 + 4X",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("NotAUnit"));
    let o = ktorsion(&["higman", "--ring", "Z", "--matrix", "[[1 + X]]"]);
    assert_eq!(o.status.code(), Some(0));
    let o = ktorsion(&[
        "higman",
        "--ring",
        "Z",
        "--matrix",
        "[[1 + X, 0], [0, 1]]",
        "--inverse",
        "[[1, 0], [0, 1]]",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("NotInverse"));
}

#[test]
fn usage_errors_exit_2() {
    let o = ktorsion(&["trivialize", "--ring", "Z/5", "--t", "three", "--k", "2", "--poly", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--t"));
    let o = ktorsion(&["lemma3", "--ring", "R", "--t", "3", "--r", "1", "--poly", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--ring"));
    assert_eq!(ktorsion(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn text_outputs() {
    let o = ktorsion(&["witt", "coords", "--ring", "Z", "--t", "2", "1 + X"]);
    assert!(stdout(&o).contains("coords: (1, -1)"));
    let o = ktorsion(&[
        "witt",
        "mul",
        "--ring",
        "Z",
        "--t",
        "6",
        "--coords",
        "(0, 2, 0, 0, 0, 0)",
        "(0, 0, 3, 0, 0, 0)",
    ]);
    assert!(stdout(&o).contains("series: 1 + 72*X^6"), "{}", stdout(&o));
    let o = ktorsion(&["--json", "det", "--ring", "Z", "--matrix", "[[2, 0], [0, 1]]"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["det"].as_str(), v["is_one"].as_bool()), (Some("2"), Some(false)));
    let o = ktorsion(&["--json", "fixture", "mennicke", "--ring", "Q"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["det"], "1");
    assert_eq!(v["even_total_degree"], true);
    let o = ktorsion(&["theta", "--ring", "Z/7[Y]", "--elem", "3 + Y^2"]);
    assert!(stdout(&o).contains("θ = 3 + Y^2*X^2"));
}
