use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hopfyb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfyb"))
        .args(args)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn documented_examples() {
    let o = hopfyb(&["catalog", "a_c2c2"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], "hopf.v1");

    let o = hopfyb(&[
        "involutive",
        "--hopf",
        "a_c2c2",
        "--pair",
        "family1",
        "--json",
    ]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v["conditions"],
        serde_json::json!({"i": true, "ii": true, "iii": true, "iv": true})
    );

    assert_eq!(
        code(&hopfyb(&[
            "check-braid",
            "--hopf",
            "s3",
            "--pair",
            "conjugation"
        ])),
        0
    );
    assert_eq!(
        code(&hopfyb(&[
            "involutive",
            "--hopf",
            "s3",
            "--pair",
            "conjugation"
        ])),
        1
    );
}

#[test]
fn every_subcommand_runs_on_family1() {
    for cmd in [
        "verify-pair",
        "derive-right",
        "build-r",
        "check-braid",
        "invert-r",
        "transmute",
        "adjoints",
        "cqt-induce",
    ] {
        let o = hopfyb(&[cmd, "--pair", "family1", "--form", "r_alpha"]);
        assert_eq!(code(&o), 0, "{cmd}: {}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(
        code(&hopfyb(&["check-braid", "--pair", "family2", "--fast"])),
        0
    );
    assert_eq!(
        code(&hopfyb(&[
            "cqt-verify",
            "--form",
            "r_alpha",
            "--alpha",
            "3"
        ])),
        0
    );
    assert_eq!(code(&hopfyb(&["verify-hopf", "--hopf", "h4"])), 0);
}

#[test]
fn products_and_phi() {
    for cmd in ["dcp", "bosonize", "check-phi"] {
        let o = hopfyb(&[cmd, "--pair", "family1", "--alpha", "2"]);
        assert_eq!(code(&o), 0, "{cmd}: {}", stdout(&o));
    }
}

#[test]
fn artifacts_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let hopf = dir.path().join("a.json");
    let r = dir.path().join("r.json");
    let pair = dir.path().join("pair.json");
    let induced = dir.path().join("induced.json");

    assert_eq!(
        code(&hopfyb(&["catalog", "a_c2c2", "--out", path_str(&hopf)])),
        0
    );
    assert_eq!(
        code(&hopfyb(&["verify-hopf", "--hopf", path_str(&hopf)])),
        0
    );

    assert_eq!(
        code(&hopfyb(&[
            "derive-right",
            "--pair",
            "family2",
            "--out",
            path_str(&pair)
        ])),
        0
    );
    assert_eq!(
        code(&hopfyb(&["verify-pair", "--pair", path_str(&pair)])),
        0
    );
    assert_eq!(
        code(&hopfyb(&[
            "involutive",
            "--pair",
            path_str(&pair),
            "--alpha",
            "-2"
        ])),
        0
    );

    assert_eq!(
        code(&hopfyb(&[
            "build-r",
            "--pair",
            "family2",
            "--out",
            path_str(&r)
        ])),
        0
    );
    let o = hopfyb(&["extract-actions", path_str(&r)]);
    assert_eq!(code(&o), 0);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let original: Value = serde_json::from_str(&std::fs::read_to_string(&pair).unwrap()).unwrap();
    assert_eq!(doc["left"], original["left"]);
    assert_eq!(doc["right"], original["right"]);

    assert_eq!(
        code(&hopfyb(&[
            "cqt-induce",
            "--form",
            "r_alpha",
            "--out",
            path_str(&induced)
        ])),
        0
    );
    assert_eq!(
        code(&hopfyb(&["check-braid", "--pair", path_str(&induced)])),
        0
    );
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"schema\": \"hopf.v1\", \"name\": 3}").unwrap();
    assert_eq!(code(&hopfyb(&["verify-hopf", "--hopf", path_str(&bad)])), 2);

    let wrong = dir.path().join("wrong.json");
    let o = hopfyb(&["catalog", "s3"]);
    std::fs::write(&wrong, stdout(&o).replace("hopf.v1", "pair.v1")).unwrap();
    assert_eq!(
        code(&hopfyb(&["verify-hopf", "--hopf", path_str(&wrong)])),
        2
    );

    assert_eq!(
        code(&hopfyb(&[
            "verify-pair",
            "--pair",
            "family1",
            "--alpha",
            "a+"
        ])),
        2
    );
    assert_eq!(
        code(&hopfyb(&[
            "verify-pair",
            "--hopf",
            "h4",
            "--pair",
            "conjugation"
        ])),
        2
    );
    assert_eq!(code(&hopfyb(&["cqt-verify"])), 2);
    let o = hopfyb(&["verify-hopf", "--hopf", "nowhere"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("nowhere"));
}

#[test]
fn failed_checks_exit_1_with_report() {
    let o = hopfyb(&["verify-pair", "--hopf", "s3", "--pair", "trivial", "--json"]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], false);
    let failed: Vec<&Value> = v["reports"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|c| c["witness"].is_object()));

    assert_eq!(
        code(&hopfyb(&[
            "transmute",
            "--hopf",
            "s3",
            "--pair",
            "conjugation"
        ])),
        0
    );
    assert_eq!(code(&hopfyb(&["corrupt-subcommand"])), 2);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "transmute",
        "--hopf",
        "s3",
        "--pair",
        "conjugation",
        "--json",
    ];
    let a = hopfyb(&args);
    let b = hopfyb(&args);
    assert_eq!(a.stdout, b.stdout);
    let single = Command::new(env!("CARGO_BIN_EXE_hopfyb"))
        .args(args)
        .env("HOPFYB_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, single.stdout);
    serde_json::from_slice::<Value>(&a.stdout).unwrap();

    let t = hopfyb(&["verify-hopf", "--hopf", "s3", "--json", "--timings"]);
    let v: Value = serde_json::from_slice(&t.stdout).unwrap();
    assert!(v["reports"][0]["elapsed_ms"].is_u64());
}
