use std::io::Write;
use std::process::{Command, Output, Stdio};

fn distext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distext"))
        .args(args)
        .env_remove("DISTEXT_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn radius_of_k4() {
    let o = distext(&["radius", "--graph6", "C~"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3.0\n");
}

#[test]
fn radius_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_distext"))
        .args(["radius", "--graph6", "-", "--precision", "6"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    // P_3: 1 + sqrt(3).
    child.stdin.take().unwrap().write_all(b"Bg\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "2.73205\n");
}

#[test]
fn theorem1_json_report() {
    let o = distext(&["verify-theorem1", "--n", "3", "--k", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["graphs_scanned"], 112);
    assert!(v["minimizer"]["gap"].as_f64().unwrap() > 1e-7);
}

#[test]
fn job_count_does_not_change_output() {
    let args = ["verify-theorem1", "--n", "3", "--k", "2", "--format", "json"];
    let one = distext(&[&args[..], &["--jobs", "1"]].concat());
    let four = distext(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one.stdout, four.stdout);
    let again = distext(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(one.stdout, again.stdout);
}

#[test]
fn construct_round_trips() {
    let o = distext(&["construct", "extremal-general", "--n", "4", "--k", "1"]);
    assert_eq!(stdout(&o), "G~~~}?\n");
    let o = distext(&["construct", "extremal-general", "--n", "4", "--k", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 8);
    assert_eq!(v["edges"], 23);
    assert_eq!(v["family"]["kind"], "extremal-general");
}

#[test]
fn construct_warns_outside_theorem_range() {
    let o = distext(&["construct", "extremal-factor-critical", "--n", "5", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn malformed_graph6_is_a_usage_error() {
    let o = distext(&["radius", "--graph6", "C~x"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("byte 2"));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    assert_eq!(distext(&["radius", "--bogus"]).status.code(), Some(2));
    assert_eq!(distext(&["verify-theorem1", "--n", "1", "--k", "1"]).status.code(), Some(2));
}

#[test]
fn failing_verification_exits_1_with_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.g6");
    // P_4 and K_{1,3}: neither is K_2 ∨ 2K_1.
    std::fs::write(&path, "Ch\nCs\n").unwrap();
    let o = distext(&[
        "verify-theorem1",
        "--n",
        "2",
        "--k",
        "1",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert!(!v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn csv_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("rows.csv");
    let report = dir.path().join("report.json");
    let o = distext(&[
        "verify-theorem3",
        "--n",
        "5",
        "--k",
        "1",
        "--csv",
        csv.to_str().unwrap(),
        "--output",
        report.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let rows = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(rows.lines().next(), Some("graph6,radius,holds"));
    assert_eq!(rows.lines().count(), 22);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["suite"], "theorem3");
}

#[test]
fn checks_report_witnesses() {
    let o = distext(&["check-extendable", "--graph6", "Ch", "--k", "1", "--method", "all", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let methods: Vec<_> = v.as_array().unwrap().iter().map(|x| x["method"].as_str().unwrap()).collect();
    assert_eq!(methods, ["direct", "tutte", "hall", "deletion"]);
    assert!(v.as_array().unwrap().iter().all(|x| x["verdict"]["holds"] == false));
    let o = distext(&["check-extendable", "--graph6", "Bw", "--k", "0", "--method", "hall"]);
    assert_eq!(o.status.code(), Some(2), "a triangle has no bipartition");
}

#[test]
fn lemmas_and_scans() {
    let o = distext(&["verify-lemmas", "--trials", "30", "--max-order", "7", "--seed", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["suite"], "lemma-pf");
    assert_eq!(v[1]["suite"], "lemma-bh-sweep");
    let o = distext(&["scan-s", "--n", "6", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("result: PASS").count(), 2);
}

#[test]
fn enumerate_counts() {
    let o = distext(&["enumerate", "--order", "5"]);
    assert_eq!(stdout(&o).lines().count(), 21);
    let o = distext(&["enumerate", "--order", "11"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn help_names_the_result() {
    for (cmd, anchor) in [
        ("verify-theorem1", "Theorem 1"),
        ("verify-theorem2", "Theorem 2"),
        ("verify-theorem3", "Theorem 3"),
        ("verify-lemmas", "Lemma 3"),
        ("check-extendable", "Lemma 1"),
        ("scan-s", "Theorem 1"),
    ] {
        let o = distext(&[cmd, "--help"]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains(anchor), "{cmd} help lacks {anchor}");
    }
}
