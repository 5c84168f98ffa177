use std::path::PathBuf;
use std::process::{Command, Output};

fn repfact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_repfact"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("repfact-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn lists_claims_sorted() {
    let o = repfact(&["claims", "list"]);
    assert!(o.status.success());
    let ids: Vec<String> = stdout(&o)
        .lines()
        .map(|l| l.split_whitespace().next().unwrap().to_string())
        .collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(ids.iter().any(|i| i == "tm-width-bound"));
    assert!(ids.iter().any(|i| i == "rs-23-states"));
}

#[test]
fn report_is_json() {
    let path = scratch("worked.json");
    let o = repfact(&[
        "claims",
        "run",
        "worked-example",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS worked-example"));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["claim_id"], "worked-example");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 3);
    assert!(v["runtime_secs"].is_number());
}

#[test]
fn bound_override_and_failure_exit_code() {
    let o = repfact(&["claims", "run", "fib-prefix-bound", "--bound", "300"]);
    assert!(o.status.success());
    let o = repfact(&[
        "claims",
        "run",
        "tm-28-states",
        "--set",
        "training=64",
        "--set",
        "verify=64",
        "--set",
        "states=5",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL tm-28-states"));
}

#[test]
fn unknown_claim_lists_alternatives() {
    let o = repfact(&["claims", "run", "no-such-claim"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("tm-width-bound"), "{err}");
    let o = repfact(&["claims", "run", "worked-example", "--set", "bogus=1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn synthesized_machine_round_trips_through_a_file() {
    let path = scratch("tm.txt");
    let o = repfact(&[
        "synth",
        "--oracle",
        "tm-width",
        "--bound",
        "256",
        "--out",
        path.to_str().unwrap(),
        "--verify",
        "300",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# oracle thue_morse-factor-width"));
    assert!(text.contains("suffix depth"));
    let eval = repfact(&["eval", path.to_str().unwrap(), "45", "22"]);
    assert_eq!(stdout(&eval).trim(), "7");
    let eval = repfact(&["eval", path.to_str().unwrap(), "5", "12"]);
    assert_eq!(stdout(&eval).trim(), "4");
}

#[test]
fn unknown_oracle_is_an_error() {
    let path = scratch("x.txt");
    let o = repfact(&[
        "synth",
        "--oracle",
        "tm-nothing",
        "--bound",
        "8",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn paperfolding_profile() {
    let o = repfact(&["pf", "--instructions", "-1,1,1,1", "--profile"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["instructions"], "-+++");
    assert_eq!(v["length"], 15);
    let plain = repfact(&["pf", "--instructions", "++++"]);
    // constant instructions: regular paperfolding prefix
    assert!(stdout(&plain).starts_with("001001100011011\n"));
    let bad = repfact(&["pf", "--instructions", "+2"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn width_rows() {
    let o = repfact(&[
        "widths",
        "--seq",
        "tm",
        "--prefix",
        "16",
        "--max-len",
        "4",
        "--rows",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "1 2 1"), "{out}");
    for line in out.lines() {
        let f: Vec<usize> = line.split(' ').map(|x| x.parse().unwrap()).collect();
        assert!(f[1] <= 4 && f[0] + f[1] <= 16 && f[2] >= 1);
    }
}

#[test]
fn thread_count_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_repfact"))
        .args(["claims", "run", "dp-oracle", "--bound", "8"])
        .env("REPFACT_THREADS", "1")
        .output()
        .unwrap();
    assert!(o.status.success());
    let o = Command::new(env!("CARGO_BIN_EXE_repfact"))
        .args(["claims", "list"])
        .env("REPFACT_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
