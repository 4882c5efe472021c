use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anclass")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn frob_and_cn() {
    let o = run(&["frob", "5", "5:+", "5:+", "2,2,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0");
    let o = run(&["cn", "9", "9:+"]);
    assert_eq!(stdout(&o).trim(), "2");
    let v = json(&run(&["--json", "cn", "7", "7:-"]));
    assert_eq!(v["schema"], "anclass.cn/1");
    assert_eq!(v["cn"], 3);
    let v = json(&run(&["--json", "frob", "5", "5:+", "5:-", "2,2,1"]));
    let g = anclass::permutations::class_representative(&"2,2,1".parse().unwrap());
    let brute = anclass::oracle::brute_frobenius(&"5:+".parse().unwrap(), &"5:-".parse().unwrap(), &g).unwrap();
    assert_eq!(v["count"], brute.to_string());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["table", "17"]).status.code(), Some(2));
    assert_eq!(run(&["frob", "6", "5:+", "5:+", "2,2,1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["witness", "25,11,7", "9,4,2,2,1x26"]).status.code(), Some(2));
    assert_eq!(run(&["cn", "5", "4,1:+"]).status.code(), Some(2));
}

#[test]
fn infeasible_witness_exits_one() {
    let o = run(&["witness", "25,11,7", "9,4,2,1x28"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn table_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.tbl");
    let b = dir.path().join("b.tbl");
    let o = run(&["table", "13", "--export", a.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("orthogonality ok"));
    let o = run(&["table", "13", "--import", a.to_str().unwrap(), "--export", b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("matches computed true"));
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(run(&["table", "12", "--import", a.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn witness_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("seq.cache");
    let args = ["--json", "witness", "25,11,7", "9,4,2,1x28", "--best-effort", "--seed", "5", "--sequence-cache", cache.to_str().unwrap()];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stderr));
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    let v = json(&first);
    assert_eq!(v["schema"], "anclass.witness/1");
    assert_ne!(v["classes"]["delta"], v["classes"]["delta_bar"]);
    assert!(std::fs::read_to_string(&cache).unwrap().starts_with("anclass sequence cache"));
    let v = json(&run(&["--json", "witness", "11", "2,2,1x7", "--best-effort", "--seed", "3"]));
    assert_eq!(v["construction"]["method"], "ncycle-reduction");
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "gleason", "--n", "7,9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("gleason pass\n"));
    let v = json(&run(&["--json", "verify", "ancn", "--n", "5,7,9"]));
    assert_eq!(v["schema"], "anclass.verify/1");
    assert_eq!(v["pass"], true);
    let o = run(&["verify", "construction", "--trials", "50", "--seed", "9"]);
    assert!(stdout(&o).contains("50/50 witnesses verified"));
    let o = run(&["verify", "split-coverage-report", "--n", "8..10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[info] split coverage n=8"));
}

#[test]
fn covers_and_bounds() {
    let v = json(&run(&["--json", "covers", "5", "5:+", "5:+"]));
    assert_eq!(v["schema"], "anclass.coverage/1");
    assert_eq!(v["uncovered"][0], "2,2,1");
    let o = run(&["bounds", "prop24", "--n", "13..31", "--table"]);
    let csv = stdout(&o);
    assert!(csv.starts_with("n,clause_i"));
    assert_eq!(csv.lines().count(), 11);
    assert_eq!(stdout(&run(&["bounds", "hook", "--n", "13", "--k", "4"])).trim(), "7");
    assert_eq!(run(&["bounds", "prop24", "--n", "12"]).status.code(), Some(2));
    let v = json(&run(&["--json", "bounds", "amgm", "--n", "3"]));
    assert_eq!(v["best_product"], "3");
}
