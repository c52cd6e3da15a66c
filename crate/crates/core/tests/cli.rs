use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclic-ag")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn orbit_over_gf4() {
    let o = run(&["orbit", "--q", "2^2", "--modulus", "1,1,1", "--matrix", "1,1;b,0", "--alpha", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1, b, b+1, inf, 0");
}

#[test]
fn roots_of_unity_json() {
    let o = run(&["example", "roots-of-unity", "--q", "7", "--n", "6", "--r", "1", "--s", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 6);
    assert_eq!(v["k"], 3);
    assert_eq!(v["d"], 4);
    assert_eq!(v["cyclic"], true);
}

#[test]
fn json_output_is_stable() {
    let args = ["construct", "--q", "7", "--matrix", "1,0;0,3", "--alpha", "1", "--beta", "0", "--r", "2", "--json"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn verify_with_moved_divisor_fails() {
    let o = run(&[
        "verify", "--q", "4", "--modulus", "1,1,1", "--matrix", "1,1;b,0", "--alpha", "1", "--divisor", "1*a=0", "--json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["G_invariant"], false);
}

#[test]
fn verify_degree_two_place() {
    let o = run(&[
        "verify", "--q", "4", "--modulus", "1,1,1", "--matrix", "1,1;b,0", "--alpha", "1", "--divisor", "1*poly:b+1,b+1,1",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["orbit", "--q", "6", "--matrix", "1,1;0,1", "--alpha", "0"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "--q", "5", "--matrix", "1,0;0,2", "--alpha", "0", "--r", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn equivalence_verdicts() {
    let eq = run(&["equiv", "--q", "5", "--first", "1,1,1,1", "--second", "1,2,3,4"]);
    assert_eq!(eq.status.code(), Some(0));
    let ineq = run(&["equiv", "--q", "5", "--first", "1,1,1,0", "--second", "1,2,3,4"]);
    assert_eq!(ineq.status.code(), Some(1));
    let undecided = run(&["--budget-perms", "10", "equiv", "--q", "5", "--first", "1,1,1,1", "--second", "1,2,3,4"]);
    assert_eq!(undecided.status.code(), Some(3));
}

#[test]
fn canonical_reports_relation() {
    let o = run(&["canonical", "--q", "5", "--matrix", "1,0;0,3", "--alpha", "1", "--r", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["relation"], "EQUIVALENT");
    assert_eq!(v["canonical"], "C([1,0;0,2], 1, inf, 1)");
}

#[test]
fn fixedfield_of_translation() {
    let o = run(&["fixedfield", "--q", "5", "--matrix", "1,1;0,1", "--alpha", "0", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["m"], 5);
    assert_eq!(v["method"], "norm");
    assert_eq!(v["splitting"]["holds"], true);
}
