use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_metacyclic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn validate_exit_codes() {
    let ok = run(&["validate", "((2.3,-1),1;[(0,1),(1,3),3])"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("\"ok\": true"));

    let bad = run(&["validate", "((2.3,-1),0;[(0,1),(1,3),3])"]);
    assert_eq!(bad.status.code(), Some(1));

    let garbage = run(&["validate", "((2.3,-1),0;[(0,1)"]);
    assert_eq!(garbage.status.code(), Some(2));
    let err = String::from_utf8_lossy(&garbage.stderr);
    assert!(err.contains("\"error\""), "{err}");
}

#[test]
fn derive_prints_both_factors() {
    let o = run(&["derive", "((4·4,-1),1;[(0,1),(1,2),2])"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).starts_with("[(4,2,1;);(4,1;((1,2),4))]"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn enumerate_single_group() {
    let o = run(&[
        "enumerate",
        "--genus",
        "3",
        "--m",
        "4",
        "--n",
        "4",
        "--k",
        "-1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 4);

    let csv = run(&[
        "enumerate",
        "--genus",
        "3",
        "--m",
        "2",
        "--n",
        "3",
        "--k",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&csv).lines().count(), 3);
}

#[test]
fn table_diff_golden() {
    let three = run(&["table", "--genus", "3", "--diff-golden"]);
    assert_eq!(three.status.code(), Some(0));
    assert_eq!(
        stdout(&three).lines().filter(|l| l.contains(" | ")).count(),
        22
    );

    let five = run(&["table", "--genus", "5", "--diff-golden"]);
    assert_eq!(five.status.code(), Some(1));
}

#[test]
fn genus_below_two_is_rejected() {
    let o = run(&["table", "--genus", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("precondition"));
}

#[test]
fn oracle_reports_agreement() {
    let o = run(&["oracle", "--genus", "3", "--max-order", "16"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["disagreements"].as_array().unwrap().is_empty(), "{line}");
    }
}

#[test]
fn checks() {
    let dihedral = run(&["check", "dihedral", "(3,1;(1,3),(2,3))"]);
    let v: serde_json::Value = serde_json::from_slice(&dihedral.stdout).unwrap();
    assert_eq!(v["verdict"], "witness");

    let none = run(&["check", "dihedral", "(3,0;(1,3),(1,3),(1,3))"]);
    let v: serde_json::Value = serde_json::from_slice(&none.stdout).unwrap();
    assert_eq!(v["verdict"], "none");

    let q = run(&["check", "quaternionic", "((4·4,-1),1;[(0,1),(1,2),2])"]);
    let v: serde_json::Value = serde_json::from_slice(&q.stdout).unwrap();
    assert_eq!(v["verdict"], true);

    let polygon = run(&["check", "polygon", "(7,0;(1,7),(2,7),(4,7))"]);
    let v: serde_json::Value = serde_json::from_slice(&polygon.stdout).unwrap();
    assert_eq!(v["verdict"], true);
    assert_eq!(v["glued_genus"], 3);

    let involution = run(&["check", "lift-involution", "(2,0;((1,2),6))", "--n", "2"]);
    assert_eq!(involution.status.code(), Some(1));
}
