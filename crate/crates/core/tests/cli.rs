use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const FAMILY2_M0: &str = "1,0,1,1,0,1,0,0,1,0,0,0,0,-1,0,0";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_groupdet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = run(&all);
    let v = serde_json::from_str(stdout(&o).trim()).unwrap_or(Value::Null);
    (o.status.code().unwrap(), v)
}

#[test]
fn eval_examples() {
    let o = run(&[
        "eval",
        "--method",
        "oracle",
        "1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1");

    let o = run(&["eval", "2,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1"]);
    assert!(o.status.success());
    assert!(
        stdout(&o).lines().all(|l| l.ends_with(" 17")),
        "{}",
        stdout(&o)
    );

    let (code, v) = json(&["eval", "--method", "factored", FAMILY2_M0]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], 16384);
    let b = &v["breakdown"];
    assert_eq!(
        (&b["d4b"], &b["d4c"], &b["m0"], &b["m1"], &b["F"]),
        (
            &16.into(),
            &16.into(),
            &(-2).into(),
            &4.into(),
            &(-8).into()
        )
    );

    let (code, v) = json(&["eval", FAMILY2_M0]);
    assert_eq!(code, 0);
    assert_eq!(v["agree"], true);
    assert_eq!(v["values"]["frobenius"], 16384);
}

#[test]
fn eval_from_file_and_usage_errors() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("family2.txt");
    std::fs::write(&path, format!("# family 2 at m = 0\n{FAMILY2_M0}\n")).unwrap();
    let o = run(&[
        "eval",
        "--method",
        "oracle",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "16384");

    assert_eq!(run(&["eval", "1,2,3"]).status.code(), Some(2));
    assert_eq!(
        run(&["eval", "1,2,x,0,0,0,0,0,0,0,0,0,0,0,0,0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn classify_examples() {
    let (code, v) = json(&["classify", "33"]);
    assert_eq!(code, 0);
    assert_eq!(v["classification"]["family"], 1);
    assert_eq!(v["classification"]["m"], 2);
    assert_eq!(v["classification"]["reason"], "ODD_1_MOD_16");

    let (code, v) = json(&["classify", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["classification"]["family"], 5);
    assert_eq!(v["classification"]["m"], 0);

    let (code, v) = json(&["classify", "2"]);
    assert_eq!(code, 1);
    assert_eq!(v["classification"]["achievable"], false);
    assert_eq!(v["classification"]["family"], Value::Null);

    let (code, v) = json(&["classify", "-16384"]);
    assert_eq!(code, 0);
    assert_eq!(v["classification"]["family"], 3);
}

#[test]
fn witness_examples() {
    let o = run(&["witness", "1"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).lines().next(),
        Some("1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0")
    );

    let o = run(&["witness", "16384"]);
    assert_eq!(stdout(&o).lines().next(), Some(FAMILY2_M0));

    let (code, v) = json(&["witness", "32768"]);
    assert_eq!(code, 0);
    assert_eq!(v["family"], 4);
    assert_eq!(v["verified"], true);
    let tuple: Vec<i64> = v["assignment"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect();
    assert_eq!(tuple, [1, 1, 1, 1, 0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0]);

    let o = run(&["witness", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).is_empty());
}

#[test]
fn verify_and_search() {
    let o = run(&["verify", "representations"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(),
        11
    );

    let (code, v) = json(&["verify", "identities", "--trials", "50", "--seed", "3"]);
    assert_eq!(code, 0);
    let three = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "three_way_agreement")
        .unwrap();
    assert_eq!(three["passed"], 50);

    let (code, v) = json(&[
        "search",
        "--mode",
        "exhaustive",
        "--box-low",
        "0",
        "--box-high",
        "1",
        "--parallelism",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["evaluated"], 65536);
    assert_eq!(v["membership_violations"], Value::Array(vec![]));

    let (code, v) = json(&["search", "--samples", "1000", "--seed", "11"]);
    assert_eq!(code, 0);
    assert_eq!(v["evaluated"], 1000);

    assert_eq!(
        run(&["search", "--box-low", "3", "--box-high", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["search", "--box-low", "-100"]).status.code(), Some(2));
}
