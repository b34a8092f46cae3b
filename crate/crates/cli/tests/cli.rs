use std::process::{Command, Output};

fn raising(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_raising")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = raising(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn giambelli_six_two_one() {
    let o = raising(&["giambelli", "--ring", "c", "--k", "2", "--index", "6,2,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "-2 w_{9} + 4 w_{8,1} - 2 w_{7,1,1} - w_{6,3} + w_{6,2,1}");
    let v = json(&["giambelli", "--ring", "c", "--k", "2", "--index", "6,2,1"]);
    assert_eq!(v["basis"], "w");
    assert_eq!(v["terms"].as_array().unwrap().len(), 5);
}

#[test]
fn pieri_p3_on_21() {
    let v = json(&["pieri", "--ring", "c", "--k", "1", "--p", "3", "--lambda", "2,1"]);
    let terms: Vec<(Vec<u64>, i64)> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let idx = t["index"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
            (idx, t["coeff"][0].as_i64().unwrap())
        })
        .collect();
    assert_eq!(terms.len(), 5);
    assert!(terms.contains(&(vec![6], 2)));
    assert!(terms.contains(&(vec![5, 1], 4)));
    assert!(terms.contains(&(vec![3, 2, 1], 1)));
    let checked = raising(&["pieri", "--ring", "c", "--k", "1", "--p", "3", "--lambda", "2,1", "--check"]);
    assert_eq!(checked.status.code(), Some(0));
}

#[test]
fn verify_runs_a_suite() {
    let o = raising(&["verify", "mirror-c", "--k", "2", "--max-size", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = raising(&["verify", "pieri-hl", "--max-size", "3", "--sequential"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&["verify", "stdcor", "--max-size", "4"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["pieri", "--ring", "c", "--p", "3", "--lambda", "2,1"],
        vec!["pieri", "--ring", "c", "--k", "1", "--p", "1", "--lambda", "2,2"],
        vec!["verify", "no-such-suite"],
        vec!["grassmannian", "--k", "1", "--n", "3", "--lambda", "5"],
        vec!["recursion", "--ring", "c", "--k", "2", "--p", "4", "--lambda", "4,2,1"],
        vec!["reduced-words", "--w", "1,1"],
        vec!["giambelli", "--ring", "a"],
    ] {
        let o = raising(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn hyperoctahedral_commands() {
    let o = raising(&["grassmannian", "--k", "3", "--n", "7", "--lambda", "8,5,2,1"]);
    assert_eq!(stdout(&o).trim(), "1,4,7,-5,-2,3,6");
    let o = raising(&["grassmannian", "--k", "1", "--n", "3", "--w", "2,-3,1"]);
    assert_eq!(stdout(&o).trim(), "4,1");
    let o = raising(&["reduced-words", "--w", "2,-3,1"]);
    assert_eq!(stdout(&o).trim(), "1,2,1,0,1\n2,1,0,2,1\n2,1,2,0,1");
    let o = raising(&["reduced-words", "--w", "-1,2", "--count"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = raising(&["stanley", "--w", "-1", "--m", "1"]);
    assert_eq!(stdout(&o).trim(), "2*x1");
    let v = json(&["skew-check", "--k", "1", "--n", "3", "--w", "2,-3,1"]);
    assert_eq!(v["skew"], true);
    assert_eq!(v["lambda"], serde_json::json!([4, 1]));
    let v = json(&["skew-check", "--k", "1", "--n", "4", "--lambda", "3,2", "--mu", "3"]);
    assert_eq!(v["compatible"], false);
}

#[test]
fn theta_and_tableaux() {
    let o = raising(&["theta", "--k", "1", "--lambda", "3,1", "--m", "2", "--mode", "tableau"]);
    assert!(stdout(&o).starts_with("4*x1^3*x2 + 2*x1^3*y1"));
    let v = json(&["bitableaux", "--k", "1", "--lambda", "3,1", "--m", "2"]);
    assert_eq!(v["count"], 12);
    let v = json(&["tableaux", "--k", "1", "--lambda", "4,1", "--max-entry", "5", "--standard"]);
    assert_eq!(v["count"], 3);
    let o = raising(&["skewF", "--k", "1", "--lambda", "3,2", "--mu", "3", "--m", "3"]);
    assert_eq!(stdout(&o).trim(), "0");
    let v = json(&["qexpand", "--k", "1", "--lambda", "5,2", "--mu", "5"]);
    assert_eq!(v["nonnegative"], true);
}

#[test]
fn output_is_stable() {
    let args = ["mirror", "--ring", "hl", "--lambda", "3,1", "--format", "json"];
    let a = raising(&args);
    let b = raising(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
