use std::process::{Command, Output};

use serde_json::Value;

fn mu_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mu-lab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn parse_value(line: &str) -> (f64, f64) {
    // `<re>e<exp><sign><im>e<exp>i`
    let body = line.trim().strip_suffix('i').unwrap();
    let e = body.find('e').unwrap();
    let k = e + 1 + body[e + 1..].find(['+', '-']).filter(|&j| j > 0).unwrap_or_else(|| 1 + body[e + 2..].find(['+', '-']).unwrap());
    (body[..k].parse().unwrap(), body[k..].parse().unwrap())
}

fn report_schema() -> jsonschema::JSONSchema {
    let raw = include_str!("../schema/report.schema.json");
    jsonschema::JSONSchema::compile(&serde_json::from_str(raw).unwrap()).unwrap()
}

#[test]
fn eval_mu_prints_fifteen_digits() {
    let o = mu_lab(&["eval", "mu", "--u", "0.2+0.1i", "--v", "0.35-0.05i", "--tau", "0+1i"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let line = out.lines().next().unwrap();
    let (re, im) = parse_value(line);
    // 30-digit direct sum at the same point
    assert!((re - -0.281805866046826).abs() < 1e-13, "{line}");
    assert!((im - -0.859157764345888).abs() < 1e-13, "{line}");
    assert_eq!(line.split(['+', '-']).filter(|p| p.contains('.')).count(), 2);
}

#[test]
fn eval_eta_with_split_tau() {
    let a = stdout(&mu_lab(&["eval", "eta", "--tau", "0+1i"]));
    let b = stdout(&mu_lab(&["eval", "eta", "--tau-re", "0", "--tau-im", "1"]));
    assert_eq!(a, b);
    let (re, im) = parse_value(a.trim());
    assert!((re - 0.768225422326057).abs() < 1e-14);
    assert_eq!(im, 0.0);
}

#[test]
fn eval_at_pole_exits_three() {
    let o = mu_lab(&["eval", "mu", "--u", "0", "--v", "0.3", "--tau", "0+1i"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("PoleProximity"));
}

#[test]
fn eval_usage_errors_exit_two() {
    for args in [
        vec!["eval", "bogus", "--tau", "0+1i"],
        vec!["eval", "mu", "--u", "0.1", "--tau", "0+1i"],
        vec!["eval", "mu", "--u", "0.1", "--v", "0.2"],
        vec!["eval", "mu", "--u", "1+2", "--v", "0.2", "--tau", "0+1i"],
        vec!["eval", "eta", "--tau", "0-1i"],
        vec!["frobnicate"],
    ] {
        assert_eq!(mu_lab(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn eval_vector_prints_each_component() {
    let o = mu_lab(&["eval", "m-n", "--u", "0.1+0.02i", "--u", "-0.2+0.1i", "--u", "0.3", "--tau", "0.1+1.1i"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn verify_suite_json_matches_schema() {
    let o = mu_lab(&["verify", "--suite", "theta", "--seed", "1", "--samples", "20", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(report_schema().is_valid(&v));
    assert_eq!(v["suite"], "theta");
    assert_eq!(v["samples"], 20);
    assert_eq!(v["all_pass"], true);
    assert!(v["results"].as_array().unwrap().len() >= 6);
}

#[test]
fn verify_exit_code_tracks_all_pass() {
    // a tolerance below rounding error makes every check fail
    let o = mu_lab(&["verify", "--suite", "theta", "--samples", "3", "--tol", "1e-300", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(report_schema().is_valid(&v));
    assert_eq!(v["all_pass"], false);
    assert_eq!(v["tol_override"], 1e-300);
}

#[test]
fn verify_single_quadrature_identity() {
    assert_eq!(mu_lab(&["verify", "--id", "MU-6", "--samples", "5"]).status.code(), Some(0));
}

#[test]
fn verify_unknown_names_exit_two() {
    assert_eq!(mu_lab(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(mu_lab(&["verify", "--id", "NOPE-1"]).status.code(), Some(2));
    assert_eq!(mu_lab(&["verify"]).status.code(), Some(2));
}

#[test]
fn verify_writes_report_file() {
    let path = std::env::temp_dir().join(format!("mu-lab-report-{}.json", std::process::id()));
    let o = mu_lab(&["verify", "--id", "ETA-1", "--samples", "4", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(report_schema().is_valid(&v));
    assert_eq!(v["results"][0]["id"], "ETA-1");
}

#[test]
fn thread_cap_does_not_change_results() {
    let run = |threads: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_mu-lab"))
            .args(["verify", "--suite", "mu", "--samples", "3", "--json"])
            .env("MU_LAB_MAX_THREADS", threads)
            .output()
            .unwrap();
        let mut v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        v["results"].as_array_mut().unwrap().sort_by_key(|r| r["id"].as_str().unwrap().to_string());
        v
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn list_counts_and_filters() {
    let all: Value = serde_json::from_str(&stdout(&mu_lab(&["list", "--json"]))).unwrap();
    let all = all.as_array().unwrap();
    assert!(all.len() >= 60);
    let sub: Value = serde_json::from_str(&stdout(&mu_lab(&["list", "--suite", "completion", "--json"]))).unwrap();
    let sub = sub.as_array().unwrap();
    assert!(!sub.is_empty() && sub.len() < all.len());
    assert!(sub.iter().all(|r| r["suite"] == "completion"));
    let text = stdout(&mu_lab(&["list"]));
    assert!(text.lines().any(|l| l.starts_with("MU-1 ")));
    assert_eq!(mu_lab(&["list", "--suite", "nope"]).status.code(), Some(2));
}
