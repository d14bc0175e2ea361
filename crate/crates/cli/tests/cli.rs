use std::process::{Command, Output};

use serde_json::Value;

fn hermsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hermsym"))
        .args(args)
        .env_remove("HERMSYM_THREADS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = hermsym(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn describe_grassmannian() {
    let v = json(&["describe", "rect:2,2"]);
    assert_eq!(v["data"]["rank"], 2);
    assert_eq!(v["data"]["dim"], 4);
    assert_eq!(v["data"]["structure_constant"], 4);
    assert_eq!(v["data"]["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(v["meta"]["model"], "rect:2,2");
    assert!(v["checks"].as_array().unwrap().is_empty());
}

#[test]
fn describe_projective_line() {
    let v = json(&["describe", "rect:1,1"]);
    assert_eq!(v["data"]["rank"], 1);
    assert_eq!(v["data"]["dim"], 1);
    assert_eq!(v["data"]["structure_constant"], 2);
}

#[test]
fn size_guard_needs_force() {
    let out = hermsym(&["describe", "rect:9,9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--force"));
    let out = hermsym(&["describe", "rect:9,9", "--force"]);
    assert!(out.status.success());
}

#[test]
fn k_guard_needs_force() {
    let out = hermsym(&["decompose", "rect:2,2", "--k", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("k_max"));
    assert!(hermsym(&["decompose", "rect:2,2", "--k", "7", "--force"]).status.success());
}

#[test]
fn verify_full_suite_passes() {
    let out = hermsym(&["verify", "rect:1,1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
}

#[test]
fn zero_tolerance_fails_moment_suite() {
    let out = hermsym(&["verify", "rect:2,2", "--suite", "moment", "--tolerance", "0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"moment/chart-vs-spectral"), "{failed:?}");
    assert!(stderr(&out).contains("moment/"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = hermsym(&["verify", "rect:1,1", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_model_is_a_usage_error() {
    assert_eq!(hermsym(&["describe", "cube:3"]).status.code(), Some(2));
    assert_eq!(hermsym(&["okounkov", "spin:5"]).status.code(), Some(2));
}

#[test]
fn decompose_grassmannian() {
    let v = json(&["decompose", "rect:2,2", "--k", "1"]);
    assert_eq!(v["data"]["entries"].as_array().unwrap().len(), 3);
    assert_eq!(v["data"]["total"], "6");
    assert_eq!(v["meta"]["k"], 1);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn polytope_csv() {
    let out = hermsym(&["polytope", "rect:2,2", "--k", "1", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains('\r'));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "vertex,e1,e2,e3,e4");
}

#[test]
fn okounkov_projective_line() {
    let v = json(&["okounkov", "rect:1,1"]);
    assert_eq!(v["data"]["generators"], serde_json::json!([[1, 0], [1, 1]]));
    assert_eq!(v["meta"]["convention"], "positive");
}

#[test]
fn okounkov_grassmannian() {
    let v = json(&["okounkov", "rect:2,2"]);
    assert_eq!(v["meta"]["convention"], "negative");
    assert_eq!(v["data"]["body_vertices"].as_array().unwrap().len(), 3);
    assert_eq!(v["data"]["generators"][2], serde_json::json!([1, 1, 1, 0, 0]));
}

#[test]
fn moment_eval_reports_weight() {
    let v = json(&["moment-eval", "rect:2,2", "--x", "1,0.5+0.2i,-0.3i,2"]);
    let nu = v["data"]["moment_weight"]["nu"].as_array().unwrap();
    assert_eq!(nu.len(), 2);
    assert!(nu.iter().all(|x| (0.0..=1.0).contains(&x.as_f64().unwrap())));
    let out = hermsym(&["moment-eval", "rect:2,2", "--x", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "rect:2,2", "--suite", "moment,peirce", "--samples", "5", "--seed", "11", "--format", "json"];
    let a = hermsym(&args);
    let b = hermsym(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn thread_cap() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_hermsym"))
            .args(["decompose", "rect:2,2", "--k", "3"])
            .env("HERMSYM_THREADS", threads)
            .output()
            .unwrap()
    };
    assert!(run("2").status.success());
    assert_eq!(run("0").status.code(), Some(2));
}
