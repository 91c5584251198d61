use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_translab")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn new_writes_a_readable_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let p = path.to_str().unwrap();
    let out = run(&["new", "toeplitz:3", "--field", "GF(5)", "-o", p]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!((v["rows"].as_u64(), v["field"].as_str()), (Some(3), Some("GF(5)")));
    assert_eq!(v["basis"].as_array().unwrap().len(), 5);
    let out = run(&["check", p, "-k", "1"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!((v["status"].as_str(), v["field"].as_str()), (Some("CertifiedFiniteField"), Some("GF(5)")));
}

#[test]
fn check_reports_witness() {
    let out = run(&["check", "(minimal:3,3,1)", "-k", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["status"], "Disproved");
    assert!(v["witness"].is_object());
    let out = run(&["check", "tracezero:3", "-k", "2"]);
    assert_eq!(json(&out)["status"], "CertifiedExact");
}

#[test]
fn separation_and_constructions() {
    let v = json(&run(&["sep", "toeplitz:3", "-k", "2", "--primes", "5"]));
    assert_eq!((v["property"].as_str(), v["status"].as_str()), (Some("k-separating"), Some("CertifiedFiniteField")));
    let v = json(&run(&["preann", "toeplitz:3"]));
    assert_eq!(v["basis"].as_array().unwrap().len(), 4);
    let v = json(&run(&["tensor", "toeplitz:2", "full:1,2"]));
    assert_eq!((v["rows"].as_u64(), v["cols"].as_u64(), v["basis"].as_array().unwrap().len()), (Some(2), Some(4), 6));
    let v = json(&run(&["prod", "minimal:4,4,1", "minimal:4,4,1"]));
    assert_eq!(v["rows"], 4);
    assert_eq!(json(&run(&["power-index", "toeplitz:3"]))["index"], 2);
    assert_eq!(json(&run(&["invertible", "hankel:3"]))["found"], true);
    let v = json(&run(&["extremes", "tracezero:2"]));
    assert_eq!((v["field"].as_str(), v["extremes"]["min_nonzero"]["rank"].as_u64()), (Some("GF(5)"), Some(1)));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&run(&["bogus"])), 1);
    assert_eq!(code(&run(&["check", "toeplitz:3"])), 1);
    let out = run(&["check", "nosuch:3", "-k", "1"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("nosuch"));
    assert_eq!(code(&run(&["check", "toeplitz:3", "-k", "0"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn malformed_file_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"rows\": 2,\n \"cols\": 2,\n \"field\": \"Q\",\n \"basis\": [[\"1\", \"x\"]]}").unwrap();
    let out = run(&["check", path.to_str().unwrap(), "-k", "1"]);
    assert_eq!(code(&out), 1);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.json"), "{err}");
}

#[test]
fn field_mismatch_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&run(&["new", "toeplitz:2", "--field", "GF(7)", "-o", p])), 0);
    let out = run(&["tensor", "toeplitz:2", p]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("field mismatch"));
}

#[test]
fn budget_exceeded_exits_two() {
    let out = run(&["extremes", "toeplitz:3", "--budget", "10"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let a = run(&["report", "paper", "-o", path.to_str().unwrap()]);
    let b = run(&["report", "paper"]);
    assert_eq!(code(&a), code(&b));
    assert_eq!(std::fs::read(&path).unwrap(), b.stdout);
    let v = json(&b);
    assert_eq!(v["schema"], "translab-report/1");
    let rows = v["rows"].as_array().unwrap();
    let failing: Vec<&str> = rows.iter().filter(|r| r["pass"] == false).map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(failing, ["phiblock(4,1)-both"]);
    assert_eq!(code(&b), 3);
    let t = run(&["report", "paper", "--format", "table"]);
    assert!(String::from_utf8_lossy(&t.stdout).lines().count() > rows.len());
}
