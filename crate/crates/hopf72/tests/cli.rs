use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf72")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn simples_zero_regime_lists_six_characters() {
    let o = run(&["simples", "-a", "0,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().filter(|l| l.starts_with("k_") && l.contains("dim 1")).count(), 6);
}

#[test]
fn lattice_dot_is_deterministic() {
    let args = ["lattice", "-a", "2,-1,-1", "-g", "(12)", "--dot"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    assert!(s.starts_with("// schema: hopf72/lattice-dot/v1\ndigraph"));
    assert_eq!(s.matches("P1 family").count(), 2);
}

#[test]
fn json_outputs_carry_a_schema() {
    for args in [
        vec!["build", "-a", "1,2,-3", "--json"],
        vec!["simples", "-a", "1,2,-3", "--json"],
        vec!["quiver", "-a", "1,2,-3", "--json"],
        vec!["integrals", "-a", "2,-1,-1", "--json"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert!(v["$schema"].as_str().unwrap().starts_with("hopf72/"), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_with_two() {
    let o = run(&["build", "-a", "1,2,-2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sum to zero"));
    assert_eq!(run(&["lattice", "-a", "1,1,1,-1,-1,-1", "-g", "(12)"]).status.code(), Some(2));
    assert_eq!(run(&["simples"]).status.code(), Some(2));
    assert_eq!(run(&["simples", "-a", "1/0,0,0"]).status.code(), Some(2));
    assert_eq!(run(&["integrals", "-a", "1,2,-3", "--dot"]).status.code(), Some(2));
}

#[test]
fn subgeneric_input_is_reported_in_input_coordinates() {
    let o = run(&["quiver", "-a", "-1,2,-1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["normalization"]["canonical"], serde_json::json!(["2", "-1", "-1"]));
    assert_eq!(v["ext_matrix"]["simples"], serde_json::json!(["k_e", "k_(13)", "L"]));
}

#[test]
fn out_directory_receives_the_file() {
    let dir = std::env::temp_dir().join(format!("hopf72-cli-{}", std::process::id()));
    let o = run(&["report", "-a", "1,2,-3", "--json", "--out", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let body = std::fs::read_to_string(dir.join("report.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["regime"], "generic");
    assert!(v["claims"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn n4_build_claims_no_dimension() {
    let o = run(&["build", "-a", "1,2,-3,0,0,0", "--degree-bound", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["dimension_claim"].is_null());
}
