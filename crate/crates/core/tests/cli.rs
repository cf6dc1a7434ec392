use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tesspec")).args(args).env_remove("TESSPEC_CACHE_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn zeta_example() {
    let o = run(&["zeta", "--group", "3-3-3", "--d", "3", "--p", "1", "--at", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1/2");
    let o = run(&["zeta", "--group", "hemisphere-3", "--at", "-1/2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "11/120");
}

#[test]
fn eta_json_example() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["eta", "--group", "3-3-4", "--kind", "signature", "--format", "json", "--cache", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["recognized"]["a"], "-5/16");
    assert_eq!(v["recognized"]["b"], "0");
    assert_eq!(v["recognized"]["root"], 5);
    assert!(v["numeric"]["digits"].is_u64());
    // cached run gives identical bytes
    let again = run(&["eta", "--group", "3-3-4", "--kind", "signature", "--format", "json", "--cache", dir.path().to_str().unwrap()]);
    assert_eq!(o.stdout, again.stdout);
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["zeta", "--group", "3-3-3", "--d", "4", "--at", "0"],
        vec!["zeta", "--degrees", "2,3,4", "--at", "0"],
        vec!["zeta", "--degrees", "2,3", "--d", "3", "--at", "0"],
        vec!["zeta", "--group", "9-9-9", "--at", "0"],
        vec!["zeta", "--group", "3-3-3", "--at", "abc"],
        vec!["eta", "--group", "3-3-3", "--digits", "20"],
        vec!["degeneracy", "--group", "3-3-3", "--p", "5"],
        vec!["frobnicate"],
        vec!["zeta", "--group", "3-3-3", "--at", "0", "--bc", "sideways"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn computation_errors_exit_one() {
    // Casimir needs the middle rank
    let o = run(&["casimir", "--group", "3-3-3", "--p", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("rank"));
}

#[test]
fn csv_has_header_and_rational_cells() {
    let o = run(&["degeneracy", "--group", "hemisphere-3", "--p", "1", "--lmax", "3", "--format", "csv"]);
    assert_eq!(stdout(&o), "l,degeneracy\n0,3\n1,8\n2,15\n3,24\n");
    let o = run(&["counting", "--group", "hemisphere-3", "--p", "1", "--lmax", "2", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("l,lambda,degeneracy,G,N_above"));
    assert_eq!(lines.next(), Some("0,4,3,3/2,3"));
}

#[test]
fn custom_degrees() {
    let o = run(&["zeta", "--degrees", "2,3,4,5,6", "--d", "5", "--at", "0"]);
    assert_eq!(stdout(&o).trim(), "-1/2");
}

#[test]
fn verify_identities_pass() {
    let o = run(&["verify", "--order", "40"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(" 0 failed"));
}

#[test]
fn groups_listing() {
    let o = run(&["groups", "--format", "csv"]);
    let t = stdout(&o);
    assert!(t.starts_with("name,label,d,reduced_degrees,exponents,order\n"));
    assert_eq!(t.lines().count(), 5);
    let o = run(&["groups", "--group", "3-3-3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let total: u64 = v["rotation_classes"].as_array().unwrap().iter().map(|c| c["class_size"].as_u64().unwrap()).sum();
    assert_eq!(total, 60);
}

#[test]
fn weyl_polya_and_series_run() {
    assert_eq!(run(&["weyl-polya", "--group", "3-3-5", "--order", "30"]).status.code(), Some(0));
    let o = run(&["series", "--group", "3-3-4", "--kind", "h", "--order", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["coefficients"][0][0].is_string());
}
