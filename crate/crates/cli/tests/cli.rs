use std::io::Write;
use std::process::{Command, Output};

fn llt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_llt")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

const RUNNING: &str = "((8,7,6),(4,3,2)/(2,0,0))";

#[test]
fn compute_single_cells() {
    let o = llt(&["compute", "--tuple", "((1),(1))", "--n", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "t*x1^2 + x1*x2 + t*x1*x2 + t*x2^2");
}

#[test]
fn compute_and_lattice_agree_byte_for_byte() {
    for (t, n) in [("((2,1),(1))", "3"), ("((2,2)/(1,0),(2,1))", "2"), ("((3))", "2")] {
        let a = llt(&["compute", "--tuple", t, "--n", n]);
        let b = llt(&["lattice", "--tuple", t, "--n", n]);
        assert_eq!(a.stdout, b.stdout, "{t}");
    }
}

#[test]
fn swap_reports_exponent_five() {
    let o = llt(&["swap", "--tuple", RUNNING, "--n", "3", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["exponent"], 5);
    assert_eq!(v["swapped"], "((4,3,2)/(2,0,0),(8,7,6))");
    assert!(!v["walks"].as_array().unwrap().is_empty());
}

#[test]
fn matchings_of_two_matching_tuple() {
    let o = llt(&["matchings", "--tuple", "((5,4,4)/(2,2,0),(3,1,1))", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["unique"], false);
    assert_eq!(v["classified_unique"], false);
    assert_eq!(v["count"], 3);
    let arcs = &v["matchings"][0]["arcs"];
    assert_eq!(arcs.as_array().unwrap().len(), 4);
    assert_eq!(arcs[0].as_array().unwrap().len(), 2);
}

#[test]
fn beads_text() {
    let o = llt(&["beads", "--tuple", RUNNING]);
    assert_eq!(stdout(&o).trim(), "top [R5 R4 B1 B0] bottom [B1 R0]");
}

#[test]
fn relations_json_schema() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"family":{{"values":[3,2,1,0]}},"n":2}}"#).unwrap();
    let o = llt(&["relations", "--input", f.path().to_str().unwrap(), "--format", "json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["order"].as_array().unwrap().len(), 2);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[0][0], serde_json::json!({"exp": 0}));
    assert!(rows[0][1].is_null());
    assert_eq!(v["g"].as_array().unwrap().len(), 2);
}

#[test]
fn json_input_from_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"tuple":[{{"outer":[2,1]}},{{"outer":[1]}}],"n":2}}"#).unwrap();
    let o = llt(&["compute", "--input", f.path().to_str().unwrap(), "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["n"], 2);
    assert_eq!(v["llt"]["n"], 2);
}

#[test]
fn exit_codes() {
    assert_eq!(llt(&["compute", "--tuple", "((1,2))", "--n", "2"]).status.code(), Some(2));
    assert_eq!(llt(&["compute", "--tuple", "((1))"]).status.code(), Some(2));
    assert_eq!(llt(&["beads", "--tuple", "((1))"]).status.code(), Some(3));
    assert_eq!(llt(&["swap", "--tuple", "((1),(1))", "--n", "1", "--config", "99"]).status.code(), Some(3));
    let o = llt(&["verify", "--corpus", "small", "--criteria", "4"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("row 2"));
    assert_eq!(llt(&["verify", "--corpus", "nope"]).status.code(), Some(3));
}

#[test]
fn verify_passing_criteria() {
    let o = llt(&["verify", "--corpus", "small", "--criteria", "2,3,5,8", "--workers", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains("PASS")).count(), 4);
}

#[test]
fn diagrams() {
    let o = llt(&["swap", "--tuple", RUNNING, "--n", "3", "--format", "svg"]);
    let s = stdout(&o);
    assert!(s.starts_with("<svg") && s.contains("stroke-opacity"));
    let o = llt(&["lattice", "--tuple", "((2,1),(1))", "--n", "2", "--format", "tikz", "--config", "1"]);
    assert!(stdout(&o).contains("\\begin{tikzpicture}"));
    let o = llt(&["matchings", "--tuple", RUNNING, "--format", "svg"]);
    assert_eq!(stdout(&o).matches("<path").count(), 3);
    assert_eq!(llt(&["compute", "--tuple", "((1))", "--n", "1", "--format", "svg"]).status.code(), Some(2));
}
