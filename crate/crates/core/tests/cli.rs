use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(rel).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_discharge-lab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn validate_k3() {
    let o = run(&["validate", &corpus("basic/k3.plg")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"], Value::Bool(true));
}

#[test]
fn validate_rejects_k4_like_cycles() {
    let o = run(&["validate", &corpus("basic/k4.plg")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!json(&o)["forbidden_cycles"].as_array().unwrap().is_empty());
}

#[test]
fn classify_claw_cycle() {
    let o = run(&["classify", &corpus("basic/claw555.plg"), "--cycle", "1,2,3,4,5,6,7,8,9"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"], "bad");
    assert_eq!(v["kind"], "Claw_555");
    let cells: Vec<u64> = v["cells"].as_array().unwrap().iter().map(|c| c["length"].as_u64().unwrap()).collect();
    assert_eq!(cells, vec![5, 5, 5]);
}

#[test]
fn classify_rejects_long_cycles_unless_asked() {
    let file = corpus("cycles/edge_claw_3738.plg");
    let twelve = "1,2,3,4,5,6,7,8,9,10,11,12";
    assert_eq!(run(&["classify", &file, "--cycle", twelve]).status.code(), Some(1));
}

#[test]
fn cycles_reports_every_short_cycle_once() {
    let o = run(&["cycles", &corpus("basic/claw555.plg")]);
    let v = json(&o);
    let arr = v.as_array().unwrap();
    // outer 9-cycle, three 5-faces, three 7-cycles around pairs of faces
    assert_eq!(arr.len(), 7);
    assert_eq!(arr.iter().filter(|c| c["verdict"] == "bad").count(), 1);
}

#[test]
fn shape_of_claw_host_passes() {
    let o = run(&["shape", &corpus("basic/claw555.plg")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(json(&o).as_array().unwrap().len(), 1);
}

#[test]
fn color_prints_valid_lines() {
    let o = run(&["color", &corpus("basic/k3.plg")]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 3);
    assert!(lines.iter().all(|l| l.starts_with("col ")));
}

#[test]
fn extend_reports_missing_extension() {
    let dir = tempfile::tempdir().unwrap();
    let pre = dir.path().join("pre.col");
    // the claw centre sees colours 1, 2 and 3 on the boundary
    std::fs::write(&pre, "col 1 1\ncol 2 2\ncol 3 3\ncol 4 2\ncol 5 3\ncol 6 2\ncol 7 3\ncol 8 2\ncol 9 3\n").unwrap();
    let o = run(&["extend", &corpus("basic/claw555.plg"), "--precoloring", pre.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    std::fs::write(&pre, "col 1 1\ncol 2 2\ncol 3 3\ncol 4 1\ncol 5 2\ncol 6 3\ncol 7 1\ncol 8 2\ncol 9 3\n").unwrap();
    let o = run(&["extend", &corpus("basic/claw555.plg"), "--precoloring", pre.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("col 10 "));
}

#[test]
fn oracle_counts_k4_colourings() {
    let o = run(&["oracle", &corpus("basic/k4.plg")]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    // one pair takes colour 1, the other two vertices take 2 and 3
    assert_eq!(v["colorings"], 12);
    assert_eq!(v["agree"], true);
}

#[test]
fn oracle_respects_size_bound() {
    let o = run(&["oracle", &corpus("hosts/five_pendent.plg"), "--max-n", "12"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn malformed_input_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.plg");
    std::fs::write(&bad, "plg 1\nn 3\nrot 1: 2 x\n").unwrap();
    let o = run(&["faces", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn discharge_matches_golden_k3() {
    let o = run(&["discharge", &corpus("basic/k3.plg")]);
    assert_eq!(stdout(&o), std::fs::read_to_string(corpus("golden/k3.ledger.json")).unwrap());
    let v = json(&o);
    assert_eq!(v["total_initial"], "7");
    assert_eq!(v["total_final"], "7");
}

#[test]
fn audit_reports_nonzero_total() {
    let o = run(&["audit", &corpus("basic/k3.plg")]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["expected_total"], "7");
    assert_eq!(v["zero_sum_claim_holds"], false);
}

#[test]
fn rule_switches_are_accepted() {
    let file = corpus("hosts/antiwheel.plg");
    let plain = stdout(&run(&["discharge", &file]));
    let both = run(&["discharge", &file, "--r12-split", "--r3-ten-thirds"]);
    assert_eq!(both.status.code(), Some(0));
    let v: Value = serde_json::from_str(&plain).unwrap();
    let w = json(&both);
    assert_eq!(v["total_final"], w["total_final"]);
}

#[test]
fn json_outputs_are_fixed_points() {
    for args in [
        vec!["faces", "basic/k3.plg"],
        vec!["configs", "hosts/wheel.plg"],
        vec!["cycles", "cycles/edge_claw_3737.plg"],
        vec!["discharge", "hosts/small_five_face.plg"],
        vec!["audit", "hosts/antiwheel.plg"],
    ] {
        let o = run(&[args[0], &corpus(args[1])]);
        let text = stdout(&o);
        let v: Value = serde_json::from_str(&text).unwrap();
        let mut again = serde_json::to_string_pretty(&v).unwrap();
        again.push('\n');
        assert_eq!(text, again, "{args:?}");
        assert_eq!(text, stdout(&run(&[args[0], &corpus(args[1])])), "{args:?} is not deterministic");
    }
}

#[test]
fn configs_reduce_roundtrip() {
    let file = corpus("hosts/light_cluster.plg");
    let configs = json(&run(&["configs", &file]));
    let first = configs.as_array().unwrap().first().expect("a match").clone();
    let o = run(&["reduce", &file, "--match", &first["id"].to_string()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!(v["result_plg"].as_str().unwrap().starts_with("plg 1"));
    let n: usize = std::fs::read_to_string(&file).unwrap().lines().nth(1).unwrap()[2..].parse().unwrap();
    assert_eq!(v["vertex_map"].as_array().unwrap().len(), n);
}

#[test]
fn certify_one_host() {
    let o = run(&["certify", "--file", &corpus("hosts/two_incident_light_face.plg"), "--kind", "TwoIncident344"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&o);
    assert!(!v.as_array().unwrap().is_empty());
    assert!(v.as_array().unwrap().iter().all(|r| r["report"]["failures"] == 0));
}

#[test]
fn dot_outputs() {
    let k3 = corpus("basic/k3.plg");
    let plain = stdout(&run(&["dot", &k3]));
    assert!(!plain.contains("cluster"));
    assert_eq!(plain.matches(" -- ").count(), 3);

    let dir = tempfile::tempdir().unwrap();
    let col = dir.path().join("k3.col");
    std::fs::write(&col, "col 1 1\ncol 2 1\ncol 3 2\n").unwrap();
    let filled = stdout(&run(&["dot", &k3, "--coloring", col.to_str().unwrap()]));
    assert_eq!(filled.matches("fillcolor=\"#f4a582\"").count(), 2);
    assert_eq!(filled.matches("fillcolor=\"#92c5de\"").count(), 1);

    let claw = stdout(&run(&["dot", &corpus("basic/claw555.plg"), "--cycle", "1,2,3,4,5,6,7,8,9"]));
    assert!(claw.contains("subgraph cluster_0 {\n    label=\"Claw_555\";\n    style=dashed;\n    10;\n  }"), "{claw}");
}

#[test]
fn unknown_kind_is_an_input_error() {
    let o = run(&["certify", "--kind", "Nonsense", "--file", &corpus("basic/k3.plg")]);
    assert_eq!(o.status.code(), Some(1));
}
