use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

fn edgepoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgepoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn graph_file(body: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

const P3: &str = r#"{"n": 3, "edges": [[1, 2], [2, 3]], "c": [2, 3, 2]}"#;

#[test]
fn analyze_path() {
    let f = graph_file(P3);
    let v = json_of(&edgepoly(&[
        "--json",
        "analyze",
        f.path().to_str().unwrap(),
    ]));
    assert_eq!(v["level"], true);
    assert_eq!(v["delta_c"], 3);
    assert_eq!(v["num_bases"], 2);
    assert_eq!(v["int_star_degree"], 1);
    assert_eq!(v["interior_points_n1"], 2);
    assert_eq!(v["witness"], Value::Null);
    let facets: Vec<(Vec<u64>, u64)> = v["facets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| {
            let s = f["subset"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect();
            (s, f["bound"].as_u64().unwrap())
        })
        .collect();
    assert_eq!(
        facets,
        vec![(vec![1], 2), (vec![2], 3), (vec![3], 2), (vec![1, 3], 3)]
    );
    for key in [
        "delta_c",
        "num_bases",
        "facets",
        "interior_points_n1",
        "pseudo_gorenstein",
        "level",
        "int_star_degree",
        "reflexive_up_to_translation",
        "delta_vector",
        "unimodal",
        "witness",
        "scan_bound_used",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn report_is_byte_stable() {
    let f = graph_file(
        r#"{"n": 7, "edges": [[1,4],[1,5],[1,6],[1,7],[2,4],[2,5],[2,6],[2,7],[3,4],[3,5],[3,6],[3,7]]}"#,
    );
    let args = [
        "--json",
        "analyze",
        f.path().to_str().unwrap(),
        "--c",
        "2,2,2,2,2,2,2",
    ];
    let first = edgepoly(&args);
    let second = edgepoly(&args);
    assert_eq!(first.stdout, second.stdout);
    let v = json_of(&first);
    assert_eq!(v["pseudo_gorenstein"], true);
    assert_eq!(v["reflexive_up_to_translation"], false);
    assert_eq!(v["level"], false);
    assert_eq!(v["witness"]["level"], 2);
}

#[test]
fn veronese_example() {
    let v = json_of(&edgepoly(&[
        "--json", "veronese", "--a", "6", "--c", "5,3,3,3",
    ]));
    assert_eq!(v["level"], false);
    assert_eq!(v["int_star_degree"], 3);
    let v = json_of(&edgepoly(&[
        "--json",
        "veronese",
        "--a",
        "4",
        "--c",
        "2,2,2",
        "--formula",
    ]));
    assert_eq!(v["level"], true);
    assert_eq!(v["uniform_formula"], true);
}

#[test]
fn tree_check_and_strict_exit() {
    let f = graph_file(P3);
    let path = f.path().to_str().unwrap();
    let v = json_of(&edgepoly(&["--json", "tree-check", path, "--search", "3"]));
    assert_eq!(v["labeling_pseudo_gorenstein"], false);
    assert_eq!(v["search_agrees"], true);
    assert_eq!(
        edgepoly(&["--strict", "tree-check", path]).status.code(),
        Some(1)
    );
    let p4 = graph_file(r#"{"n": 4, "edges": [[1, 2], [2, 3], [3, 4]]}"#);
    let v = json_of(&edgepoly(&[
        "--json",
        "search-labeling",
        p4.path().to_str().unwrap(),
        "--cmax",
        "2",
    ]));
    assert_eq!(v["witness"], serde_json::json!([2, 2, 2, 2]));
}

#[test]
fn delta_vector_of_veronese() {
    let v = json_of(&edgepoly(&[
        "--json",
        "delta-vector",
        "--veronese",
        "4,2,2,2",
    ]));
    assert_eq!(v["delta_vector"], serde_json::json!([1, 19, 19, 1]));
    assert_eq!(v["counts"][1], 23);
}

#[test]
fn bipartite_verdicts() {
    let v = json_of(&edgepoly(&[
        "--json",
        "bipartite",
        "--m",
        "4",
        "--n",
        "3",
        "--c",
        "2,2,2,2,2,2,2",
    ]));
    assert_eq!(v["interior_nonempty"], true);
    assert_eq!(v["level"], false);
    let v = json_of(&edgepoly(&[
        "--json",
        "bipartite",
        "--m",
        "2",
        "--n",
        "2",
        "--c",
        "2,2,2,2",
    ]));
    assert_eq!(v["balanced"], true);
}

#[test]
fn input_errors_exit_two() {
    let f = graph_file(P3);
    let path = f.path().to_str().unwrap();
    assert_eq!(
        edgepoly(&["facets", path, "--c", "1,1"]).status.code(),
        Some(2)
    );
    let bad = graph_file(r#"{"n": 3, "edges": [[1, 1]]}"#);
    assert_eq!(
        edgepoly(&["facets", bad.path().to_str().unwrap(), "--c", "1,1,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        edgepoly(&["facets", "/nonexistent.json"]).status.code(),
        Some(2)
    );
    assert_eq!(
        edgepoly(&["veronese", "--a", "3", "--c", "2,2,2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn budget_exit_three() {
    let f = graph_file(P3);
    let out = edgepoly(&["--budget", "10", "analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_reports_every_criterion() {
    let out = edgepoly(&["verify", "--suite", "paper"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("[PASS]") || l.starts_with("[FAIL]"))
        .collect();
    assert_eq!(lines.len(), 14);
    let all_pass = lines.iter().all(|l| l.starts_with("[PASS]"));
    assert_eq!(out.status.success(), all_pass);
}
