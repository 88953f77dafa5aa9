use std::process::{Command, Output};

use indpoly::DensePolynomial;

fn indpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_indpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn build_emits_tree_lines() {
    let out = indpoly(&["build", "path", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2:_,0\n");

    let tg = stdout(&indpoly(&["build", "TG", "2", "5"]));
    assert!(tg.starts_with("70:_,"));
    assert_eq!(tg.trim_end().split(',').count(), 70);

    let t = stdout(&indpoly(&["build", "--family", "T,3,5"]));
    assert!(t.starts_with("34:_,"));

    let json = stdout(&indpoly(&["build", "--family", "S2,1", "--format", "json"]));
    assert_eq!(json, "{\"family\":{\"kind\":\"S2\",\"m\":0,\"t\":1},\"tree\":\"3:_,0,1\"}\n");
}

#[test]
fn build_rejects_invalid_family() {
    let out = indpoly(&["build", "TG", "0", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("m >= 1"));
}

#[test]
fn compute_outputs_decimal_strings() {
    assert_eq!(stdout(&indpoly(&["compute", "--family", "P,2"])), "{\"coeffs\":[\"1\",\"2\"]}\n");
    assert_eq!(stdout(&indpoly(&["compute", "--family", "S2,0"])), "{\"coeffs\":[\"1\",\"1\"]}\n");

    let closed = stdout(&indpoly(&["compute", "--family", "TG,2,5", "--engine", "closed-form"]));
    let poly = DensePolynomial::from_json(closed.trim_end()).unwrap();
    assert_eq!(poly.degree(), Some(37));
    for engine in ["dp", "recursive"] {
        let other = stdout(&indpoly(&["compute", "--family", "TG,2,5", "--engine", engine]));
        assert_eq!(other, closed, "{engine}");
    }
    let brute = stdout(&indpoly(&["compute", "--family", "TG,1,1", "--engine", "bruteforce"]));
    let dp = stdout(&indpoly(&["compute", "--family", "TG,1,1"]));
    assert_eq!(brute, dp);
}

#[test]
fn bruteforce_bound_checked_up_front() {
    let out = indpoly(&["compute", "--family", "TG,50,50", "--engine", "bruteforce"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limited to 30"));
}

#[test]
fn tree_file_input_and_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let trees = dir.path().join("trees.txt");
    std::fs::write(&trees, "3:_,0,0\n4:_,0,1,2\n").unwrap();
    let out_path = dir.path().join("polys.json");
    let out = indpoly(&[
        "compute",
        "--tree",
        trees.to_str().unwrap(),
        "--engine",
        "bruteforce",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&out_path).unwrap(),
        "{\"coeffs\":[\"1\",\"3\",\"1\"]}\n{\"coeffs\":[\"1\",\"4\",\"3\"]}\n"
    );

    std::fs::write(&trees, "3:_,0,0\n2:_,5\n").unwrap();
    let bad = indpoly(&["compute", "--tree", trees.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 2"));
}

#[test]
fn analyze_report_json() {
    let text = stdout(&indpoly(&["analyze", "--family", "TG,2,5"]));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["family"]["kind"], "TG");
    assert_eq!(v["degree"], 37);
    assert_eq!(v["violations"], serde_json::json!([34, 36]));
    assert_eq!(v["coeffs"].as_array().unwrap().len(), 38);
    let signs = v["diffs_sign"].as_str().unwrap();
    assert_eq!(signs.len(), 36);
    assert_eq!(&signs[33..], "-+-");
    assert_eq!(v["unimodal"], true);
}

#[test]
fn identities_grid() {
    let out = indpoly(&["identities", "--max-m", "2", "--max-t", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 8);
    let one = stdout(&indpoly(&["identities", "--m", "1", "--t", "0", "--format", "json"]));
    assert_eq!(one, "[{\"m\":1,\"t\":0,\"holds\":true,\"failure\":null}]\n");
}

#[test]
fn probe_csv_columns() {
    let csv = stdout(&indpoly(&["probe", "--m", "2", "--k", "3", "--t-min", "10", "--t-max", "12"]));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("t,k,c_k_bitlength,residual,predicted_exponent"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3);
    for row in rows {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols.len(), 5);
        assert_eq!(cols[1], "3");
        assert_eq!(cols[4], "4");
        assert_eq!(cols[3].split('.').nth(1).unwrap().len(), 6);
    }
    let out = indpoly(&["probe", "--m", "1", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_text() {
    let text = stdout(&indpoly(&["sweep", "--m", "2", "--t-max", "6"]));
    assert!(text.contains("TG(2,5): degree 37, violations {34,36}"));
    assert!(text.contains("exactly 2 violations for all t in [5, 6]"));
}

#[test]
fn reproduce_matches_and_is_deterministic() {
    let first = indpoly(&["reproduce"]);
    assert!(first.status.success());
    let text = stdout(&first);
    assert!(text.contains("TG(2,5): {34,36} ✓"));
    assert!(text.contains("TG(4,6): {78,80,82,84} ✓"));
    assert!(text.contains("TG(5,6): {97,99,101,103,105} ✓"));
    assert_eq!(indpoly(&["reproduce"]).stdout, first.stdout);

    let json = stdout(&indpoly(&["reproduce", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["all_match"], true);
    assert_eq!(v["cases"].as_array().unwrap().len(), 3);
}
