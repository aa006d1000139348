use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_photon-audit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("photon-audit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn table1_default_and_species() {
    let o = run(&["table1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(lines[0].starts_with("symbol,z,a,r_n_fm"));

    let o = run(&["table1", "--species", "26,56"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].starts_with("Fe,26,56,"));
}

#[test]
fn table1_json_round_trip() {
    let o = run(&["table1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    let keys: Vec<&str> = rows[0].as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys[..3], ["symbol", "z", "a"]);
    assert_eq!(rows[2]["symbol"], "Fe");
    assert_eq!(rows[2]["printed_r_s_fm"], 170.0);
}

#[test]
fn table2_variants() {
    let default = stdout(&run(&["table2", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&default).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    let flagged: Vec<_> = rows
        .iter()
        .filter(|r| r["consistency"] == "printed-value-mismatch")
        .collect();
    assert_eq!(flagged.len(), 1);
    assert_eq!(flagged[0]["mismatched"], "l/lambda");

    let long: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["table2", "--lambda", "1000e-9", "--format", "json"]))).unwrap();
    let ratio = long[0]["l_over_lambda"].as_f64().unwrap() / rows[0]["l_over_lambda"].as_f64().unwrap();
    assert!(
        (ratio - 0.25).abs() < 1e-12,
        "l/lambda scales as 1/lambda^2 here: {ratio}"
    );

    let o = run(&["table2", "--alpha", "3", "--b", "50e-18"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().nth(1).unwrap().starts_with("50.0000,3.00000,"));
}

#[test]
fn verify_all_exit_and_json() {
    let o = run(&["verify-all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all as expected"));

    let o = run(&["verify-all", "--tol-scale", "0.1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let closure = v["findings"]
        .as_array()
        .unwrap()
        .iter()
        .find(|f| f["id"] == "closure-integrals")
        .unwrap();
    assert_eq!(closure["verdict"], "match");
    assert!(closure["tolerance"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn flux_svg_is_deterministic() {
    let (a, b) = (scratch("a.svg"), scratch("b.svg"));
    for p in [&a, &b] {
        let o = run(&["flux-svg", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    let text = String::from_utf8(x).unwrap();
    assert!(text.starts_with("<?xml") && text.contains("version=\"1.1\""));
    assert!(text.matches("class=\"e\"").count() >= 8);

    let single = stdout(&run(&["flux-svg", "--phi0", "0.5"]));
    assert_eq!(single.matches("class=\"e\"").count(), 2);
    let pair = stdout(&run(&["flux-svg", "--phi0", "-0.5,0.5"]));
    assert_eq!(pair.matches("class=\"e\"").count(), 4);
}

#[test]
fn forces_sweeps() {
    let o = run(&["forces"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 26);
    assert!(String::from_utf8_lossy(&o.stderr).contains("d exponent -3.0000"));

    let o = run(&["forces", "--d"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "d,alpha,spin,closed,quadrature,residual\n");

    let o = run(&[
        "forces",
        "--spin",
        "parallel",
        "--chi",
        "0.3",
        "--d",
        "1e-16,2e-16",
        "--alpha",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["spin"], "parallel");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["bogus"][..],
        &["table1", "--format", "xml"],
        &["table1", "--species", "26"],
        &["table2", "--alpha", "3"],
        &["table2", "--lambda", "-1"],
        &["verify-all", "--tol-scale", "0"],
        &["flux-svg", "--phi0", "2.0"],
        &["forces", "--d", "5e-18"],
        &["table1", "--out", "/nonexistent-dir/x.csv"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}
