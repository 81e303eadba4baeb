//! End-to-end tests of the `unifour` binary: exit-code contract, report
//! shape, CSV formats, and byte-identical determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn unifour(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unifour"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report_of(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

#[test]
fn solve_writes_spectrum_and_eigenfunctions() {
    let dir = tempfile::tempdir().unwrap();
    let out = unifour(&[
        "solve",
        "--n-max",
        "3",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let report = report_of(&out);
    assert_eq!(report["command"], "solve");
    assert_eq!(report["outputs"].as_array().unwrap().len(), 5);
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"].as_bool().unwrap()));

    let spectrum = fs::read_to_string(dir.path().join("spectrum.csv")).unwrap();
    let mut lines = spectrum.lines();
    assert_eq!(lines.next(), Some("n,epsilon"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[0].starts_with("0,5.00000000000000e-1"), "{}", rows[0]);
    assert!(rows[3].starts_with("3,3.50000000000000e0"), "{}", rows[3]);

    // ψ₀ peaks at the origin.
    let psi0 = fs::read_to_string(dir.path().join("psi_0.csv")).unwrap();
    let mut best = (0.0f64, 0.0f64);
    for line in psi0.lines().skip(1) {
        let (x, v) = line.split_once(',').unwrap();
        let (x, v): (f64, f64) = (x.parse().unwrap(), v.parse().unwrap());
        if v.abs() > best.1.abs() {
            best = (x, v);
        }
    }
    assert!(best.0.abs() < 1e-9, "peak at {}", best.0);
    assert!((best.1 - 0.751_125_544_464_942_5).abs() < 1e-6, "{}", best.1);
}

#[test]
fn scan_csv_has_the_documented_columns() {
    let dir = tempfile::tempdir().unwrap();
    let out = unifour(&[
        "scan",
        "--a-min",
        "-0.55",
        "--a-max",
        "0.95",
        "--step",
        "0.25",
        "--kind",
        "sine",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = fs::read_to_string(dir.path().join("scan.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("a,parseval_ok,moment_ok,derivative_ok,parity_ok,accepted,growth_flag")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 7); // -0.55, -0.30, -0.05, 0.20, 0.45, 0.70, 0.95
    // a = -0.55 fails Parseval: no growth flag is computed there.
    assert!(rows[0].contains(",false,true,false,false,false,"), "{}", rows[0]);
    assert!(rows[0].ends_with(','), "{}", rows[0]);
    // a = 0.20 is Parseval-admissible but rejected, with growth evidence.
    assert!(rows[3].contains(",true,true,false,false,false,true"), "{}", rows[3]);
}

#[test]
fn scan_no_accepted_rows_between_integers() {
    let dir = tempfile::tempdir().unwrap();
    let out = unifour(&[
        "scan", "--a-min", "0.4", "--a-max", "0.6", "--step", "0.1", "--kind", "cosine",
        "--out", dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = fs::read_to_string(dir.path().join("scan.csv")).unwrap();
    for line in csv.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[5], "false", "{line}");
        assert_eq!(cols[6], "true", "{line}");
    }
}

#[test]
fn transform_outputs_match_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let out = unifour(&[
        "transform",
        "--kind",
        "cosine",
        "--function",
        "gauss",
        "--k-max",
        "8",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = fs::read_to_string(dir.path().join("transform.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("k,F"));
    for line in lines {
        let (k, v) = line.split_once(',').unwrap();
        let (k, v): (f64, f64) = (k.parse().unwrap(), v.parse().unwrap());
        let expect = (-k * k / 4.0).exp() / 2.0f64.sqrt();
        assert!((v - expect).abs() < 1e-6, "k={k}: {v} vs {expect}");
    }
    assert!(dir.path().join("signal.csv").exists());
}

#[test]
fn exit_codes_follow_the_contract() {
    // 0: all checks pass.
    let dir = tempfile::tempdir().unwrap();
    let ok = unifour(&[
        "transform", "--kind", "sine", "--function", "x_gauss", "--k-max", "4", "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(ok.status.code(), Some(0));

    // 1: computation errors (parity violation) and unwritable outputs.
    let violated = unifour(&[
        "transform", "--kind", "sine", "--function", "gauss", "--k-max", "4", "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(violated.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&violated.stderr).contains("boundary violation"));

    let unwritable = unifour(&["solve", "--n-max", "0", "--out", "/proc/nope"]);
    assert_eq!(unwritable.status.code(), Some(1));

    // 2: usage errors (unknown suite / unknown function tag).
    let usage = unifour(&["verify", "nonsense"]);
    assert_eq!(usage.status.code(), Some(2));
    let usage = unifour(&[
        "transform", "--kind", "sine", "--function", "unknown", "--k-max", "4", "--out", "x",
    ]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn identical_inputs_give_byte_identical_csv() {
    let run = |dir: &Path| {
        let out = unifour(&[
            "scan", "--a-min", "-0.45", "--a-max", "2.05", "--step", "0.5", "--kind",
            "cosine", "--out", dir.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        (
            fs::read(dir.join("scan.csv")).unwrap(),
            out.stdout.clone(),
        )
    };
    let d1 = tempfile::tempdir().unwrap();
    let d2 = tempfile::tempdir().unwrap();
    let (csv1, _) = run(d1.path());
    let (csv2, _) = run(d2.path());
    assert_eq!(csv1, csv2);

    let solve = |dir: &Path| {
        let out = unifour(&["solve", "--n-max", "2", "--out", dir.to_str().unwrap()]);
        assert!(out.status.success());
        fs::read(dir.join("psi_2.csv")).unwrap()
    };
    let d3 = tempfile::tempdir().unwrap();
    let d4 = tempfile::tempdir().unwrap();
    assert_eq!(solve(d3.path()), solve(d4.path()));
}

#[test]
fn verify_all_passes_on_a_correct_build() {
    let out = unifour(&["verify", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let report = report_of(&out);
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.len() >= 30, "got {} checks", checks.len());
    for prefix in ["transforms/", "oscillator/", "oracle/"] {
        assert!(
            checks
                .iter()
                .any(|c| c["name"].as_str().unwrap().starts_with(prefix)),
            "no {prefix} checks"
        );
    }
}

#[test]
fn verify_reports_are_json_with_named_checks() {
    let out = unifour(&["verify", "oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let report = report_of(&out);
    assert_eq!(report["command"], "verify");
    assert_eq!(report["parameters"]["suite"], "oracle");
    let names: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"oracle/fd_spectrum_agreement"), "{names:?}");
    assert!(names.iter().all(|n| n.starts_with("oracle/")));
}
