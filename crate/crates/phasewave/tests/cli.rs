use std::fs;
use std::path::Path;
use std::process::Command as Process;

use phasewave::export::{import, parse_csv};
use phasewave::{run, Command, Format, RunConfig, VerificationReport};

fn bin() -> Process {
    Process::new(env!("CARGO_BIN_EXE_phasewave"))
}

#[test]
fn figures_write_six_self_describing_grids() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = RunConfig::new(Command::Figures);
    cfg.format = Format::Json;
    cfg.out = Some(dir.path().to_path_buf());
    cfg.n_rho = 33;
    cfg.n_phi = 64;
    let out = run(&cfg).unwrap();
    assert_eq!(out.files.len(), 6);
    let period = std::f64::consts::TAU / 6.0;
    let mut seen = Vec::new();
    for path in &out.files {
        let text = fs::read_to_string(path).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let m = &v["metadata"];
        assert_eq!(m["ell"], 3);
        assert_eq!(m["A"], 2.0);
        assert_eq!(m["C"], 5.0);
        let (meta, field) = import(path).unwrap();
        assert_eq!(field.values().len(), 33 * 64);
        seen.push((meta.n, (meta.t / period * 4.0).round() as i32));
    }
    seen.sort();
    assert_eq!(seen, vec![(0, 0), (0, 1), (0, 2), (5, 0), (5, 1), (5, 2)]);
}

#[test]
fn quarter_period_figure_is_the_stationary_field() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = RunConfig::new(Command::Figures);
    cfg.out = Some(dir.path().to_path_buf());
    cfg.n_rho = 17;
    cfg.n_phi = 32;
    run(&cfg).unwrap();
    let (meta, quarter) = import(&dir.path().join("figure_n5_tT4.csv")).unwrap();
    assert_eq!(meta.n, 5);
    let mut stationary = cfg.clone();
    stationary.command = Command::Grid;
    stationary.n = 5;
    stationary.amplitude = 0.0;
    stationary.out = None;
    let (_, flat) = parse_csv(&run(&stationary).unwrap().stdout).unwrap();
    assert!(quarter.max_abs_diff(&flat).unwrap() < 1e-12);
}

#[test]
fn identical_configs_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    for format in [Format::Csv, Format::Json] {
        let mut bytes = Vec::new();
        for k in 0..2 {
            let path = dir.path().join(format!("g{k}.{}", format.extension()));
            let status = bin()
                .args(["grid", "--n", "2", "--ell", "2", "--t", "T/8", "--n-rho", "20", "--n-phi", "40"])
                .args(["--format", format.extension(), "--out"])
                .arg(&path)
                .output()
                .unwrap()
                .status;
            assert!(status.success());
            bytes.push(fs::read(&path).unwrap());
        }
        assert_eq!(bytes[0], bytes[1]);
    }
}

#[test]
fn exported_grid_round_trips_bit_exactly() {
    let mut cfg = RunConfig::new(Command::Grid);
    cfg.n = 3;
    cfg.alpha = 0.4;
    cfg.m = 1.3;
    cfg.times = "0.3".into();
    cfg.n_rho = 12;
    cfg.n_phi = 30;
    let text = run(&cfg).unwrap().stdout;
    let (meta, field) = parse_csv(&text).unwrap();
    assert_eq!((meta.n, meta.alpha, meta.m, meta.t), (3, 0.4, 1.3, 0.3));
    let mut again = cfg.clone();
    again.format = Format::Json;
    let json = run(&again).unwrap().stdout;
    let (_, from_json) = phasewave::export::parse_json(&json).unwrap();
    for (a, b) in field.values().iter().zip(from_json.values()) {
        assert_eq!(a.to_bits(), b.to_bits());
    }
}

#[test]
fn several_times_go_to_a_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["grid", "--t", "0,T/4,3T/4", "--n-rho", "5", "--n-phi", "8", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    for i in 0..3 {
        assert!(dir.path().join(format!("grid_n0_t{i}.csv")).exists());
    }
}

#[test]
fn check_exit_status_follows_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    let status = bin()
        .args(["check", "--suite", "laguerre,moyal", "--out"])
        .arg(&good)
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(0));
    let report: VerificationReport = serde_json::from_str(&fs::read_to_string(&good).unwrap()).unwrap();
    assert!(report.passed);

    // An impossible tolerance must fail, and the report must still be written.
    let bad = dir.path().join("bad.json");
    let out = bin()
        .args(["check", "--suite", "laguerre", "--tol", "1e-30", "--out"])
        .arg(&bad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let report: VerificationReport = serde_json::from_str(&fs::read_to_string(&bad).unwrap()).unwrap();
    assert!(!report.passed);
    assert_eq!(report.checks[0].tol, 1e-30);
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAIL"));
}

#[test]
fn full_check_in_natural_units_passes() {
    let out = run(&RunConfig::new(Command::Check)).unwrap();
    let report = out.report.unwrap();
    assert_eq!(out.status, 0, "{}", report.summary());
    assert!(report.notes.iter().any(|n| n.contains("transport residual")));
    let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
    for expected in ["stationary-normalization", "marginal-x", "stationary-mean-energy", "node-line-invariance", "standing-transport-nonzero-limit"] {
        assert!(names.contains(&expected), "{expected}");
    }
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["frobnicate"],
        vec!["grid", "--ell", "0"],
        vec!["grid", "--t", "T/0"],
        vec!["check", "--suite", "nope"],
        vec!["eval", "--n", "65"],
        vec!["grid", "--C", "-1"],
    ] {
        let out = bin().args(&args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn nodes_command_prints_both_angle_sets() {
    let out = bin().args(["nodes", "--ell", "3"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let parse = |l: &str| -> Vec<f64> { l.split(',').skip(1).map(|s| s.parse().unwrap()).collect() };
    let nodes = parse(lines[0]);
    let anti = parse(lines[1]);
    assert_eq!(nodes.len(), 12);
    for (k, (a, b)) in nodes.iter().zip(&anti).enumerate() {
        let pi = std::f64::consts::PI;
        assert!((a - pi * k as f64 / 6.0).abs() < 1e-15);
        assert!((b - pi * (2 * k + 1) as f64 / 12.0).abs() < 1e-15);
    }
}

#[test]
fn eval_at_the_origin() {
    let out = bin().args(["eval", "--n", "1", "--t", "0,T/4"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<f64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|s| s.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 2);
    for r in rows {
        assert_eq!(r[3], -1.0 / std::f64::consts::PI);
        assert_eq!(r[4], r[3]);
    }
}

#[test]
fn evolve_reports_errors_and_writes_fields() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("evolved.csv");
    let out = bin()
        .args(["evolve", "--t", "T/2", "--n-rho", "8", "--n-phi", "128", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let err: f64 = text.lines().nth(1).unwrap().split(',').nth(2).unwrap().parse().unwrap();
    assert!(err > 0.0 && err < 0.05, "{err}");
    assert!(Path::new(&path).exists());
}

#[test]
fn figures_default_directory_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("figs");
    let status = bin()
        .args(["figures", "--n-rho", "4", "--n-phi", "8"])
        .env("PHASEWAVE_OUT_DIR", &target)
        .output()
        .unwrap()
        .status;
    assert!(status.success());
    assert_eq!(fs::read_dir(&target).unwrap().count(), 6);
}
