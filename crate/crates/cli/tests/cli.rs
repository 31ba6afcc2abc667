use core::f64::consts::{FRAC_PI_4, PI};
use std::process::Command as Process;

use nkcp3::output::{to_csv, to_json, to_text};
use nkcp3::{exit_code, run, Command, ConfigError, Report, RunConfig};

fn small() -> RunConfig {
    RunConfig { seed: 3, samples: 4, a_list: vec![2.0], ..RunConfig::default() }
}

#[test]
fn json_round_trips() {
    for command in [Command::Verify, Command::Family, Command::Obstructions] {
        let reports = run(command, &small()).unwrap();
        let text = to_json(&reports).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, reports[0]);
        assert!(back.pass, "{:?}", back.failures().collect::<Vec<_>>());
    }
    let all = run(Command::Report, &small()).unwrap();
    let back: Vec<Report> = serde_json::from_str(&to_json(&all).unwrap()).unwrap();
    assert_eq!(back, all);
}

#[test]
fn family_rows_match_examples() {
    let cfg = RunConfig { t_list: vec![FRAC_PI_4, PI / 6.0], a_list: vec![1.0, 2.0], ..small() };
    let rep = &run(Command::Family, &cfg).unwrap()[0];
    assert_eq!(rep.rows.len(), 4);
    let minimal = rep.rows.iter().find(|r| r.t == FRAC_PI_4 && r.a == 2.0).unwrap();
    assert!(minimal.lambda_closed.abs() < 1e-15 && minimal.lambda_numeric.abs() < 1e-9);
    assert!(minimal.mean_curvature.abs() < 1e-15 && minimal.trace_numeric.abs() < 1e-9);
    assert!(minimal.twistor_height.abs() < 1e-15);
    assert!(minimal.mirror_residual.is_none());
    let fs = rep.rows.iter().find(|r| r.t == PI / 6.0 && r.a == 1.0).unwrap();
    let r3 = 3f64.sqrt();
    let want = [-1.0 / r3, -1.0 / r3, 2.0 / r3, r3, r3];
    for (g, w) in fs.principal_numeric.iter().zip(want) {
        assert!((g - w).abs() < 1e-8);
    }
    let csv = to_csv(core::slice::from_ref(rep)).unwrap();
    assert_eq!(csv.lines().count(), 1 + 4);
}

#[test]
fn out_of_range_t_is_a_row_error() {
    let cfg = RunConfig { t_list: vec![0.5, 2.0], ..small() };
    let rep = &run(Command::Family, &cfg).unwrap()[0];
    assert_eq!(rep.rows.len(), 2);
    assert!(rep.rows[0].error.is_none());
    assert!(rep.rows[1].error.is_some());
    assert!(!rep.pass);
    assert_eq!(rep.errors.len(), 1);
}

#[test]
fn coarse_step_fails_second_order_checks() {
    let cfg = RunConfig { fd_step: 0.1, samples: 2, ..small() };
    let reports = run(Command::Verify, &cfg).unwrap();
    assert_eq!(exit_code(&reports), 1);
    assert!(reports[0].failures().any(|c| c.name.ends_with("nabla_g")));
    assert!(to_text(&reports).contains("FAIL"));
}

#[test]
fn seed_changes_values_not_verdict() {
    let a = run(Command::Verify, &small()).unwrap();
    let b = run(Command::Verify, &RunConfig { seed: 4, ..small() }).unwrap();
    assert!(a[0].pass && b[0].pass);
    assert_ne!(a[0].checks, b[0].checks);
}

#[test]
fn invalid_config_is_rejected() {
    let cfg = RunConfig { tol_first_order: 1e-2, ..small() };
    assert!(matches!(run(Command::Verify, &cfg), Err(ConfigError::Tolerances(..))));
}

#[test]
fn csv_numbers_have_seventeen_digits() {
    let reports = run(Command::Obstructions, &small()).unwrap();
    let csv = to_csv(&reports).unwrap();
    let line = csv.lines().nth(1).unwrap();
    let value = line.split(',').nth(2).unwrap();
    let mantissa = value.split('e').next().unwrap().replace(['.', '-'], "");
    assert_eq!(mantissa.len(), 17, "{value}");
}

fn binary(args: &[&str]) -> std::process::Output {
    Process::new(env!("CARGO_BIN_EXE_nkcp3")).args(args).output().unwrap()
}

#[test]
fn exit_statuses() {
    assert_eq!(binary(&["obstructions", "--samples", "3"]).status.code(), Some(0));
    assert_eq!(binary(&["verify", "--samples", "2", "--a", "2", "--step", "0.1"]).status.code(), Some(1));
    assert_eq!(binary(&["verify", "--tol-second", "1e-9"]).status.code(), Some(2));
    assert_eq!(binary(&["verify", "--a", "-1"]).status.code(), Some(2));
    assert_eq!(binary(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn writes_requested_format_to_file() {
    let path = std::env::temp_dir().join(format!("nkcp3-{}.csv", std::process::id()));
    let out = binary(&["family", "--t", "0.4,0.9", "--a", "1,2,3", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(text.lines().count(), 1 + 6);
}
