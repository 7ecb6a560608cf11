//! End-to-end checks of the installed binary: exit codes, JSON byte
//! stability, and the pretty renderer, all through real subprocesses.

use std::process::{Command, Output};
use tripow::report::{Outputs, Report};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tripow"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout should be UTF-8")
}

#[test]
fn spectrum_json_round_trips_byte_identically() {
    let out = run(&[
        "spectrum", "--family", "A", "--n", "3", "--a", "1", "--b", "3", "--output", "json",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout_str(&out);
    let line = text.trim_end();
    let report: Report = serde_json::from_str(line).unwrap();
    assert_eq!(serde_json::to_string(&report).unwrap(), line);
    let Outputs::Spectrum(s) = &report.outputs else { panic!("spectrum outputs expected") };
    let mut values: Vec<f64> = s.eigenvalues.iter().map(|z| z.re.0).collect();
    values.sort_by(|p, q| p.partial_cmp(q).unwrap());
    assert_eq!(values, vec![-5.0, 1.0, 7.0]);
}

#[test]
fn power_json_reports_fixture_and_notes() {
    let out = run(&[
        "power", "--family", "A", "--n", "3", "--a", "1", "--b", "3", "--r", "3", "--output",
        "json",
    ]);
    assert!(out.status.success());
    let report: Report = serde_json::from_str(stdout_str(&out).trim_end()).unwrap();
    let Outputs::Power(p) = &report.outputs else { panic!("power outputs expected") };
    assert_eq!(p.method, "closed_form");
    assert_eq!(p.matrix[1][1].re.0, 109.0);
    assert!(report.errata_notes.iter().any(|n| n.contains("1/4 prefactor")));
    assert!(report.residuals.contains_key("cross_check_max_abs"));
}

#[test]
fn even_order_power_uses_oracle_lane() {
    let out = run(&[
        "power", "--family", "A", "--n", "4", "--a", "1", "--b", "3", "--r", "2", "--output",
        "json",
    ]);
    assert!(out.status.success());
    let report: Report = serde_json::from_str(stdout_str(&out).trim_end()).unwrap();
    let Outputs::Power(p) = &report.outputs else { panic!("power outputs expected") };
    assert_eq!(p.method, "oracle");
    assert!(report.errata_notes.is_empty());
}

#[test]
fn purely_imaginary_b_parses_and_factors() {
    let out = run(&[
        "det", "--family", "a-dagger", "--n", "6", "--a", "1", "--b", "0,1", "--output", "json",
    ]);
    assert!(out.status.success());
    let report: Report = serde_json::from_str(stdout_str(&out).trim_end()).unwrap();
    assert!(report.residuals["lane_rel_diff"].0 <= 1e-10);
}

#[test]
fn factor_fib_reports_exact_value() {
    let out = run(&["factor", "--sequence", "fib", "--n", "3", "--output", "json"]);
    assert!(out.status.success());
    let report: Report = serde_json::from_str(stdout_str(&out).trim_end()).unwrap();
    let Outputs::Factor(f) = &report.outputs else { panic!("factor outputs expected") };
    assert_eq!(f.exact.as_deref(), Some("2"));
    assert!(report.residuals["rel_residual"].0 <= 1e-12);
    assert!(report.residuals["imag_leak"].0 <= 1e-12);
}

#[test]
fn pretty_mode_is_default_and_human_readable() {
    let out = run(&["spectrum", "--family", "A", "--n", "3", "--a", "1", "--b", "3"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("command: spectrum"));
    assert!(text.contains("lambda[1]"));
    assert!(text.contains("residual max_eigen_residual"));
}

#[test]
fn precondition_violations_exit_two() {
    // Family A spectra need n >= 3.
    let out = run(&["spectrum", "--family", "A", "--n", "2", "--a", "1", "--b", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    // b must be nonzero.
    let out = run(&["spectrum", "--family", "A", "--n", "3", "--a", "1", "--b", "0"]);
    assert_eq!(out.status.code(), Some(2));

    // Zero eigenvalue makes a negative power singular.
    let out = run(&[
        "power", "--family", "A", "--n", "3", "--a", "0", "--b", "0,1", "--r", "-1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("singular"));

    // Powers are defined for family A only.
    let out = run(&[
        "power", "--family", "a-dagger", "--n", "3", "--a", "1", "--b", "1", "--r", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["factor", "--sequence", "fibpoly", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["spectrum", "--family", "B", "--n", "3", "--a", "1", "--b", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["spectrum", "--family", "A", "--n", "3", "--a", "nope", "--b", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_and_echoes_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_tripow"))
        .args(["verify", "--output", "json"])
        .env("VERIFY_MAX_N", "13")
        .output()
        .expect("binary should spawn");
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report: Report = serde_json::from_str(stdout_str(&out).trim_end()).unwrap();
    let Outputs::Verify(v) = &report.outputs else { panic!("verify outputs expected") };
    assert_eq!(v.failed, 0);
    assert_eq!(v.total, v.properties.len() as u64);
    assert!(v.properties.iter().all(|p| p.passed));
    assert_eq!(report.inputs.max_n, Some(13));
}
