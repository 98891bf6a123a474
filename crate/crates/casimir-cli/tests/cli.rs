//! End-to-end checks of the binary: exit codes, error messages, config
//! handling, and output determinism.

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(args)
        .output()
        .unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn compute_csv_header() {
    let out = run(&["compute", "--model", "dirichlet", "--mu", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("model,mu,e,err\n"));
}

#[test]
fn negative_mu_is_usage_error() {
    let out = run(&["compute", "--model", "mit", "--mu", "-1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("mu must be >= 0"));
}

#[test]
fn unknown_model_lists_catalog() {
    let out = run(&["compute", "--model", "bogus", "--mu", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("unknown model 'bogus'"));
    assert!(err.contains("mit") && err.contains("antiperiodic"));
}

#[test]
fn nonpositive_scan_step_is_usage_error() {
    let out = run(&["scan", "--model", "dirichlet", "--mu-range", "0:1:0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("step must be > 0"));
}

#[test]
fn oracle_rejected_for_z_dependent_kernel() {
    let out = run(&["scan", "--model", "mit", "--mu-range", "0:1:0.5", "--oracle"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--oracle"));
}

#[test]
fn unknown_suite_is_usage_error() {
    let out = run(&["check", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown suite"));
}

#[test]
fn scan_row_count_is_inclusive() {
    let out = run(&["scan", "--model", "dirichlet", "--mu-range", "0:2:0.1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    // header + 21 rows
    assert_eq!(text.lines().count(), 22);
    assert!(text.starts_with("mu,e,err,oracle_e,oracle_dev\n"));
}

#[test]
fn scan_oracle_columns_filled() {
    let out = run(&["scan", "--model", "neumann", "--mu-range", "0:1:1", "--oracle"]);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout(&out).lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 5);
        assert!(!fields[3].is_empty() && !fields[4].is_empty());
    }
}

#[test]
fn scan_json_has_metadata_and_rows() {
    let out = run(&["scan", "--model", "dirichlet", "--mu-range", "0:1:1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("{\"metadata\":"));
    assert!(text.contains("\"rows\":["));
    assert!(text.contains("\"constants\":"));
    assert!(text.contains("\"oracle_e\":null"));
}

#[test]
fn config_file_sets_defaults_flags_override() {
    let dir = std::env::temp_dir().join("casimir-cli-config-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("manifest.conf");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# manifest\nmodel = dirichlet\nmu = 1.0").unwrap();

    let from_cfg = run(&["compute", "--config", path.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(from_cfg.status.code(), Some(0));
    assert!(stdout(&from_cfg).contains("dirichlet,1.00000000000e0"));

    // an explicit flag wins over the file value
    let overridden = run(&[
        "compute",
        "--config",
        path.to_str().unwrap(),
        "--mu",
        "2",
        "--format",
        "csv",
    ]);
    assert!(stdout(&overridden).contains("dirichlet,2.00000000000e0"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["scan", "--model", "mit", "--mu-range", "0:1:0.25"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn roots_table_shape() {
    let out = run(&["roots", "--model", "mit", "--mu", "1", "--cutoff", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "index,bracket_lo,bracket_hi,root,residual");
    // three roots below 10 for mu = 1
    assert_eq!(lines.count(), 3);
    assert!(text.contains("2.02875783811e0"));
}

#[test]
fn check_all_passes() {
    let out = run(&["check", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().all(|l| !l.starts_with("FAIL")));
    assert!(text.contains("checks passed"));
}

#[test]
fn physical_output_for_em_plates() {
    let out = run(&[
        "compute", "--model", "em", "--mu", "0", "--physical", "--length", "1e-6", "--area",
        "1e-4", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"energy_joules\":"));
    // -pi^2/720 * hbar c * A / l^3 ~ -4.3e-14 J for these dimensions
    assert!(text.contains("-4.333") && text.contains("e-14"));
}
