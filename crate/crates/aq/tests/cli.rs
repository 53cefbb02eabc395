//! End-to-end tests of the `aq` binary: exit codes, output formats,
//! determinism, and the reproducibility acceptance criterion.

use std::process::{Command, Output};
use std::time::Instant;

fn aq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn criterion_10_verify_is_reproducible_and_fast() {
    let start = Instant::now();
    let output = aq(&["verify", "--seed", "42", "--trials", "1000"]);
    let elapsed = start.elapsed().as_secs_f64();
    let text = stdout(&output);
    let ok = output.status.code() == Some(0) && elapsed < 10.0 && !text.contains("FAIL");
    println!(
        "criterion 10 (CLI reproducibility): {}  exit {:?}, {elapsed:.2}s",
        if ok { "PASS" } else { "FAIL" },
        output.status.code()
    );
    assert!(ok, "verify output:\n{text}");

    // same seed, same bytes
    let again = aq(&["verify", "--seed", "42", "--trials", "1000"]);
    assert_eq!(output.stdout, again.stdout);
}

#[test]
fn grid_output_is_byte_deterministic() {
    let args = ["entropy-grid", "--nx", "40", "--ny", "40"];
    let a = aq(&args);
    let b = aq(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let args = ["concurrence-grid", "--nx", "40", "--ny", "40", "--seed", "7"];
    let a = aq(&args);
    let b = aq(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn entropy_grid_values_parse_back() {
    // nx = 7 on [-1, 2] puts a sample exactly at the mirror line x = 0.5
    let output = aq(&["entropy-grid", "--nx", "7", "--ny", "3"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,y,r,entropy"));
    let mut saw_mirror = false;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 4);
        let x: f64 = fields[0].parse().unwrap();
        let y: f64 = fields[1].parse().unwrap();
        let entropy: f64 = fields[3].parse().unwrap();
        if x == 0.5 && y == 0.0 {
            saw_mirror = true;
            assert_eq!(entropy, 1.0);
        }
        assert!((0.0..=1.0).contains(&entropy));
    }
    assert!(saw_mirror);
}

#[test]
fn entropy_grid_encodes_infinite_ratio_as_string() {
    // x = 1, y = 0 is a focus: r is the string "inf", entropy 0
    let output = aq(&["entropy-grid", "--nx", "4", "--ny", "3"]);
    let text = stdout(&output);
    assert!(text.lines().any(|l| l == "1,0,inf,0"), "output:\n{text}");
    assert!(!text.to_lowercase().contains("nan"));
}

#[test]
fn concurrence_grid_matches_closed_form() {
    let output = aq(&["concurrence-grid", "--nx", "4", "--ny", "3"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    // z = 2: C = 0.8
    assert!(text.lines().any(|l| l == "2,0,2,0.8"), "output:\n{text}");
}

#[test]
fn json_output_parses() {
    let output = aq(&["entropy-grid", "--nx", "3", "--ny", "2", "--format", "json"]);
    assert_eq!(output.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    for row in rows {
        assert!(row.get("x").is_some() && row.get("entropy").is_some());
    }
}

#[test]
fn circles_trace_keeps_the_ratio() {
    let output = aq(&["circles", "--ratios", "2", "--samples", "16"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    let mut count = 0;
    for line in text.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let x: f64 = fields[2].parse().unwrap();
        let y: f64 = fields[3].parse().unwrap();
        let r = (x * x + y * y).sqrt() / (((x - 1.0) * (x - 1.0) + y * y).sqrt());
        assert!((r - 2.0).abs() < 1e-10, "off-circle point ({x}, {y})");
        count += 1;
    }
    assert_eq!(count, 16);
}

#[test]
fn circles_handles_line_and_point_cases() {
    let output = aq(&["circles", "--ratios", "0,1", "--samples", "4"]);
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "r,k,x,y");
    assert_eq!(lines[1], "0,0,0,0");
    // r = 1 rows all sit on Re z = 1/2
    for line in &lines[2..] {
        assert_eq!(line.split(',').nth(2), Some("0.5"));
    }
    assert_eq!(lines.len(), 2 + 4);
}

#[test]
fn negative_ratio_is_a_usage_error() {
    let output = aq(&["circles", "--ratios", "-1"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn bad_grid_bounds_are_a_usage_error() {
    let output = aq(&["entropy-grid", "--xmin", "5", "--xmax", "1"]);
    assert_eq!(output.status.code(), Some(1));
    let output = aq(&["entropy-grid", "--nx", "1"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let output = aq(&["entropy-grid", "--bogus"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn unwritable_output_path_is_an_io_error() {
    let output = aq(&["entropy-grid", "--nx", "3", "--ny", "2", "--out", "/nonexistent/dir/out.csv"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn nls_check_passes_and_perturbation_fails() {
    let output = aq(&["nls-check"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("PASS"));

    let output = aq(&["nls-check", "--perturb", "1.1"]);
    assert_eq!(output.status.code(), Some(3));
    assert!(stdout(&output).contains("FAIL"));

    let output = aq(&["nls-check", "--h", "0"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn nls_residual_grows_quadratically_with_h() {
    let fine = aq(&["nls-check", "--h", "1e-3"]);
    let coarse = aq(&["nls-check", "--h", "1e-2"]);
    let max = |o: &Output| -> f64 {
        stdout(o)
            .split("max |residual| = ")
            .nth(1)
            .unwrap()
            .split_whitespace()
            .next()
            .unwrap()
            .parse()
            .unwrap()
    };
    let factor = max(&coarse) / max(&fine);
    assert!((50.0..200.0).contains(&factor), "O(h^2) factor {factor}");
}

#[test]
fn decompose_reports_the_worked_example() {
    let output = aq(&["decompose", "--", "-0.3162", "0", "-0.5", "0", "0.5", "0", "-0.6325", "0"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    let value = |key: &str| -> f64 {
        text.lines()
            .find(|l| l.starts_with(key))
            .unwrap_or_else(|| panic!("missing {key} in:\n{text}"))
            .split('=')
            .nth(1)
            .unwrap()
            .split_whitespace()
            .next()
            .unwrap()
            .parse()
            .unwrap()
    };
    assert!((value("eta") - 2.0).abs() < 1e-3);
    assert!((value("zeta") - 0.5).abs() < 1e-3);
    assert!((value("xi") - 0.5).abs() < 1e-3);
    for key in [
        "concurrence (parametric)",
        "concurrence (determinant)",
        "concurrence (reflection)",
    ] {
        assert!((value(key) - 0.9).abs() < 1e-3);
    }
}

#[test]
fn decompose_handles_basis_and_bell_states() {
    let output = aq(&["decompose", "--", "1", "0", "0", "0", "0", "0", "0", "0"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("xi            = 0 + 0i"), "output:\n{text}");
    assert!(text.contains("concurrence (determinant) = 0"));

    let h = std::f64::consts::FRAC_1_SQRT_2.to_string();
    let output = aq(&["decompose", "--", &h, "0", "0", "0", "0", "0", &h, "0"]);
    let text = stdout(&output);
    assert!(text.contains("eta           = inf"), "output:\n{text}");
    assert!(text.contains("concurrence (determinant) = 1"));
}

#[test]
fn decompose_rejects_the_zero_vector() {
    let output = aq(&["decompose", "0", "0", "0", "0", "0", "0", "0", "0"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn injected_fault_fails_verification() {
    let output = aq(&["verify", "--trials", "10", "--inject-fault"]);
    assert_eq!(output.status.code(), Some(3));
    assert!(stdout(&output).contains("FAIL"));
}

#[test]
fn verify_smoke_single_trial() {
    let output = aq(&["verify", "--trials", "1"]);
    assert_eq!(output.status.code(), Some(0));
}
