use std::path::Path;
use std::process::{Command, Output};

use bessel_rkbs::admissibility::{ConditionId, KernelInterval, Rational, Verdict};
use bessel_rkbs::experiments::{GrowthReport, IntegrabilityReport};
use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bessel-rkbs"));
    cmd.env_remove("BESSEL_RKBS_OUT_DIR");
    cmd
}

fn run(line: &str) -> Output {
    bin()
        .args(line.split_whitespace())
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn exit_code_matrix() {
    let matrix = [
        ("check-pair -d 1 -u 3 -p 2 -v 3 -q 2 -s 2", 0),
        ("check-pair -d 1 -u 3 -p 2 -v 3 -q 2 -s 3", 0),
        ("check-pair -d 1 -u 2 -p 1 -v 2 -q 1 -s 5/4", 0),
        ("check-pair -d 1 -u 2 -p 1 -v 2 -q 1 -s 6/5", 0),
        ("check-pair -d 1 -u 3 -p 1 -v 2 -q 2 -s 2", 0),
        ("check-pair -d 1 -u 2 -p 1 -v 2 -q 1 -s 3/2", 1),
        ("check-pair -d 1 -u 3 -p 2 -v 3 -q 2 -s 4", 1),
        ("check-pair -d 1 -u 3 -p 4 -v 3 -q 4 -s 2", 1),
        ("check-pair -d 2 -u 1 -p 2 -v 1 -q 2 -s 1", 1),
        ("check-pair -d 1 -u 3 -p 0.5 -v 3 -q 2 -s 2", 2),
        ("check-pair -d 1 -u 3 -p 1/2 -v 3 -q 2 -s 2", 2),
        ("check-pair -d 1 -u 3 -p 2 -v 3 -q 2 -s 2.5", 2),
        ("check-pair -d 1 -u x -p 2 -v 3 -q 2 -s 2", 2),
        ("check-pair -d 1 -u 3 -p 2 -v 3 -q 2 -s 1/0", 2),
        ("check-pair -d 1 -u 3 -p 2 -v 3 -q 2", 2),
        ("check-pair -d 0 -u 3 -p 2 -v 3 -q 2 -s 2", 2),
        ("kernel-interval -d 1 -u 3 -p 2 -v 3 -q 2", 0),
        ("kernel-interval -d 1 -u 2 -p 1 -v 2 -q 1", 0),
        ("kernel-interval -d 4 -u 1 -p 2 -v 1 -q 2", 1),
        ("kernel-interval -d 1 -u 3 -p 2 -v 3 -q 2 -s 2", 2),
        ("kernel-interval -d 1 -u 3 -p 0 -v 3 -q 2", 2),
        ("eval-kernel -d 1 -s 1 -r 1", 0),
        ("eval-kernel -d 2 -s 1 -r 0,0.5", 0),
        ("eval-kernel -d 1 -s 1 -r -1", 2),
        ("eval-kernel -d 1 -s 0 -r 1", 2),
        ("eval-kernel -d 1 -s 1", 2),
        ("verify blowup-dilation --d 1 --v 1 --s 1", 0),
        ("verify young --fields 5 --bogus", 2),
        ("verify nonsense", 2),
        ("--help", 0),
    ];
    assert_eq!(matrix.len(), 30);
    let mut mismatches = Vec::new();
    for (line, expected) in matrix {
        let got = run(line).status.code().unwrap();
        if got != expected {
            mismatches.push(format!("{}: expected {expected}, got {got}", line));
        }
    }
    assert!(mismatches.is_empty(), "{mismatches:#?}");
}

#[test]
fn check_pair_prints_condition_table() {
    let out = run("check-pair -d 1 -u 2 -p 1 -v 2 -q 1 -s 3/2");
    assert_eq!(out.status.code(), Some(1));
    let verdict: Verdict = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(!verdict.admissible);
    assert_eq!(verdict.conditions.len(), 4);
    let failing: Vec<ConditionId> = verdict.failing().map(|c| c.id).collect();
    assert_eq!(failing, vec![ConditionId::SumCondition]);

    let pretty = run("--pretty check-pair -d 1 -u 3 -p 2 -v 3 -q 2 -s 2");
    assert_eq!(pretty.status.code(), Some(0));
    let text = stdout(&pretty);
    for needle in ["dual-exponent", "u-window", "v-window", "sum-condition"] {
        assert!(text.contains(needle), "{text}");
    }
}

#[test]
fn malformed_rational_reports_message() {
    let out = run("check-pair -d 1 -u 3 -p 0.5 -v 3 -q 2 -s 2");
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn kernel_interval_examples() {
    let closed = run("--pretty kernel-interval -d 1 -u 3 -p 2 -v 3 -q 2");
    assert_eq!(stdout(&closed).trim(), "(7/4, 3]");
    let open = run("--pretty kernel-interval -d 1 -u 2 -p 1 -v 2 -q 1");
    assert_eq!(stdout(&open).trim(), "(1, 3/2)");

    let json = run("kernel-interval -d 1 -u 2 -p 1 -v 2 -q 1");
    let interval: KernelInterval = serde_json::from_str(&stdout(&json)).unwrap();
    assert!(interval.contains(&Rational::new(5, 4)));
    assert!(interval.contains(&Rational::new(6, 5)));
    assert!(!interval.contains(&Rational::new(3, 2)));

    let empty = run("kernel-interval -d 4 -u 1 -p 2 -v 1 -q 2");
    assert_eq!(empty.status.code(), Some(1));
    let interval: KernelInterval = serde_json::from_str(&stdout(&empty)).unwrap();
    assert!(interval.empty);
}

#[test]
fn json_round_trips() {
    let out = run("check-pair -d 2 -u 5/2 -p 3/2 -v 3 -q inf -s 2");
    let text = stdout(&out);
    let verdict: Verdict = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&verdict).unwrap(), text.trim());

    let out = run("kernel-interval -d 1 -u 3 -p 2 -v 3 -q 2");
    let text = stdout(&out);
    let interval: KernelInterval = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&interval).unwrap(), text.trim());

    let out = run("verify blowup-dilation --d 1 --v 1 --s 1");
    let text = stdout(&out);
    let report: GrowthReport = serde_json::from_str(&text).unwrap();
    assert!((report.fitted_slope - 1.0).abs() <= 0.1);
    assert_eq!(
        serde_json::to_value(&report).unwrap(),
        serde_json::from_str::<Value>(&text).unwrap()
    );

    let out = run("verify integrability --d 1 --s 1 --p 2");
    let text = stdout(&out);
    let report: IntegrabilityReport = serde_json::from_str(&text).unwrap();
    assert!(report.agrees);
    assert_eq!(
        serde_json::to_value(&report).unwrap(),
        serde_json::from_str::<Value>(&text).unwrap()
    );
}

fn kernel_values(line: &str) -> Value {
    let out = run(line);
    assert_eq!(out.status.code(), Some(0));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn eval_kernel_examples() {
    let v = kernel_values("eval-kernel -d 1 -s 1 -r 1");
    let value = v["values"][0]["value"].as_f64().unwrap();
    assert!((value - (-1f64).exp() / 2.0).abs() < 1e-12);
    assert!(format!("{value:.8}").starts_with("0.18393972"));

    let v = kernel_values("eval-kernel -d 1 -s 1 -r 0");
    assert!((v["values"][0]["value"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    assert_eq!(v["values"][0]["annotation"], "bounded");

    let v = kernel_values("eval-kernel -d 2 -s 1 -r 0");
    assert!(v["values"][0]["value"].is_null());
    let annotation = v["values"][0]["annotation"].as_str().unwrap();
    assert!(annotation.contains("singular") && annotation.contains("logarithmic"));

    let csv = run("--format csv eval-kernel -d 1 -s 1 -r 1,2");
    let text = stdout(&csv);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,value,annotation"));
    assert_eq!(lines.count(), 2);
}

#[test]
fn eval_kernel_grid_section() {
    let section = |method: &str| {
        let out = run(&format!(
            "eval-kernel -d 1 -s 1 --grid-n 64 --grid-L 16 --method {method}"
        ));
        assert_eq!(out.status.code(), Some(0));
        bessel_rkbs::spectral::io::read_csv(&out.stdout[..]).unwrap()
    };
    let radial = section("radial");
    assert_eq!(radial.grid().n(), 64);
    let origin = radial.grid().origin();
    assert!((radial.values()[origin] - 0.5).abs() < 1e-12);
    let spectral = section("spectral");
    assert!(spectral.values()[origin] < 0.5);
    assert!((spectral.values()[origin] - 0.5).abs() < 0.05);
}

#[test]
fn verify_reproducing_reference() {
    let out = run("verify reproducing --d 1 --s 1 --L 84 --n 4096");
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["passed"], true);
}

fn files(dir: &Path) -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    names
}

#[test]
fn output_directory_from_flag_and_environment() {
    let flag_dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["--out", flag_dir.path().to_str().unwrap()])
        .args([
            "verify",
            "blowup-dilation",
            "--d",
            "1",
            "--v",
            "1",
            "--s",
            "1",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        files(flag_dir.path()),
        vec![
            "blowup-dilation-observations.csv",
            "blowup-dilation.json",
            "verify-blowup-dilation.json",
        ]
    );
    let csv =
        std::fs::read_to_string(flag_dir.path().join("blowup-dilation-observations.csv")).unwrap();
    assert!(csv.starts_with("scale,norm"));

    let env_dir = tempfile::tempdir().unwrap();
    let out = bin()
        .env("BESSEL_RKBS_OUT_DIR", env_dir.path())
        .args([
            "kernel-interval",
            "-d",
            "1",
            "-u",
            "3",
            "-p",
            "2",
            "-v",
            "3",
            "-q",
            "2",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let saved = std::fs::read_to_string(env_dir.path().join("kernel-interval.json")).unwrap();
    assert_eq!(saved, stdout(&out));
}

#[test]
fn verify_all_is_deterministic() {
    let first = run("verify all --seed 7");
    let second = run("verify all --seed 7");
    assert_eq!(first.stdout, second.stdout);
    let report: Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(report["seed"], 7);
    let suites = report["suites"].as_object().unwrap();
    assert_eq!(suites.len(), 7);
    let names: Vec<&String> = suites.keys().collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(
        report["passed"].as_bool().unwrap(),
        suites.values().all(|s| s["passed"] == true)
    );
}
