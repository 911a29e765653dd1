use std::path::Path;
use std::process::{Command, Output};

use oew_cli::state_file::to_json;
use oew_core::linalg::{DensityMatrix, StateVector};
use oew_core::{ComplexMatrix, C64};

fn oew(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oew"))
        .args(args)
        .output()
        .unwrap()
}

fn write_state(dir: &Path, name: &str, d1: usize, d2: usize, m: &ComplexMatrix) -> String {
    let path = dir.join(name);
    std::fs::write(&path, to_json(d1, d2, m)).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn bell_state_is_certified() {
    let dir = tempfile::tempdir().unwrap();
    let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let z = C64::new(0.0, 0.0);
    let bell = StateVector::new(2, 2, vec![h, z, z, h])
        .unwrap()
        .projector();
    let path = write_state(dir.path(), "bell.json", 2, 2, &bell);
    let out = oew(&["bound", &path]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("best = 0.5\n"), "{text}");
    assert!(text.contains("bound_thm2 = 0.5\n"));
    assert!(text.contains("verdict = entangled\n"));
}

#[test]
fn maximally_mixed_is_inconclusive() {
    let dir = tempfile::tempdir().unwrap();
    let rho = DensityMatrix::maximally_mixed(2, 2).unwrap();
    let path = write_state(dir.path(), "mixed.json", 2, 2, rho.matrix());
    let out = oew(&["bound", &path]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("bound_thm2 = n/a\n"));
    assert!(stdout(&out).contains("verdict = inconclusive\n"));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let short = ComplexMatrix::identity(4, 4).scale(0.9 / 4.0);
    let path = write_state(dir.path(), "short.json", 2, 2, &short);
    let out = oew(&["bound", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("trace"), "{}", stderr(&out));
    assert!(out.stdout.is_empty());

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"d1": 2, "d2": "two", "matrix": []}"#).unwrap();
    let out = oew(&["bound", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("d2"), "{}", stderr(&out));

    let missing = dir.path().join("absent.json");
    assert_eq!(
        oew(&["bound", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn sweep_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = oew(&[
            "sweep",
            "--family",
            "mixed3x3",
            "--x",
            "0.1",
            "--a-min",
            "0",
            "--a-max",
            "2",
            "--steps",
            "51",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        std::fs::read(path).unwrap()
    };
    let first = run("one.csv");
    assert_eq!(first, run("two.csv"));
    let text = String::from_utf8(first).unwrap();
    assert_eq!(text.lines().count(), 52);
    assert!(text.starts_with("a,bound_thm2,bound_thm4,bound_thm5\n"));
}

#[test]
fn sweep_rejects_bad_arguments() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.csv");
    let out = out.to_str().unwrap();
    for args in [
        vec!["sweep", "--family", "mixed5x5", "--x", "0.1", "--out", out],
        vec!["sweep", "--family", "mixed2x2", "--out", out],
        vec!["sweep", "--family", "pure2x2", "--x", "0.1", "--out", out],
        vec![
            "sweep", "--family", "pure2x2", "--a-min", "2", "--a-max", "1", "--out", out,
        ],
        vec!["sweep", "--family", "pure2x2", "--steps", "1", "--out", out],
        vec![
            "sweep",
            "--family",
            "pure2x2",
            "--out",
            "/nonexistent-dir/x.csv",
        ],
    ] {
        let result = oew(&args);
        assert_eq!(result.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&result).is_empty());
    }
}

#[test]
fn selftest_is_deterministic() {
    let a = oew(&["selftest", "--seed", "3", "--samples", "5"]);
    let b = oew(&["selftest", "--seed", "3", "--samples", "5"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
    let one = oew(&["selftest", "--samples", "1"]);
    assert!(stdout(&one).contains("suites passed"));
    assert_eq!(oew(&["selftest", "--samples", "0"]).status.code(), Some(2));
}
