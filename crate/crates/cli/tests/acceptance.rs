//! Acceptance criteria. Each criterion prints one `criterion N: PASS|FAIL`
//! line; the process exits non-zero if any fails.

use std::f64::consts::FRAC_1_SQRT_2;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use oew_cli::sweep::{sweep_to_file, Family, SweepConfig};
use oew_core::bounds::*;
use oew_core::linalg::{DensityMatrix, StateVector};
use oew_core::states::*;
use oew_core::C64;

const SEED: u64 = 20_240_917;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// Runs `body`, optionally against a wall-clock budget, and prints the
/// verdict line.
fn criterion(label: &str, budget: Option<Duration>, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let pass = result.pass && budget.is_none_or(|b| elapsed <= b);
    let limit = budget
        .map(|b| format!(" (limit {} s)", b.as_secs()))
        .unwrap_or_default();
    println!(
        "criterion {label}: {}  {}; {:.3} s{limit}",
        if pass { "PASS" } else { "FAIL" },
        result.detail,
        elapsed.as_secs_f64(),
    );
    pass
}

/// Sweep through the CSV writer and read the file back.
fn sweep_columns(dir: &Path, family: Family, x: Option<f64>) -> Vec<[Option<f64>; 4]> {
    let path = dir.join(format!("{family}-{}.csv", x.unwrap_or(0.0)));
    let config = SweepConfig {
        family,
        x,
        a_min: 0.0,
        a_max: 2.0,
        steps: 201,
    };
    sweep_to_file(&config, &path).unwrap();
    let mut reader = csv::Reader::from_path(&path).unwrap();
    reader
        .records()
        .map(|rec| {
            let rec = rec.unwrap();
            let cell = |k: usize| (!rec[k].is_empty()).then(|| rec[k].parse::<f64>().unwrap());
            [cell(0), cell(1), cell(2), cell(3)]
        })
        .collect()
}

fn bell_certificate() -> Outcome {
    let h = C64::new(FRAC_1_SQRT_2, 0.0);
    let z = C64::new(0.0, 0.0);
    let bell = StateVector::new(2, 2, vec![h, z, z, h]).unwrap();
    let report = evaluate(&bell.to_density());
    let expected_mixed = 1.0 / (4.0 * 3f64.sqrt());
    let devs = [
        (report.bound_pure.unwrap_or(f64::NAN) - 0.5).abs(),
        (report.bound_qubit.unwrap_or(f64::NAN) - 0.5).abs(),
        (report.bound_mixed - expected_mixed).abs(),
    ];
    let worst = devs.iter().cloned().fold(0.0, f64::max);
    outcome(
        devs.iter().all(|d| *d <= 1e-10),
        format!("bell state: max deviation {worst:.2e} (tol 1e-10)"),
    )
}

fn pure_2x2_sweep(dir: &Path) -> Outcome {
    let rows = sweep_columns(dir, Family::Pure2x2, None);
    let mut worst_closed: f64 = 0.0;
    let mut worst_pair: f64 = 0.0;
    let mut complete = rows.len() == 201;
    for [a, thm2, _, thm5] in &rows {
        let (Some(a), Some(thm2), Some(thm5)) = (a, thm2, thm5) else {
            complete = false;
            continue;
        };
        let closed = 2f64.sqrt() * a / (2.0 * a * a + 1.0);
        worst_closed = worst_closed.max((thm2 - closed).abs());
        worst_pair = worst_pair.max((thm2 - thm5).abs());
    }
    outcome(
        complete && worst_closed <= 1e-9 && worst_pair <= 1e-9,
        format!(
            "pure2x2 sweep, {} rows: |thm2 - closed form| <= {worst_closed:.2e}, |thm2 - thm5| <= {worst_pair:.2e} (tol 1e-9)",
            rows.len()
        ),
    )
}

fn mixed_2x2_orderings(dir: &Path) -> Outcome {
    let noisy = sweep_columns(dir, Family::Mixed2x2, Some(0.1));
    let clean = sweep_columns(dir, Family::Mixed2x2, Some(0.01));
    let mut violations = 0;
    for rows in [&noisy, &clean] {
        for [_, _, thm4, thm5] in rows.iter() {
            if thm5.unwrap() < thm4.unwrap() - 1e-12 {
                violations += 1;
            }
        }
    }
    for (n, c) in noisy.iter().zip(&clean) {
        for col in [2, 3] {
            if c[col].unwrap() < n[col].unwrap() - 1e-12 {
                violations += 1;
            }
        }
    }
    outcome(
        violations == 0 && noisy.len() == 201 && clean.len() == 201,
        format!("mixed2x2 at x = 0.1 and 0.01: {violations} ordering violations (tol 1e-12)"),
    )
}

fn spot_values() -> Outcome {
    let rho = isotropic_mix(0.1, &pure_family_2x2(FRAC_1_SQRT_2).unwrap()).unwrap();
    let thm4 = bound_mixed(&rho);
    let thm5 = bound_qubit(&rho).unwrap();
    // R = 0.9 diag(1, -1, 1): ‖R‖_KF = 2.7 at rank 3.
    let expected4 = 2.0 * (2.7 - 1.0) / (16.0 * 3f64.sqrt());
    outcome(
        (thm4 - expected4).abs() <= 1e-6
            && (thm4 - 0.122687).abs() <= 1e-6
            && (thm5 - 0.425).abs() <= 1e-10,
        format!("a = 1/sqrt2, x = 0.1: thm4 = {thm4:.9}, thm5 = {thm5:.12}"),
    )
}

fn soundness(d1: usize, d2: usize, count: usize) -> Outcome {
    let mut worst = f64::NEG_INFINITY;
    let mut failures = 0;
    for i in 0..count {
        let k = 1 + i % 4;
        let sigma = random_separable_mixed(d1, d2, k, derive_seed(SEED, i as u64)).unwrap();
        let report = evaluate(&sigma);
        let raw = [
            report.bound_pure,
            Some(report.bound_mixed),
            report.bound_qubit,
        ]
        .into_iter()
        .flatten()
        .fold(f64::NEG_INFINITY, f64::max);
        worst = worst.max(raw);
        if raw > 1e-8 || report.entangled {
            failures += 1;
        }
    }
    outcome(
        failures == 0,
        format!("{count} separable {d1}x{d2} mixtures (k <= 4): {failures} certified, max raw bound {worst:.3e} (tol 1e-8)"),
    )
}

fn variational_opts(seed: u64) -> VariationalOptions {
    VariationalOptions {
        restarts: 20,
        seed,
        ..VariationalOptions::default()
    }
}

fn oracle_rank_one() -> Outcome {
    let mut worst: f64 = 0.0;
    for d in [2, 3] {
        for i in 0..100 {
            let seed = derive_seed(SEED ^ d as u64, i);
            let psi = random_pure(d, d, seed).unwrap();
            let v = alpha_variational(&psi.projector(), d, d, &variational_opts(seed)).unwrap();
            worst = worst.max((v - alpha_rank_one(&psi)).abs());
        }
    }
    outcome(
        worst <= 1e-8,
        format!("100 rank-one L in each of 2x2, 3x3: max |variational - closed form| {worst:.2e} (tol 1e-8)"),
    )
}

fn oracle_correlation(d: usize) -> Outcome {
    let mut worst: f64 = 0.0;
    let mut mismatches = 0;
    for i in 0..100 {
        let seed = derive_seed(SEED.rotate_left(d as u32), i);
        let l = random_correlation_operator(d, d, seed).unwrap();
        let v = alpha_variational(&l, d, d, &variational_opts(seed)).unwrap();
        let gap = (v - alpha_correlation(&l, d, d).unwrap()).abs();
        worst = worst.max(gap);
        if gap > 1e-8 {
            mismatches += 1;
        }
    }
    outcome(
        worst <= 1e-8,
        format!("100 correlation-only L in {d}x{d}: {mismatches} mismatches, max gap {worst:.2e} (tol 1e-8)"),
    )
}

fn constructive_consistency() -> Outcome {
    let dims = [(2, 2), (2, 3), (3, 3)];
    let mut worst = [0.0f64; 3];
    let mut invalid = 0;
    for i in 0..200u64 {
        let (d1, d2) = dims[i as usize % 3];
        let seed = derive_seed(SEED, i);
        let psi = random_pure(d1, d2, seed).unwrap();
        let rho = random_density(d1, d2, seed).unwrap();
        let qubit = random_density(2, 2, seed).unwrap();
        let cases = [
            (
                construct_l_pure(&psi).unwrap(),
                psi.to_density(),
                bound_pure(&psi),
            ),
            (
                construct_l_mixed(&rho).unwrap(),
                rho.clone(),
                bound_mixed(&rho),
            ),
            (
                construct_l_qubit(&qubit).unwrap(),
                qubit.clone(),
                bound_qubit(&qubit).unwrap(),
            ),
        ];
        for (slot, (w, state, bound)) in cases.iter().enumerate() {
            if check_unit_trace_psd(w.l(), w.d1(), w.d2()).is_err() {
                invalid += 1;
            }
            let gap = (witness_expectation(w, state).unwrap() - bound).abs();
            worst[slot] = worst[slot].max(gap);
        }
    }
    outcome(
        invalid == 0 && worst.iter().all(|g| *g <= 1e-10),
        format!(
            "200 states per regime: max gaps pure {:.1e}, mixed {:.1e}, qubit {:.1e} (tol 1e-10); {invalid} L outside M1",
            worst[0], worst[1], worst[2]
        ),
    )
}

fn local_unitary_invariance() -> Outcome {
    let mut worst: f64 = 0.0;
    for (d1, d2) in [(2, 2), (3, 3)] {
        for i in 0..200u64 {
            let seed = derive_seed(SEED ^ (1u64 << 40), i);
            let rho = random_density(d1, d2, seed).unwrap();
            let base_mixed = bound_mixed(&rho);
            let base_qubit = bound_qubit(&rho).ok();
            for j in 0..10 {
                let (u1, u2) = random_local_unitary_pair(d1, d2, derive_seed(seed, j)).unwrap();
                let conj: DensityMatrix = rho.conjugate_local(&u1, &u2).unwrap();
                worst = worst.max((bound_mixed(&conj) - base_mixed).abs());
                if let Some(q) = base_qubit {
                    worst = worst.max((bound_qubit(&conj).unwrap() - q).abs());
                }
            }
        }
    }
    outcome(
        worst < 1e-9,
        format!("200 states in each of 2x2, 3x3 x 10 local unitaries: max change {worst:.2e} (tol 1e-9)"),
    )
}

fn main() -> ExitCode {
    let dir = tempfile::tempdir().unwrap();
    let secs = |s| Some(Duration::from_secs(s));
    let results = [
        criterion("1", secs(1), bell_certificate),
        criterion("2", secs(5), || pure_2x2_sweep(dir.path())),
        criterion("3", secs(10), || mixed_2x2_orderings(dir.path())),
        criterion("4", None, spot_values),
        criterion("5 (2x2)", secs(60), || soundness(2, 2, 1000)),
        criterion("5 (3x3)", secs(60), || soundness(3, 3, 500)),
        criterion("6 (rank one)", secs(120), oracle_rank_one),
        criterion("6 (correlation 2x2)", secs(120), || oracle_correlation(2)),
        criterion("6 (correlation 3x3)", secs(120), || oracle_correlation(3)),
        criterion("7", None, constructive_consistency),
        criterion("8", None, local_unitary_invariance),
    ];
    let failed = results.iter().filter(|p| !**p).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
