//! Seeded property self-test over the core library.
//!
//! Each suite runs `samples` independent cases. Case `i` of every suite draws
//! its states from `derive_seed(seed, i)`, so a report is a pure function of
//! `(seed, samples)`. A case that returns an error counts as a failure.

use std::fmt::Write as _;

use oew_core::bounds::*;
use oew_core::linalg::*;
use oew_core::states::*;
use oew_core::{ComplexMatrix, Result};

const DIMS: [(usize, usize); 3] = [(2, 2), (2, 3), (3, 3)];

type Case = fn(u64, usize) -> Result<bool>;

const SUITES: &[(&str, Case)] = &[
    ("gellmann_orthogonality", gellmann_orthogonality),
    ("bloch_round_trip", bloch_round_trip),
    ("schmidt_normalization", schmidt_normalization),
    ("pure_norm_identity", pure_norm_identity),
    ("partial_transpose_involution", partial_transpose_involution),
    ("norm_ordering", norm_ordering),
    ("unitarity", unitarity),
    ("state_validity", state_validity),
    ("isotropic_affine", isotropic_affine),
    ("soundness_2x2", soundness_2x2),
    ("soundness_3x3", soundness_3x3),
    ("witness_nonnegativity_2x2", witness_nonnegativity_2x2),
    ("witness_nonnegativity_3x3", witness_nonnegativity_3x3),
    ("constructive_consistency", constructive_consistency),
    ("oracle_rank_one", oracle_rank_one),
    ("oracle_correlation_2x2", oracle_correlation_2x2),
    ("oracle_correlation_3x3", oracle_correlation_3x3),
    ("local_unitary_invariance", local_unitary_invariance),
    ("continuity", continuity),
    ("fixed_witness_convexity", fixed_witness_convexity),
    ("pure_agreement", pure_agreement),
    ("qubit_dominates_mixed", qubit_dominates_mixed),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelftestReport {
    pub seed: u64,
    pub samples: usize,
    pub suites: Vec<SuiteResult>,
}

impl SelftestReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }

    pub fn render(&self) -> String {
        let width = self.suites.iter().map(|s| s.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        let _ = writeln!(out, "seed = {}, samples = {}", self.seed, self.samples);
        for s in &self.suites {
            let verdict = if s.ok() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{:<width$}  {:>5}/{:<5}  {verdict}",
                s.name, s.passed, s.total
            );
        }
        let good = self.suites.iter().filter(|s| s.ok()).count();
        let _ = writeln!(out, "{good}/{} suites passed", self.suites.len());
        out
    }
}

pub fn suite_names() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|(name, _)| *name)
}

pub fn run(seed: u64, samples: usize) -> SelftestReport {
    let samples = samples.max(1);
    let suites = SUITES
        .iter()
        .map(|&(name, case)| {
            let passed = (0..samples)
                .filter(|&i| matches!(case(derive_seed(seed, i as u64), i), Ok(true)))
                .count();
            SuiteResult {
                name,
                passed,
                total: samples,
            }
        })
        .collect();
    SelftestReport {
        seed,
        samples,
        suites,
    }
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

fn max_abs(m: &ComplexMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn gellmann_orthogonality(_: u64, i: usize) -> Result<bool> {
    let d = 2 + i % 4;
    let basis = gell_mann_basis(d)?;
    let ms = basis.matrices();
    let mut ok = ms.len() == d * d - 1;
    for (a, ma) in ms.iter().enumerate() {
        ok &= hermitian_deviation(ma) < 1e-15 && trace(ma).norm() < 1e-14;
        for (b, mb) in ms.iter().enumerate() {
            let expected = if a == b { 2.0 } else { 0.0 };
            ok &= (trace_product(ma, mb) - expected).norm() < 1e-14;
        }
    }
    Ok(ok)
}

fn bloch_round_trip(seed: u64, i: usize) -> Result<bool> {
    let (d1, d2) = DIMS[i % 3];
    let rho = random_density(d1, d2, seed)?;
    let l = random_correlation_operator(d1, d2, seed.rotate_left(7))?;
    let mut ok = true;
    for m in [rho.matrix(), &l] {
        let form = bloch_decompose(m, d1, d2)?;
        ok &= max_abs(&(bloch_compose(&form) - m)) < 1e-10;
    }
    Ok(ok)
}

fn schmidt_normalization(seed: u64, i: usize) -> Result<bool> {
    let (d1, d2) = DIMS[i % 3];
    let mu = schmidt_coefficients(&random_pure(d1, d2, seed)?);
    Ok(close(mu.iter().sum(), 1.0, 1e-10)
        && mu.iter().all(|&m| m >= -1e-15)
        && mu.windows(2).all(|w| w[0] >= w[1]))
}

fn pure_norm_identity(seed: u64, i: usize) -> Result<bool> {
    let (d1, d2) = DIMS[i % 3];
    let psi = random_pure(d1, d2, seed)?;
    let rho = psi.to_density();
    let pt = trace_norm(&partial_transpose(&rho));
    let re = trace_norm(&realign(&rho));
    let schmidt = schmidt_coefficients(&psi)
        .iter()
        .map(|m| m.sqrt())
        .sum::<f64>()
        .powi(2);
    Ok(close(pt, re, 1e-8) && close(pt, schmidt, 1e-8))
}

fn partial_transpose_involution(seed: u64, i: usize) -> Result<bool> {
    let (d1, d2) = DIMS[i % 3];
    let rho = random_density(d1, d2, seed)?;
    let once = partial_transpose(&rho);
    let twice = partial_transpose_matrix(&once, d1, d2)?;
    Ok(max_abs(&(twice - rho.matrix())) < 1e-15 && close(trace(&once).re, 1.0, 1e-12))
}

fn norm_ordering(seed: u64, i: usize) -> Result<bool> {
    let (d1, d2) = DIMS[i % 3];
    let rho = random_density(d1, d2, seed)?;
    let (u1, u2) = random_local_unitary_pair(d1, d2, seed.rotate_left(11))?;
    let u = kron(&u1, &u2);
    // A generic non-Hermitian square matrix, and a rectangular one when d1 != d2.
    let generic = &u * rho.matrix() + rho.matrix() * &u;
    let mut ok = true;
    for m in [generic, realign(&rho)] {
        let rank = singular_values(&m).iter().filter(|&&s| s > 1e-12).count() as f64;
        let (s, f, t) = (spectral_norm(&m), frobenius_norm(&m), trace_norm(&m));
        let eps = 1e-12 * t.max(1.0);
        ok &= s <= f + eps && f <= t + eps && t <= rank.sqrt() * f + eps;
    }
    Ok(ok)
}

fn unitarity(seed: u64, i: usize) -> Result<bool> {
    let (d1, d2) = DIMS[i % 3];
    let (u1, u2) = random_local_unitary_pair(d1, d2, seed)?;
    Ok(max_abs(&(u1.adjoint() * &u1 - identity(d1))) < 1e-12
        && max_abs(&(u2.adjoint() * &u2 - identity(d2))) < 1e-12)
}

fn state_validity(seed: u64, i: usize) -> Result<bool> {
    let (d1, d2) = DIMS[i % 3];
    let candidates = [
        random_density(d1, d2, seed)?,
        random_separable_mixed(d1, d2, 1 + i % 4, seed)?,
        random_pure(d1, d2, seed)?.to_density(),
        random_product_pure(d1, d2, seed)?.to_density(),
    ];
    for rho in candidates {
        DensityMatrix::new(d1, d2, rho.into_matrix())?;
    }
    let a = 2.0 * i as f64 / 199.0;
    let norms = [pure_family_2x2(a)?, pure_family_3x3(a)?].map(|psi| psi.amplitudes().norm());
    Ok(norms.iter().all(|&n| close(n, 1.0, 1e-12)))
}

fn isotropic_affine(seed: u64, i: usize) -> Result<bool> {
    let (d1, d2) = DIMS[i % 3];
    let psi = random_pure(d1, d2, seed)?;
    let x = (i % 11) as f64 / 10.0;
    let pure_r = correlation_matrix(&psi.to_density());
    let r = correlation_matrix(&isotropic_mix(x, &psi)?);
    Ok((r - pure_r.scale(1.0 - x)).amax() < 1e-12)
}

fn soundness(d1: usize, d2: usize, seed: u64, i: usize) -> Result<bool> {
    let sigma = random_separable_mixed(d1, d2, 1 + i % 4, seed)?;
    let report = evaluate(&sigma);
    let raw = [
        report.bound_pure,
        Some(report.bound_mixed),
        report.bound_qubit,
    ];
    Ok(raw.into_iter().flatten().all(|b| b <= 1e-8) && !report.entangled)
}

fn soundness_2x2(seed: u64, i: usize) -> Result<bool> {
    soundness(2, 2, seed, i)
}

fn soundness_3x3(seed: u64, i: usize) -> Result<bool> {
    soundness(3, 3, seed, i)
}

fn witnesses_hold(witnesses: &[WitnessOperator], sigma: &DensityMatrix) -> Result<bool> {
    for w in witnesses {
        if witness_expectation(w, sigma)? > 1e-9 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn witness_nonnegativity_2x2(seed: u64, i: usize) -> Result<bool> {
    let target = random_density(2, 2, seed)?;
    let witnesses = [
        construct_l_pure(&random_pure(2, 2, seed)?)?,
        construct_l_mixed(&target)?,
        construct_l_qubit(&target)?,
    ];
    let sigma = random_separable_mixed(2, 2, 1 + i % 4, seed.rotate_left(17))?;
    witnesses_hold(&witnesses, &sigma)
}

fn witness_nonnegativity_3x3(seed: u64, i: usize) -> Result<bool> {
    let witnesses = [
        construct_l_pure(&random_pure(3, 3, seed)?)?,
        construct_l_mixed(&random_density(3, 3, seed)?)?,
    ];
    let sigma = random_separable_mixed(3, 3, 1 + i % 4, seed.rotate_left(17))?;
    witnesses_hold(&witnesses, &sigma)
}

fn constructive_consistency(seed: u64, i: usize) -> Result<bool> {
    let (d1, d2) = DIMS[(i / 3) % 3];
    let (witness, rho, bound) = match i % 3 {
        0 => {
            let psi = random_pure(d1, d2, seed)?;
            (construct_l_pure(&psi)?, psi.to_density(), bound_pure(&psi))
        }
        1 => {
            let rho = random_density(d1, d2, seed)?;
            (construct_l_mixed(&rho)?, rho.clone(), bound_mixed(&rho))
        }
        _ => {
            let rho = random_density(2, 2, seed)?;
            (construct_l_qubit(&rho)?, rho.clone(), bound_qubit(&rho)?)
        }
    };
    check_unit_trace_psd(witness.l(), witness.d1(), witness.d2())?;
    Ok(close(witness_expectation(&witness, &rho)?, bound, 1e-10))
}

fn variational(l: &ComplexMatrix, d1: usize, d2: usize, seed: u64) -> Result<f64> {
    let opts = VariationalOptions {
        seed,
        ..VariationalOptions::default()
    };
    alpha_variational(l, d1, d2, &opts)
}

fn oracle_rank_one(seed: u64, i: usize) -> Result<bool> {
    let d = 2 + i % 2;
    let psi = random_pure(d, d, seed)?;
    let v = variational(&psi.projector(), d, d, seed)?;
    Ok(close(v, alpha_rank_one(&psi), 1e-8))
}

fn oracle_correlation(d: usize, seed: u64) -> Result<bool> {
    let l = random_correlation_operator(d, d, seed)?;
    let v = variational(&l, d, d, seed)?;
    Ok(close(v, alpha_correlation(&l, d, d)?, 1e-8))
}

fn oracle_correlation_2x2(seed: u64, _: usize) -> Result<bool> {
    oracle_correlation(2, seed)
}

fn oracle_correlation_3x3(seed: u64, _: usize) -> Result<bool> {
    oracle_correlation(3, seed)
}

fn local_unitary_invariance(seed: u64, i: usize) -> Result<bool> {
    let (d1, d2) = DIMS[i % 3];
    let rho = random_density(d1, d2, seed)?;
    let (u1, u2) = random_local_unitary_pair(d1, d2, seed.rotate_left(5))?;
    let conj = rho.conjugate_local(&u1, &u2)?;
    let mut ok = close(bound_mixed(&rho), bound_mixed(&conj), 1e-9);
    if (d1, d2) == (2, 2) {
        ok &= close(bound_qubit(&rho)?, bound_qubit(&conj)?, 1e-9);
    }
    Ok(ok)
}

fn continuity(seed: u64, i: usize) -> Result<bool> {
    let (d1, d2) = DIMS[i % 3];
    let rho = random_density(d1, d2, seed)?;
    let noise = DensityMatrix::maximally_mixed(d1, d2)?;
    let mut ok = true;
    for eps in [1e-2, 1e-3, 1e-4] {
        let shifted = rho.mix(&noise, 1.0 - eps)?;
        ok &= (bound_mixed(&shifted) - bound_mixed(&rho)).abs() <= eps;
        if (d1, d2) == (2, 2) {
            ok &= (bound_qubit(&shifted)? - bound_qubit(&rho)?).abs() <= eps;
        }
    }
    Ok(ok)
}

fn fixed_witness_convexity(seed: u64, _: usize) -> Result<bool> {
    let mut family = Vec::new();
    for k in 0..3 {
        let reference = random_density(2, 2, seed.wrapping_add(k))?;
        family.push(construct_l_mixed(&reference)?);
        family.push(construct_l_qubit(&reference)?);
    }
    let score = |rho: &DensityMatrix| -> Result<f64> {
        let mut best = f64::NEG_INFINITY;
        for w in &family {
            best = best.max(witness_expectation(w, rho)?);
        }
        Ok(best)
    };
    let r1 = random_density(2, 2, seed.wrapping_mul(3))?;
    let r2 = random_pure(2, 2, seed.wrapping_mul(5))?.to_density();
    let (s1, s2) = (score(&r1)?, score(&r2)?);
    let mut ok = true;
    for lambda in [0.0, 0.25, 0.5, 0.75, 1.0] {
        ok &= score(&r1.mix(&r2, lambda)?)? <= lambda * s1 + (1.0 - lambda) * s2 + 1e-12;
    }
    Ok(ok)
}

fn pure_agreement(seed: u64, i: usize) -> Result<bool> {
    let family = pure_family_2x2(2.0 * (i % 201) as f64 / 200.0)?;
    let random = random_pure(2, 2, seed)?;
    let mut ok = true;
    for psi in [family, random] {
        ok &= close(bound_pure(&psi), bound_qubit(&psi.to_density())?, 1e-9);
    }
    Ok(ok)
}

fn qubit_dominates_mixed(seed: u64, i: usize) -> Result<bool> {
    let x = (i % 11) as f64 / 10.0;
    let family = pure_family_2x2(2.0 * (i % 41) as f64 / 40.0)?;
    let random = random_pure(2, 2, seed)?;
    let mut ok = true;
    for psi in [family, random] {
        let rho = isotropic_mix(x, &psi)?;
        ok &= bound_qubit(&rho)? >= bound_mixed(&rho) - 1e-12;
    }
    Ok(ok)
}
