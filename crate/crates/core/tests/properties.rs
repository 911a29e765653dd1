use oew_core::bounds::*;
use oew_core::linalg::*;
use oew_core::states::*;
use oew_core::{ComplexMatrix, C64};
use proptest::prelude::*;

const DIMS: [(usize, usize); 3] = [(2, 2), (2, 3), (3, 3)];

fn hermitian_unit_trace(n: usize, entries: &[(f64, f64)]) -> ComplexMatrix {
    let a = ComplexMatrix::from_iterator(n, n, entries.iter().map(|&(re, im)| C64::new(re, im)));
    let h = (&a + a.adjoint()).scale(0.5) + ComplexMatrix::identity(n, n).scale(n as f64);
    let tr = trace(&h).re;
    h.unscale(tr)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bloch_round_trip(dims in 0usize..3, entries in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 81)) {
        let (d1, d2) = DIMS[dims];
        let n = d1 * d2;
        let h = hermitian_unit_trace(n, &entries[..n * n]);
        let form = bloch_decompose(&h, d1, d2).unwrap();
        prop_assert!((bloch_compose(&form) - &h).camax() < 1e-10);
    }

    #[test]
    fn pure_state_norm_identity(dims in 0usize..3, seed in any::<u64>()) {
        let (d1, d2) = DIMS[dims];
        let psi = random_pure(d1, d2, seed).unwrap();
        let rho = psi.to_density();
        let pt = trace_norm(&partial_transpose(&rho));
        let re = trace_norm(&realign(&rho));
        let mu = schmidt_coefficients(&psi);
        let schmidt = mu.iter().map(|m| m.sqrt()).sum::<f64>().powi(2);
        prop_assert!((pt - re).abs() < 1e-8);
        prop_assert!((pt - schmidt).abs() < 1e-8);

        prop_assert!((mu.iter().sum::<f64>() - 1.0).abs() < 1e-10);
        prop_assert!(mu.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn partial_transpose_involution(dims in 0usize..3, seed in any::<u64>()) {
        let (d1, d2) = DIMS[dims];
        let rho = random_density(d1, d2, seed).unwrap();
        let once = partial_transpose(&rho);
        let twice = partial_transpose_matrix(&once, d1, d2).unwrap();
        prop_assert!((&twice - rho.matrix()).camax() < 1e-15);
        prop_assert!((trace(&once).re - 1.0).abs() < 1e-12);
        prop_assert!(hermitian_deviation(&once) < 1e-12);
    }

    #[test]
    fn local_unitary_invariance(dims in 0usize..3, seed in any::<u64>()) {
        let (d1, d2) = DIMS[dims];
        let rho = random_density(d1, d2, seed).unwrap();
        let (u1, u2) = random_local_unitary_pair(d1, d2, seed ^ 0x5eed).unwrap();
        let conj = rho.conjugate_local(&u1, &u2).unwrap();
        let before = singular_values(&correlation_matrix(&rho));
        let after = singular_values(&correlation_matrix(&conj));
        for (a, b) in before.iter().zip(&after) {
            prop_assert!((a - b).abs() < 1e-9);
        }
        prop_assert!((bound_mixed(&rho) - bound_mixed(&conj)).abs() < 1e-9);
        if d1 == 2 && d2 == 2 {
            prop_assert!((bound_qubit(&rho).unwrap() - bound_qubit(&conj).unwrap()).abs() < 1e-9);
        }
    }

    #[test]
    fn bounds_are_lipschitz_under_depolarizing(dims in 0usize..3, seed in any::<u64>()) {
        let (d1, d2) = DIMS[dims];
        let rho = random_density(d1, d2, seed).unwrap();
        let noise = DensityMatrix::maximally_mixed(d1, d2).unwrap();
        for eps in [1e-2, 1e-3, 1e-4] {
            let shifted = rho.mix(&noise, 1.0 - eps).unwrap();
            prop_assert!((bound_mixed(&shifted) - bound_mixed(&rho)).abs() <= eps);
            if d1 == 2 && d2 == 2 {
                let delta = bound_qubit(&shifted).unwrap() - bound_qubit(&rho).unwrap();
                prop_assert!(delta.abs() <= eps);
            }
        }
    }

    #[test]
    fn fixed_witness_family_is_convex(seed in any::<u64>()) {
        let family: Vec<WitnessOperator> = (0..3)
            .flat_map(|k| {
                let reference = random_density(2, 2, seed.wrapping_add(k)).unwrap();
                [construct_l_mixed(&reference).unwrap(), construct_l_qubit(&reference).unwrap()]
            })
            .collect();
        let score = |rho: &DensityMatrix| {
            family
                .iter()
                .map(|w| witness_expectation(w, rho).unwrap())
                .fold(f64::NEG_INFINITY, f64::max)
        };
        let r1 = random_density(2, 2, seed.wrapping_mul(3)).unwrap();
        let r2 = random_pure(2, 2, seed.wrapping_mul(5)).unwrap().to_density();
        for lambda in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let mixed = r1.mix(&r2, lambda).unwrap();
            let rhs = lambda * score(&r1) + (1.0 - lambda) * score(&r2);
            prop_assert!(score(&mixed) <= rhs + 1e-12);
        }
    }

    #[test]
    fn pure_two_qubit_bounds_agree(seed in any::<u64>()) {
        let psi = random_pure(2, 2, seed).unwrap();
        let rho = psi.to_density();
        prop_assert!((bound_pure(&psi) - bound_qubit(&rho).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn two_qubit_separable_soundness(k in 1usize..=4, seed in any::<u64>()) {
        let sigma = random_separable_mixed(2, 2, k, seed).unwrap();
        prop_assert!(bound_mixed(&sigma) <= 1e-8);
        prop_assert!(bound_qubit(&sigma).unwrap() <= 1e-8);
        let report = evaluate(&sigma);
        prop_assert!(!report.entangled);
        if let Some(p) = report.bound_pure {
            prop_assert!(p <= 1e-8);
        }
    }

    #[test]
    fn two_qubit_witnesses_nonnegative_on_separable(seed in any::<u64>(), k in 1usize..=4) {
        let target = random_density(2, 2, seed).unwrap();
        let psi = random_pure(2, 2, seed).unwrap();
        let witnesses = [
            construct_l_pure(&psi).unwrap(),
            construct_l_mixed(&target).unwrap(),
            construct_l_qubit(&target).unwrap(),
        ];
        let sigma = random_separable_mixed(2, 2, k, seed.rotate_left(17)).unwrap();
        for w in &witnesses {
            prop_assert!(-witness_expectation(w, &sigma).unwrap() >= -1e-9);
        }
    }

    #[test]
    fn rank_one_witnesses_nonnegative_on_separable(dims in 0usize..3, seed in any::<u64>()) {
        let (d1, d2) = DIMS[dims];
        let w = construct_l_pure(&random_pure(d1, d2, seed).unwrap()).unwrap();
        let sigma = random_separable_mixed(d1, d2, 3, seed.rotate_left(9)).unwrap();
        prop_assert!(-witness_expectation(&w, &sigma).unwrap() >= -1e-9);
    }
}

#[test]
fn variational_never_exceeds_exact_closed_forms() {
    let opts = VariationalOptions::default();
    for seed in 0..20 {
        let (d1, d2) = DIMS[seed as usize % 3];
        let psi = random_pure(d1, d2, seed).unwrap();
        let v = alpha_variational(&psi.projector(), d1, d2, &opts).unwrap();
        assert!(v <= alpha_rank_one(&psi) + 1e-8);

        let l = random_correlation_operator(2, 2, seed).unwrap();
        let v = alpha_variational(&l, 2, 2, &opts).unwrap();
        assert!(v <= alpha_correlation(&l, 2, 2).unwrap() + 1e-8);
    }
}

#[test]
fn qubit_bound_dominates_mixed_bound_on_families() {
    for i in 0..=40 {
        let a = i as f64 * 0.05;
        let psi = pure_family_2x2(a).unwrap();
        for x in [0.0, 0.01, 0.1, 0.3, 0.7] {
            let rho = isotropic_mix(x, &psi).unwrap();
            assert!(
                bound_qubit(&rho).unwrap() >= bound_mixed(&rho) - 1e-12,
                "a={a} x={x}"
            );
        }
    }
}

#[test]
fn isotropic_mix_scales_correlations() {
    for seed in 0..20 {
        let (d1, d2) = DIMS[seed as usize % 3];
        let psi = random_pure(d1, d2, seed).unwrap();
        let pure_r = correlation_matrix(&psi.to_density());
        for x in [0.0, 0.2, 0.5, 1.0] {
            let r = correlation_matrix(&isotropic_mix(x, &psi).unwrap());
            assert!((r - pure_r.scale(1.0 - x)).amax() < 1e-12);
        }
    }
}

#[test]
fn correlation_bound_on_qutrit_product_states_is_four_over_81() {
    // ‖R‖_KF = 3 and rank 1 for every 3⊗3 product pure state, so the
    // correlation bound evaluates to 2(3 - 1)/81 there.
    for seed in 0..10 {
        let rho = random_product_pure(3, 3, seed).unwrap().to_density();
        assert!((bound_mixed(&rho) - 4.0 / 81.0).abs() < 1e-12);
    }
}
