mod common;

use proptest::prelude::*;
use qbattery::linalg::{eigh, kron, partial_trace, purity, ComplexMatrix, Site};
use qbattery::model::{build_free, ModelParams};
use qbattery::observables::{
    correlation_matrix, ergotropy, first_order_coherence, steering_bruteforce, steering_max,
    CorrelationMatrix,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{random_density, random_state, random_unitary2};

fn h0(omega0: f64) -> ComplexMatrix {
    build_free(&ModelParams { omega0, ..ModelParams::default() })
}

#[test]
fn pure_state_ergotropy_is_energy_above_ground() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let omega0 = rng.gen_range(0.2..3.0);
        let h = h0(omega0);
        let psi = random_state(&mut rng, 4);
        let zeta = ergotropy(&psi.density_matrix(), &h).unwrap();
        let expected = psi.expectation(&h) + 2.0 * omega0;
        assert!((zeta - expected).abs() <= 1e-10, "{zeta} vs {expected}");
    }
}

#[test]
fn ergotropy_bounded_by_spectral_width() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let h = h0(1.0);
    let levels = eigh(&h).unwrap().eigenvalues;
    let width = levels[3] - levels[0];
    for rank in 1..=4 {
        for _ in 0..200 {
            let rho = random_density(&mut rng, 4, rank);
            let zeta = ergotropy(&rho, &h).unwrap();
            assert!((0.0..=width + 1e-12).contains(&zeta), "rank {rank}: {zeta}");
        }
    }
}

#[test]
fn steering_closed_form_matches_bruteforce() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut worst = 0.0f64;
    for k in 0..1000 {
        let rho = if k % 4 == 3 {
            random_density(&mut rng, 4, 2)
        } else {
            random_state(&mut rng, 4).density_matrix()
        };
        let t = correlation_matrix(&rho).unwrap();
        let exact = steering_max(&t);
        let brute = steering_bruteforce(&t, 6, 1e-10);
        assert!(brute <= exact + 1e-9, "optimizer exceeded closed form: {brute} > {exact}");
        worst = worst.max((exact - brute).abs());
    }
    assert!(worst <= 1e-6, "worst gap {worst}");
}

#[test]
fn product_states_sit_on_the_steering_boundary() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..200 {
        let a = random_state(&mut rng, 2).density_matrix();
        let b = random_state(&mut rng, 2).density_matrix();
        let t = correlation_matrix(&kron(&a, &b).unwrap()).unwrap();
        assert!((steering_max(&t) - 1.0).abs() <= 1e-9);
    }
}

#[test]
fn correlation_entries_are_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..300 {
        let rank = rng.gen_range(1..=4);
        let rho = random_density(&mut rng, 4, rank);
        let CorrelationMatrix(t) = correlation_matrix(&rho).unwrap();
        assert!(t.iter().flatten().all(|v| v.abs() <= 1.0 + 1e-12));
        assert!(steering_max(&correlation_matrix(&rho).unwrap()) <= 3f64.sqrt() + 1e-9);
    }
}

#[test]
fn coherence_bounds_and_purity_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for rank in 1..=4 {
        for _ in 0..200 {
            let rho = random_density(&mut rng, 4, rank);
            let q = first_order_coherence(&rho).unwrap();
            assert!((0.0..=1.0 + 1e-12).contains(&q));
            let pa = purity(&partial_trace(&rho, Site::A).unwrap()).unwrap();
            let pb = purity(&partial_trace(&rho, Site::B).unwrap()).unwrap();
            let both_pure = (pa - 1.0).abs() < 1e-9 && (pb - 1.0).abs() < 1e-9;
            assert_eq!(both_pure, (q - 1.0).abs() < 1e-9);
        }
    }
    // pure products always reach Q = 1
    for _ in 0..100 {
        let a = random_state(&mut rng, 2).density_matrix();
        let b = random_state(&mut rng, 2).density_matrix();
        let q = first_order_coherence(&kron(&a, &b).unwrap()).unwrap();
        assert!((q - 1.0).abs() < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn local_unitaries_preserve_steering_and_coherence(seed in any::<u64>(), rank in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho = random_density(&mut rng, 4, rank);
        let u = kron(&random_unitary2(&mut rng), &random_unitary2(&mut rng)).unwrap();
        let rotated = &(&u * &rho) * &u.adjoint();
        // restore exact Hermiticity lost to rounding in the products
        let rotated = (&rotated + &rotated.adjoint()).scale_real(0.5);
        let s0 = steering_max(&correlation_matrix(&rho).unwrap());
        let s1 = steering_max(&correlation_matrix(&rotated).unwrap());
        prop_assert!((s0 - s1).abs() <= 1e-9);
        let q0 = first_order_coherence(&rho).unwrap();
        let q1 = first_order_coherence(&rotated).unwrap();
        prop_assert!((q0 - q1).abs() <= 1e-9);
    }
}
