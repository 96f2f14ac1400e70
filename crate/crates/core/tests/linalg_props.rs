mod common;

use num_complex::Complex64 as C64;
use proptest::prelude::*;
use qbattery::linalg::{eigh, expm_unitary, kron, partial_trace, ComplexMatrix, Site};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{random_density, random_hermitian};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn propagator_is_unitary(seed in any::<u64>(), t in -20.0f64..20.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_hermitian(&mut rng, 4, 3.0);
        let u = expm_unitary(&h, t).unwrap();
        let utu = &u.adjoint() * &u;
        prop_assert!(utu.max_abs_diff(&ComplexMatrix::identity(4)) <= 1e-12);
    }

    #[test]
    fn propagator_group_property(seed in any::<u64>(), t1 in 0.0f64..10.0, t2 in 0.0f64..10.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_hermitian(&mut rng, 4, 2.0);
        let joint = expm_unitary(&h, t1 + t2).unwrap();
        let split = &expm_unitary(&h, t1).unwrap() * &expm_unitary(&h, t2).unwrap();
        prop_assert!(joint.max_abs_diff(&split) <= 1e-10);
    }

    #[test]
    fn eigh_contract(seed in any::<u64>(), dim in prop::sample::select(vec![2usize, 4])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_hermitian(&mut rng, dim, 5.0);
        let e = eigh(&h).unwrap();
        prop_assert!(e.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        let vtv = &e.eigenvectors.adjoint() * &e.eigenvectors;
        prop_assert!(vtv.max_abs_diff(&ComplexMatrix::identity(dim)) <= 1e-10);
        prop_assert!(e.reconstruct().max_abs_diff(&h) <= 1e-10);
        let sum: f64 = e.eigenvalues.iter().sum();
        prop_assert!((sum - h.trace().re).abs() <= 1e-10);
    }

    #[test]
    fn partial_trace_recovers_product_factors(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ra = random_density(&mut rng, 2, 2);
        let rb = random_density(&mut rng, 2, 2);
        let joint = kron(&ra, &rb).unwrap();
        prop_assert!(partial_trace(&joint, Site::A).unwrap().max_abs_diff(&ra) <= 1e-12);
        prop_assert!(partial_trace(&joint, Site::B).unwrap().max_abs_diff(&rb) <= 1e-12);
    }

    #[test]
    fn kron_is_bilinear(seed in any::<u64>(), re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alpha = C64::new(re, im);
        let a = random_hermitian(&mut rng, 2, 1.0);
        let b = random_hermitian(&mut rng, 2, 1.0);
        let lhs = kron(&a.scale(alpha), &b).unwrap();
        let rhs = kron(&a, &b).unwrap().scale(alpha);
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-14);
        let rhs2 = kron(&a, &b.scale(alpha)).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs2) <= 1e-14);
    }
}

#[test]
fn degenerate_spectrum_is_handled() {
    // Ising total Hamiltonian has repeated levels
    let set = qbattery::model::build_all(
        &qbattery::model::ModelParams::ising(0.0),
        qbattery::model::ModelPreset::Ising,
    )
    .unwrap();
    let e = eigh(&set.h_total).unwrap();
    assert!(e.reconstruct().max_abs_diff(&set.h_total) < 1e-12);
}
