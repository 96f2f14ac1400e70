#![allow(dead_code)]

use num_complex::Complex64 as C64;
use qbattery::linalg::{ComplexMatrix, StateVector};
use qbattery::model::ModelParams;
use rand::Rng;

pub fn random_hermitian(rng: &mut impl Rng, dim: usize, scale: f64) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        m[(i, i)] = C64::new(rng.gen_range(-scale..scale), 0.0);
        for j in (i + 1)..dim {
            let z = C64::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale));
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

pub fn random_state(rng: &mut impl Rng, dim: usize) -> StateVector {
    loop {
        let amps: Vec<C64> = (0..dim)
            .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        if amps.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-3 {
            return StateVector::normalized(amps).unwrap();
        }
    }
}

/// Random mixture of `rank` random pure states.
pub fn random_density(rng: &mut impl Rng, dim: usize, rank: usize) -> ComplexMatrix {
    let weights: Vec<f64> = (0..rank).map(|_| rng.gen_range(0.05..1.0)).collect();
    let total: f64 = weights.iter().sum();
    let mut rho = ComplexMatrix::zeros(dim);
    for w in weights {
        let p = random_state(rng, dim).density_matrix();
        rho = &rho + &p.scale_real(w / total);
    }
    rho
}

pub fn random_unitary2(rng: &mut impl Rng) -> ComplexMatrix {
    let h = random_hermitian(rng, 2, 2.0);
    qbattery::linalg::expm_unitary(&h, 1.0).unwrap()
}

pub fn random_params(rng: &mut impl Rng) -> ModelParams {
    ModelParams {
        j: rng.gen_range(0.0..3.0),
        gamma: rng.gen_range(-1.0..1.0),
        delta: rng.gen_range(0.0..3.0),
        d: rng.gen_range(0.0..3.0),
        omega: rng.gen_range(0.5..2.0),
        omega0: rng.gen_range(0.5..2.0),
    }
}
