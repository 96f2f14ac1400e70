//! Battery figures of merit evaluated on two-qubit states.
//!
//! Ergotropy is the mean free energy minus the passive-state energy, i.e. the
//! *minimum* of `Tr(UρU†H₀)` over unitaries is subtracted. For pure states
//! this is the mean energy above the ground level of `H₀`.
//!
//! Steering is the maximal violation of the three-setting linear steering
//! inequality with orthonormal measurement triads on both sides. For a
//! correlation matrix `T` it equals `sqrt(Tr(TᵀT))`; [`steering_bruteforce`]
//! maximizes the inequality directly and exists to cross-check that.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dynamics::Trajectory;
use crate::error::{Error, Result};
use crate::linalg::{
    eigh, kron, partial_trace_unchecked, pauli, purity_unchecked, ComplexMatrix, Site,
    HERMITIAN_TOL, PSD_TOL, TRACE_TOL,
};

/// Largest imaginary part tolerated in a Pauli correlator.
pub const CORRELATOR_IMAG_TOL: f64 = 1e-8;
/// Negative ergotropy down to this size is rounding and is clamped to zero.
pub const ERGOTROPY_CLAMP_TOL: f64 = 1e-12;

const STEERING_SEED: u64 = 0x5EED_57EE;

/// Observables at one grid time.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObservableRecord {
    pub t: f64,
    pub ergotropy: f64,
    pub power: f64,
    pub coherence: f64,
    pub steering: f64,
    pub mean_energy: f64,
}

/// `T[i][j] = Tr(ρ σᵢ⊗σⱼ)` for `i, j ∈ {x, y, z}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrelationMatrix(pub [[f64; 3]; 3]);

impl CorrelationMatrix {
    pub fn zero() -> Self {
        Self([[0.0; 3]; 3])
    }

    /// `T = a bᵀ`, the correlation matrix of a product of pure qubit states
    /// with Bloch vectors `a` and `b`.
    pub fn outer(a: [f64; 3], b: [f64; 3]) -> Self {
        let mut t = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                t[i][j] = a[i] * b[j];
            }
        }
        Self(t)
    }

    /// `Tr(TᵀT)`.
    pub fn frobenius_sqr(&self) -> f64 {
        self.0.iter().flatten().map(|v| v * v).sum()
    }

    fn transpose(&self) -> [[f64; 3]; 3] {
        let mut out = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[j][i] = self.0[i][j];
            }
        }
        out
    }
}

/// Which series a [`PeakReport`] refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PeakKind {
    Ergotropy,
    Power,
}

impl PeakKind {
    pub fn name(self) -> &'static str {
        match self {
            PeakKind::Ergotropy => "ergotropy",
            PeakKind::Power => "power",
        }
    }

    fn value(self, r: &ObservableRecord) -> f64 {
        match self {
            PeakKind::Ergotropy => r.ergotropy,
            PeakKind::Power => r.power,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeakReport {
    pub t_peak: f64,
    pub value_peak: f64,
    pub kind: PeakKind,
}

/// Density-matrix checks that also hand back the spectrum for reuse.
fn checked_spectrum(rho: &ComplexMatrix) -> Result<Vec<f64>> {
    let deviation = rho.hermiticity_deviation();
    if deviation.is_nan() || deviation > HERMITIAN_TOL {
        return Err(Error::InvalidDensityMatrix(format!(
            "not Hermitian (max deviation {deviation:e})"
        )));
    }
    let tr = rho.trace().re;
    if (tr - 1.0).abs() > TRACE_TOL {
        return Err(Error::InvalidDensityMatrix(format!("trace {tr} is not 1")));
    }
    let spectrum = eigh(rho)?.eigenvalues;
    if spectrum[0] < -PSD_TOL {
        return Err(Error::InvalidDensityMatrix(format!(
            "negative eigenvalue {:e}",
            spectrum[0]
        )));
    }
    Ok(spectrum)
}

fn require_dim(m: &ComplexMatrix, dim: usize, what: &str) -> Result<()> {
    if m.dim() != dim {
        return Err(Error::DimensionMismatch(format!(
            "{what} expects a {dim}x{dim} matrix, got {0}x{0}",
            m.dim()
        )));
    }
    Ok(())
}

/// `Tr(ρH₀) − Σₖ rₖεₖ` with `r` descending and `ε` ascending.
fn ergotropy_from_spectra(
    rho: &ComplexMatrix,
    h_free: &ComplexMatrix,
    rho_spectrum_ascending: &[f64],
    free_levels_ascending: &[f64],
) -> f64 {
    let mean = rho.trace_product(h_free).re;
    let passive: f64 = rho_spectrum_ascending
        .iter()
        .rev()
        .zip(free_levels_ascending)
        .map(|(r, e)| r * e)
        .sum();
    let z = mean - passive;
    if (-ERGOTROPY_CLAMP_TOL..0.0).contains(&z) {
        0.0
    } else {
        z
    }
}

/// Extractable work of `rho` with respect to `h_free`.
pub fn ergotropy(rho: &ComplexMatrix, h_free: &ComplexMatrix) -> Result<f64> {
    if rho.dim() != h_free.dim() {
        return Err(Error::DimensionMismatch(format!(
            "state is {0}x{0} but the Hamiltonian is {1}x{1}",
            rho.dim(),
            h_free.dim()
        )));
    }
    let spectrum = checked_spectrum(rho)?;
    let levels = eigh(h_free)?.eigenvalues;
    Ok(ergotropy_from_spectra(rho, h_free, &spectrum, &levels))
}

/// Average charging power `ζ/t`; zero at `t = 0`, where ergotropy from the
/// empty state vanishes quadratically.
pub fn power(zeta: f64, t: f64) -> Result<f64> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::InvalidInput(format!("time must be nonnegative, got {t}")));
    }
    Ok(if t == 0.0 { 0.0 } else { zeta / t })
}

fn coherence_from_purity(p: f64) -> f64 {
    (2.0 * p - 1.0).max(0.0).sqrt()
}

/// First-order coherence `sqrt(2Tr(ρ²) − 1)` of a qubit.
pub fn first_order_coherence_single(rho_k: &ComplexMatrix) -> Result<f64> {
    require_dim(rho_k, 2, "single-qubit coherence")?;
    checked_spectrum(rho_k)?;
    Ok(coherence_from_purity(purity_unchecked(rho_k)))
}

fn two_qubit_coherence_unchecked(rho: &ComplexMatrix) -> f64 {
    let qa = coherence_from_purity(purity_unchecked(&partial_trace_unchecked(rho, Site::A)));
    let qb = coherence_from_purity(purity_unchecked(&partial_trace_unchecked(rho, Site::B)));
    ((qa * qa + qb * qb) / 2.0).sqrt()
}

/// Root-mean-square of the two single-qubit coherences of the reductions.
pub fn first_order_coherence(rho: &ComplexMatrix) -> Result<f64> {
    require_dim(rho, 4, "two-qubit coherence")?;
    checked_spectrum(rho)?;
    Ok(two_qubit_coherence_unchecked(rho))
}

fn correlation_matrix_unchecked(rho: &ComplexMatrix) -> Result<CorrelationMatrix> {
    let paulis = pauli::xyz();
    let mut t = [[0.0; 3]; 3];
    for (i, si) in paulis.iter().enumerate() {
        for (j, sj) in paulis.iter().enumerate() {
            let op = kron(si, sj)?;
            let v = rho.trace_product(&op);
            if v.im.abs() > CORRELATOR_IMAG_TOL {
                return Err(Error::InvalidDensityMatrix(format!(
                    "correlator ({i},{j}) has imaginary part {:e}",
                    v.im
                )));
            }
            t[i][j] = v.re;
        }
    }
    Ok(CorrelationMatrix(t))
}

/// Two-site Pauli correlators of a two-qubit state.
pub fn correlation_matrix(rho: &ComplexMatrix) -> Result<CorrelationMatrix> {
    require_dim(rho, 4, "correlation matrix")?;
    checked_spectrum(rho)?;
    correlation_matrix_unchecked(rho)
}

/// Maximal steering violation `sqrt(Tr(TᵀT))`. Values above 1 certify steering.
pub fn steering_max(t: &CorrelationMatrix) -> f64 {
    t.frobenius_sqr().sqrt()
}

type Mat3 = [[f64; 3]; 3];

fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn mat3_vec(a: &Mat3, v: [f64; 3]) -> [f64; 3] {
    [0, 1, 2].map(|i| (0..3).map(|k| a[i][k] * v[k]).sum())
}

fn column(r: &Mat3, j: usize) -> [f64; 3] {
    [r[0][j], r[1][j], r[2][j]]
}

fn norm3(v: [f64; 3]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// `(1/√3) Σᵢ ‖M rᵢ‖` over the columns `rᵢ` of `r`, with `M = Tᵀ`.
fn steering_objective(m: &Mat3, r: &Mat3) -> f64 {
    (0..3).map(|i| norm3(mat3_vec(m, column(r, i)))).sum::<f64>() / 3f64.sqrt()
}

/// Rotation `exp(K)` for a skew-symmetric `K` (Rodrigues).
fn rodrigues(k: &Mat3) -> Mat3 {
    let w = [k[2][1], k[0][2], k[1][0]];
    let theta = norm3(w);
    let mut out = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    if theta == 0.0 {
        return out;
    }
    let k2 = mat3_mul(k, k);
    let a = theta.sin() / theta;
    let b = (1.0 - theta.cos()) / (theta * theta);
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] += a * k[i][j] + b * k2[i][j];
        }
    }
    out
}

fn random_rotation(rng: &mut impl Rng) -> Mat3 {
    let q = loop {
        let q: [f64; 4] = [0; 4].map(|_| rng.gen_range(-1.0..1.0));
        let n2: f64 = q.iter().map(|x| x * x).sum();
        if n2 > 1e-6 && n2 <= 1.0 {
            let n = n2.sqrt();
            break q.map(|x| x / n);
        }
    };
    let [w, x, y, z] = q;
    [
        [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y)],
        [2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x)],
        [2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)],
    ]
}

/// Riemannian gradient ascent over rotations with Armijo backtracking. Stops
/// once the squared gradient norm drops below `tol`.
fn ascend(m: &Mat3, mtm: &Mat3, mut r: Mat3, tol: f64) -> f64 {
    let mut value = steering_objective(m, &r);
    let mut step: f64 = 1.0;
    for _ in 0..20_000 {
        // Euclidean gradient, one column per measurement direction
        let mut g = [[0.0; 3]; 3];
        for i in 0..3 {
            let ri = column(&r, i);
            let len = norm3(mat3_vec(m, ri));
            if len > 1e-300 {
                let gi = mat3_vec(mtm, ri);
                for k in 0..3 {
                    g[k][i] = gi[k] / len;
                }
            }
        }
        // skew part of RᵀG is the ascent direction in the Lie algebra
        let mut rt = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                rt[i][j] = r[j][i];
            }
        }
        let rtg = mat3_mul(&rt, &g);
        let mut omega = [[0.0; 3]; 3];
        let mut grad_sqr = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                omega[i][j] = 0.5 * (rtg[i][j] - rtg[j][i]);
                grad_sqr += omega[i][j] * omega[i][j];
            }
        }
        // suboptimality is quadratic in the gradient near a maximum
        if grad_sqr < tol {
            break;
        }
        let mut accepted = false;
        step = (step * 2.0).min(4.0);
        while step > 1e-16 {
            let k = omega.map(|row| row.map(|x| x * step));
            let candidate = mat3_mul(&r, &rodrigues(&k));
            let cv = steering_objective(m, &candidate);
            if cv >= value + 1e-4 * step * grad_sqr {
                r = candidate;
                value = cv;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    value
}

/// Maximizes the steering inequality over measurement triads numerically.
///
/// For fixed `aᵢ` the best unit `bᵢ` is parallel to `Tᵀaᵢ`, leaving
/// `(1/√3) Σᵢ ‖Tᵀaᵢ‖` to be maximized over orthonormal triads `{aᵢ}` (the
/// columns of a rotation). Starts from the identity plus `restarts − 1`
/// seeded random rotations; each ascent stops when the squared gradient norm
/// falls below `tol`. Returns the best local maximum, a lower bound on the
/// true maximum.
pub fn steering_bruteforce(t: &CorrelationMatrix, restarts: usize, tol: f64) -> f64 {
    let m = t.transpose();
    let mtm = mat3_mul(&t.0, &m);
    let mut rng = ChaCha8Rng::seed_from_u64(STEERING_SEED);
    let identity = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let mut best = ascend(&m, &mtm, identity, tol);
    for _ in 1..restarts.max(1) {
        let start = random_rotation(&mut rng);
        best = best.max(ascend(&m, &mtm, start, tol));
    }
    best
}

/// Evaluates every observable at each grid point of `traj`.
pub fn record_trajectory(
    traj: &Trajectory,
    h_free: &ComplexMatrix,
) -> Result<Vec<ObservableRecord>> {
    h_free.ensure_hermitian()?;
    let levels = eigh(h_free)?.eigenvalues;
    traj.iter()
        .map(|(t, psi)| {
            let rho = psi.density_matrix();
            if rho.dim() != h_free.dim() {
                return Err(Error::DimensionMismatch(format!(
                    "state is {0}x{0} but the Hamiltonian is {1}x{1}",
                    rho.dim(),
                    h_free.dim()
                )));
            }
            let spectrum = checked_spectrum(&rho)?;
            let zeta = ergotropy_from_spectra(&rho, h_free, &spectrum, &levels);
            let corr = correlation_matrix_unchecked(&rho)?;
            Ok(ObservableRecord {
                t,
                ergotropy: zeta,
                power: power(zeta, t)?,
                coherence: two_qubit_coherence_unchecked(&rho),
                steering: steering_max(&corr),
                mean_energy: rho.trace_product(h_free).re,
            })
        })
        .collect()
}

/// Grid maximum of `kind`, refined by a parabola through its neighbours.
///
/// Ties go to the earliest time. Boundary maxima and non-concave triples are
/// reported at the grid point.
pub fn find_peak(records: &[ObservableRecord], kind: PeakKind) -> Result<PeakReport> {
    let first = records
        .first()
        .ok_or_else(|| Error::InvalidInput("cannot locate a peak in an empty series".into()))?;
    let mut best = 0;
    let mut best_value = kind.value(first);
    for (k, r) in records.iter().enumerate().skip(1) {
        let v = kind.value(r);
        if v > best_value {
            best = k;
            best_value = v;
        }
    }
    let at_grid = PeakReport {
        t_peak: records[best].t,
        value_peak: best_value,
        kind,
    };
    if best == 0 || best + 1 == records.len() {
        return Ok(at_grid);
    }

    let (t1, y1) = (records[best].t, best_value);
    let h0 = records[best - 1].t - t1;
    let h2 = records[best + 1].t - t1;
    let d0 = (kind.value(&records[best - 1]) - y1) / h0;
    let d2 = (kind.value(&records[best + 1]) - y1) / h2;
    // y ≈ y1 + b·x + a·x² around t1
    let a = (d0 - d2) / (h0 - h2);
    let b = d0 - a * h0;
    if !a.is_finite() || a >= 0.0 {
        return Ok(at_grid);
    }
    let x = (-b / (2.0 * a)).clamp(h0, h2);
    Ok(PeakReport {
        t_peak: t1 + x,
        value_peak: y1 + b * x + a * x * x,
        kind,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{evolve, TimeGrid};
    use crate::linalg::StateVector;
    use crate::model::{build_free, initial_state, ModelParams};
    use num_complex::Complex64 as C64;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};

    fn h0() -> ComplexMatrix {
        build_free(&ModelParams::default())
    }

    fn bell() -> ComplexMatrix {
        let a = C64::new(FRAC_1_SQRT_2, 0.0);
        let z = C64::new(0.0, 0.0);
        StateVector::new(vec![a, z, z, a]).unwrap().density_matrix()
    }

    fn mixed4() -> ComplexMatrix {
        ComplexMatrix::identity(4).scale_real(0.25)
    }

    #[test]
    fn ergotropy_examples() {
        let empty = StateVector::basis(4, 3).density_matrix();
        assert_eq!(ergotropy(&empty, &h0()).unwrap(), 0.0);
        let full = StateVector::basis(4, 0).density_matrix();
        assert!((ergotropy(&full, &h0()).unwrap() - 4.0).abs() < 1e-14);
        assert!(ergotropy(&mixed4(), &h0()).unwrap().abs() < 1e-14);
    }

    #[test]
    fn ergotropy_of_mixed_population_inversion() {
        // populations (0.1, 0.2, 0.3, 0.4) on levels (2, 0, 0, −2): passive
        // rearrangement puts 0.4 on −2 and 0.1 on 2
        let rho = ComplexMatrix::from_real_diagonal(&[0.4, 0.3, 0.2, 0.1]);
        let mean = 0.4 * 2.0 - 0.1 * 2.0;
        let passive = 0.4 * -2.0 + 0.1 * 2.0;
        assert!((ergotropy(&rho, &h0()).unwrap() - (mean - passive)).abs() < 1e-14);
    }

    #[test]
    fn ergotropy_rejects_invalid_state() {
        assert!(ergotropy(&ComplexMatrix::identity(4), &h0()).is_err());
        assert!(ergotropy(&ComplexMatrix::identity(2).scale_real(0.5), &h0()).is_err());
    }

    #[test]
    fn power_examples() {
        assert_eq!(power(2.0, 1.0).unwrap(), 2.0);
        assert_eq!(power(0.0, 0.0).unwrap(), 0.0);
        let p = power(crate::dynamics::parallel_ergotropy(FRAC_PI_4, 1.0, 1.0), FRAC_PI_4).unwrap();
        assert!((p - 8.0 / PI).abs() < 1e-14);
        assert!(power(1.0, -0.1).is_err());
    }

    #[test]
    fn single_qubit_coherence_examples() {
        let half = ComplexMatrix::identity(2).scale_real(0.5);
        assert_eq!(first_order_coherence_single(&half).unwrap(), 0.0);
        let up = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]);
        assert_eq!(first_order_coherence_single(&up).unwrap(), 1.0);
        let skew = ComplexMatrix::from_real_diagonal(&[0.75, 0.25]);
        assert!((first_order_coherence_single(&skew).unwrap() - 0.5).abs() < 1e-15);
        assert!(first_order_coherence_single(&mixed4()).is_err());
    }

    #[test]
    fn two_qubit_coherence_examples() {
        let empty = StateVector::basis(4, 3).density_matrix();
        assert_eq!(first_order_coherence(&empty).unwrap(), 1.0);
        assert!(first_order_coherence(&bell()).unwrap().abs() < 1e-7);
        let down = ComplexMatrix::from_real_diagonal(&[0.0, 1.0]);
        let half = ComplexMatrix::identity(2).scale_real(0.5);
        let product = kron(&down, &half).unwrap();
        assert!((first_order_coherence(&product).unwrap() - FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn correlation_examples() {
        let empty = StateVector::basis(4, 3).density_matrix();
        assert_eq!(
            correlation_matrix(&empty).unwrap(),
            CorrelationMatrix([[0.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
        );
        let tb = correlation_matrix(&bell()).unwrap();
        let expected = [[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert!((tb.0[i][j] - expected[i][j]).abs() < 1e-15);
            }
        }
        assert_eq!(correlation_matrix(&mixed4()).unwrap(), CorrelationMatrix::zero());
    }

    #[test]
    fn steering_examples() {
        assert_eq!(steering_max(&CorrelationMatrix::zero()), 0.0);
        let tb = correlation_matrix(&bell()).unwrap();
        assert!((steering_max(&tb) - 3f64.sqrt()).abs() < 1e-15);
        let product = CorrelationMatrix::outer([0.0, 0.6, 0.8], [1.0, 0.0, 0.0]);
        assert!((steering_max(&product) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(steering_bruteforce(&CorrelationMatrix::zero(), 4, 1e-10), 0.0);
        let tb = correlation_matrix(&bell()).unwrap();
        assert!((steering_bruteforce(&tb, 4, 1e-10) - 3f64.sqrt()).abs() < 1e-9);
        let product = CorrelationMatrix::outer([0.0, 0.6, 0.8], [0.6, 0.0, -0.8]);
        assert!((steering_bruteforce(&product, 8, 1e-10) - 1.0).abs() < 1e-8);
    }

    #[test]
    fn first_record_from_empty_battery() {
        let grid = TimeGrid::from_zero(1.0, 3).unwrap();
        let h = crate::model::build_charging(&ModelParams::default());
        let traj = evolve(&h, &initial_state(), &grid).unwrap();
        let recs = record_trajectory(&traj, &h0()).unwrap();
        let r0 = recs[0];
        assert_eq!((r0.t, r0.power), (0.0, 0.0));
        assert!(r0.ergotropy.abs() < 1e-12);
        assert!((r0.coherence - 1.0).abs() < 1e-12);
        assert!((r0.steering - 1.0).abs() < 1e-12);
        assert!((r0.mean_energy + 2.0).abs() < 1e-12);
    }

    #[test]
    fn zero_hamiltonian_records_are_constant() {
        let grid = TimeGrid::from_zero(2.0, 5).unwrap();
        let traj = evolve(&ComplexMatrix::zeros(4), &initial_state(), &grid).unwrap();
        let recs = record_trajectory(&traj, &h0()).unwrap();
        for r in &recs {
            assert_eq!(
                (r.ergotropy, r.power, r.coherence, r.steering, r.mean_energy),
                (0.0, 0.0, 1.0, 1.0, -2.0)
            );
        }
    }

    fn series(values: &[(f64, f64)]) -> Vec<ObservableRecord> {
        values
            .iter()
            .map(|&(t, v)| ObservableRecord {
                t,
                ergotropy: v,
                power: -v,
                coherence: 0.0,
                steering: 0.0,
                mean_energy: 0.0,
            })
            .collect()
    }

    #[test]
    fn peak_of_increasing_series_is_last_point() {
        let recs = series(&[(0.0, 0.0), (0.1, 1.0), (0.2, 2.0), (0.3, 3.0)]);
        let p = find_peak(&recs, PeakKind::Ergotropy).unwrap();
        assert_eq!((p.t_peak, p.value_peak), (0.3, 3.0));
        let p = find_peak(&recs, PeakKind::Power).unwrap();
        assert_eq!((p.t_peak, p.value_peak), (0.0, 0.0));
    }

    #[test]
    fn peak_refines_parabola_vertex() {
        let (vertex, top) = (0.537, 1.25);
        let vals: Vec<(f64, f64)> = (0..21)
            .map(|k| {
                let t = k as f64 * 0.05;
                (t, top - 3.0 * (t - vertex).powi(2))
            })
            .collect();
        let p = find_peak(&series(&vals), PeakKind::Ergotropy).unwrap();
        assert!((p.t_peak - vertex).abs() < 1e-9);
        assert!((p.value_peak - top).abs() < 1e-9);
    }

    #[test]
    fn peak_ties_go_to_earliest() {
        let recs = series(&[(0.0, 0.0), (1.0, 2.0), (2.0, 0.0), (3.0, 2.0), (4.0, 0.0)]);
        let p = find_peak(&recs, PeakKind::Ergotropy).unwrap();
        assert_eq!((p.t_peak, p.value_peak), (1.0, 2.0));
        assert!(find_peak(&[], PeakKind::Power).is_err());
    }
}
