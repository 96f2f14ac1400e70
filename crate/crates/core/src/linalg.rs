//! Dense complex linear algebra for one- and two-qubit operators.
//!
//! Two-qubit operators use the computational basis ordered
//! `{|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩}` with `σz|↑⟩ = +|↑⟩`; the first tensor factor is
//! site A.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Maximum `|M[i][j] − conj(M[j][i])|` accepted for a Hermitian matrix.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Allowed `|Tr ρ − 1|` for a density matrix.
pub const TRACE_TOL: f64 = 1e-10;
/// Smallest eigenvalue accepted for a positive semidefinite density matrix.
pub const PSD_TOL: f64 = 1e-10;
/// Allowed `|‖ψ‖ − 1|` for a state vector.
pub const NORM_TOL: f64 = 1e-10;

const MAX_SWEEPS: usize = 64;

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
const ONE: C64 = C64 { re: 1.0, im: 0.0 };
const I: C64 = C64 { re: 0.0, im: 1.0 };

/// Dense square complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Builds a matrix from row-major entries; `data.len()` must be a perfect square.
    pub fn from_vec(data: Vec<C64>) -> Result<Self> {
        let dim = (data.len() as f64).sqrt().round() as usize;
        if dim == 0 || dim * dim != data.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} entries do not form a square matrix",
                data.len()
            )));
        }
        Ok(Self { dim, data })
    }

    pub fn from_rows<const N: usize>(rows: [[C64; N]; N]) -> Self {
        Self {
            dim: N,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = C64::new(d, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(C64::new(factor, 0.0))
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// `max |M[i][j] − conj(M[j][i])|`.
    pub fn hermiticity_deviation(&self) -> f64 {
        let n = self.dim;
        let mut dev = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermiticity_deviation() <= HERMITIAN_TOL
    }

    pub fn ensure_hermitian(&self) -> Result<()> {
        let deviation = self.hermiticity_deviation();
        if deviation.is_nan() || deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(())
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.dim, v.len(), "dimension mismatch");
        let n = self.dim;
        (0..n)
            .map(|i| (0..n).map(|k| self[(i, k)] * v[k]).sum())
            .collect()
    }

    /// `Tr(self · other)` without forming the product.
    pub fn trace_product(&self, other: &Self) -> C64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut acc = ZERO;
        for i in 0..n {
            for k in 0..n {
                acc += self[(i, k)] * other[(k, i)];
            }
        }
        acc
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Unit-norm complex state vector.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amps: Vec<C64>,
}

impl StateVector {
    /// Wraps `amps`, rejecting vectors whose norm is not 1 within [`NORM_TOL`].
    pub fn new(amps: Vec<C64>) -> Result<Self> {
        let norm = norm(&amps);
        if amps.is_empty() || !norm.is_finite() || (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidState(format!(
                "norm {norm} of a {}-component vector is not 1",
                amps.len()
            )));
        }
        Ok(Self { amps })
    }

    /// Scales `amps` to unit norm.
    pub fn normalized(amps: Vec<C64>) -> Result<Self> {
        let n = norm(&amps);
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::InvalidState("cannot normalize a zero vector".into()));
        }
        Ok(Self {
            amps: amps.into_iter().map(|z| z / n).collect(),
        })
    }

    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index out of range");
        let mut amps = vec![ZERO; dim];
        amps[index] = ONE;
        Self { amps }
    }

    pub(crate) fn from_raw(amps: Vec<C64>) -> Self {
        Self { amps }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amps)
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> C64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn density_matrix(&self) -> ComplexMatrix {
        let n = self.amps.len();
        let mut rho = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                rho[(i, j)] = self.amps[i] * self.amps[j].conj();
            }
        }
        rho
    }

    /// Real part of `⟨ψ|H|ψ⟩`.
    pub fn expectation(&self, h: &ComplexMatrix) -> f64 {
        let hpsi = h.apply(&self.amps);
        self.amps
            .iter()
            .zip(&hpsi)
            .map(|(a, b)| a.conj() * b)
            .sum::<C64>()
            .re
    }
}

fn norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Single-qubit Pauli operators and the 2×2 identity.
pub mod pauli {
    use super::*;

    pub fn identity() -> ComplexMatrix {
        ComplexMatrix::identity(2)
    }

    pub fn x() -> ComplexMatrix {
        ComplexMatrix::from_rows([[ZERO, ONE], [ONE, ZERO]])
    }

    pub fn y() -> ComplexMatrix {
        ComplexMatrix::from_rows([[ZERO, -I], [I, ZERO]])
    }

    pub fn z() -> ComplexMatrix {
        ComplexMatrix::from_rows([[ONE, ZERO], [ZERO, -ONE]])
    }

    /// `[σx, σy, σz]`.
    pub fn xyz() -> [ComplexMatrix; 3] {
        [x(), y(), z()]
    }
}

/// Kronecker product of two single-qubit operators.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.dim != 2 || b.dim != 2 {
        return Err(Error::DimensionMismatch(format!(
            "kron expects two 2x2 factors, got {}x{} and {}x{}",
            a.dim, a.dim, b.dim, b.dim
        )));
    }
    let mut out = ComplexMatrix::zeros(4);
    for (i1, j1, i2, j2) in (0..2)
        .flat_map(|i1| (0..2).map(move |j1| (i1, j1)))
        .flat_map(|(i1, j1)| (0..4).map(move |k| (i1, j1, k / 2, k % 2)))
    {
        out[(2 * i1 + i2, 2 * j1 + j2)] = a[(i1, j1)] * b[(i2, j2)];
    }
    Ok(out)
}

/// Spectral decomposition `M = V Λ V†` of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Column `k` is the eigenvector of `eigenvalues[k]`.
    pub eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let lambda = ComplexMatrix::from_real_diagonal(&self.eigenvalues);
        let v = &self.eigenvectors;
        &(v * &lambda) * &v.adjoint()
    }
}

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
pub fn eigh(m: &ComplexMatrix) -> Result<EigenDecomposition> {
    m.ensure_hermitian()?;
    let n = m.dim;
    // Symmetrize so rounding-level asymmetry does not leak into the rotations.
    let mut a = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            a[(i, j)] = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
        }
    }
    let mut v = ComplexMatrix::identity(n);

    let total: f64 = a.data.iter().map(|z| z.norm_sqr()).sum();
    let threshold = (f64::EPSILON * f64::EPSILON) * total;
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_sqr(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_sqr(&a) > threshold {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n);
    for (col, &k) in order.iter().enumerate() {
        for row in 0..n {
            eigenvectors[(row, col)] = v[(row, k)];
        }
    }
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_sqr(a: &ComplexMatrix) -> f64 {
    let n = a.dim;
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s
}

/// Annihilates `a[p][q]` with `a ← J† a J`, `v ← v J`, where
/// `J = diag(1, e^{−iφ}) · [[c, s], [−s, c]]` on the `(p, q)` plane and
/// `φ = arg a[p][q]`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let n = a.dim;
    let phase = apq / r; // e^{iφ}
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta >= 0.0 {
        1.0 / (theta + (theta * theta + 1.0).sqrt())
    } else {
        -1.0 / (-theta + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c + akq * jqp;
        a[(k, q)] = akp * s + akq * jqq;
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c + vkq * jqp;
        v[(k, q)] = vkp * s + vkq * jqq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c + aqk * jqp.conj();
        a[(q, k)] = apk * s + aqk * jqq.conj();
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
}

/// Time-evolution operator `exp(−iHt)` for a fixed Hermitian `H`.
///
/// The eigendecomposition is computed once and reused for every time.
#[derive(Clone, Debug)]
pub struct Propagator {
    eig: EigenDecomposition,
}

impl Propagator {
    pub fn new(h: &ComplexMatrix) -> Result<Self> {
        Ok(Self { eig: eigh(h)? })
    }

    pub fn eigen(&self) -> &EigenDecomposition {
        &self.eig
    }

    fn phases(&self, t: f64) -> Vec<C64> {
        self.eig
            .eigenvalues
            .iter()
            .map(|&e| C64::from_polar(1.0, -e * t))
            .collect()
    }

    /// `V exp(−iΛt) V†`.
    pub fn unitary(&self, t: f64) -> ComplexMatrix {
        let v = &self.eig.eigenvectors;
        let n = v.dim;
        let phases = self.phases(t);
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = (0..n).map(|k| v[(i, k)] * phases[k] * v[(j, k)].conj()).sum();
            }
        }
        out
    }

    /// `exp(−iHt)|ψ⟩` without forming the full unitary.
    pub fn evolve(&self, t: f64, psi: &StateVector) -> StateVector {
        if t == 0.0 {
            return psi.clone();
        }
        let v = &self.eig.eigenvectors;
        let n = v.dim;
        let phases = self.phases(t);
        let coeffs: Vec<C64> = (0..n)
            .map(|k| phases[k] * (0..n).map(|i| v[(i, k)].conj() * psi.amps[i]).sum::<C64>())
            .collect();
        StateVector::from_raw(
            (0..n)
                .map(|i| (0..n).map(|k| v[(i, k)] * coeffs[k]).sum())
                .collect(),
        )
    }
}

/// `exp(−i m t)` for Hermitian `m`, computed spectrally.
pub fn expm_unitary(m: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    Ok(Propagator::new(m)?.unitary(t))
}

/// Checks Hermiticity, unit trace and positive semidefiniteness.
pub fn validate_density_matrix(rho: &ComplexMatrix) -> Result<()> {
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
    let lowest = eigh(rho)?.eigenvalues[0];
    if lowest < -PSD_TOL {
        return Err(Error::InvalidDensityMatrix(format!(
            "negative eigenvalue {lowest:e}"
        )));
    }
    Ok(())
}

/// One of the two qubits of a two-qubit register.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Site {
    A,
    B,
}

/// Reduced density matrix of the `keep` qubit.
pub fn partial_trace(rho: &ComplexMatrix, keep: Site) -> Result<ComplexMatrix> {
    if rho.dim != 4 {
        return Err(Error::DimensionMismatch(format!(
            "partial trace expects a 4x4 matrix, got {}x{}",
            rho.dim, rho.dim
        )));
    }
    validate_density_matrix(rho)?;
    Ok(partial_trace_unchecked(rho, keep))
}

pub(crate) fn partial_trace_unchecked(rho: &ComplexMatrix, keep: Site) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(2);
    for i in 0..2 {
        for j in 0..2 {
            out[(i, j)] = (0..2)
                .map(|k| match keep {
                    Site::A => rho[(2 * i + k, 2 * j + k)],
                    Site::B => rho[(2 * k + i, 2 * k + j)],
                })
                .sum();
        }
    }
    out
}

/// `Tr(ρ²)` of a qubit density matrix.
pub fn purity(rho: &ComplexMatrix) -> Result<f64> {
    if rho.dim != 2 {
        return Err(Error::DimensionMismatch(format!(
            "purity expects a 2x2 matrix, got {}x{}",
            rho.dim, rho.dim
        )));
    }
    validate_density_matrix(rho)?;
    Ok(purity_unchecked(rho))
}

pub(crate) fn purity_unchecked(rho: &ComplexMatrix) -> f64 {
    rho.trace_product(rho).re
}
