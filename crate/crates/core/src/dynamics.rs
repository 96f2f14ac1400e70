//! Exact unitary evolution of the battery state.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, Propagator, StateVector};

/// Uniform time samples including both endpoints, in units of 1/Ω.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TimeGrid {
    pub t_start: f64,
    pub t_end: f64,
    pub steps: usize,
}

impl TimeGrid {
    pub fn new(t_start: f64, t_end: f64, steps: usize) -> Result<Self> {
        let grid = Self {
            t_start,
            t_end,
            steps,
        };
        grid.validate()?;
        Ok(grid)
    }

    /// `[0, t_end]`.
    pub fn from_zero(t_end: f64, steps: usize) -> Result<Self> {
        Self::new(0.0, t_end, steps)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.t_start.is_finite() && self.t_start >= 0.0) {
            return Err(Error::param(
                "t_start",
                format!("must be finite and nonnegative, got {}", self.t_start),
            ));
        }
        if !(self.t_end.is_finite() && self.t_end > self.t_start) {
            return Err(Error::param(
                "t_end",
                format!("must be finite and exceed t_start, got {}", self.t_end),
            ));
        }
        if self.steps < 2 {
            return Err(Error::param(
                "steps",
                format!("need at least 2 grid points, got {}", self.steps),
            ));
        }
        Ok(())
    }

    pub fn spacing(&self) -> f64 {
        (self.t_end - self.t_start) / (self.steps - 1) as f64
    }

    pub fn time(&self, k: usize) -> f64 {
        if k + 1 == self.steps {
            self.t_end
        } else {
            self.t_start + k as f64 * self.spacing()
        }
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.steps).map(|k| self.time(k))
    }

    pub fn len(&self) -> usize {
        self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps == 0
    }
}

/// States `|ψ(t_k)⟩` on a time grid.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub grid: TimeGrid,
    pub states: Vec<StateVector>,
}

impl Trajectory {
    pub fn iter(&self) -> impl Iterator<Item = (f64, &StateVector)> + '_ {
        self.grid.times().zip(&self.states)
    }
}

/// `|ψ(t_k)⟩ = exp(−iHt_k)|ψ₀⟩` for every grid time.
pub fn evolve(h_total: &ComplexMatrix, psi0: &StateVector, grid: &TimeGrid) -> Result<Trajectory> {
    grid.validate()?;
    if h_total.dim() != psi0.dim() {
        return Err(Error::DimensionMismatch(format!(
            "Hamiltonian is {0}x{0} but the state has {1} components",
            h_total.dim(),
            psi0.dim()
        )));
    }
    let propagator = Propagator::new(h_total)?;
    let states = grid.times().map(|t| propagator.evolve(t, psi0)).collect();
    Ok(Trajectory { grid: *grid, states })
}

/// Time for uncoupled cells to reach full charge: `π/(2Ω)`.
pub fn t_min(omega: f64) -> Result<f64> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::param("omega", format!("must be positive, got {omega}")));
    }
    Ok(FRAC_PI_2 / omega)
}

/// Closed-form ergotropy of two uncoupled cells started empty:
/// `4ω₀ sin²(Ωt)`, where `4ω₀` is the spectral width of the free Hamiltonian.
pub fn parallel_ergotropy(t: f64, omega: f64, omega0: f64) -> f64 {
    4.0 * omega0 * (omega * t).sin().powi(2)
}
