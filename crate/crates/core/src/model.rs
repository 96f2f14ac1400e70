//! Battery Hamiltonians and the empty-battery state.
//!
//! * charging: `Ω(σx⊗I + I⊗σx)`
//! * interaction: `J[(1+γ)σx⊗σx + (1−γ)σy⊗σy + Δσz⊗σz] + D(σx⊗σy − σy⊗σx)`
//! * free: `ω₀(σz⊗I + I⊗σz)`
//!
//! `D` is measured in the same energy units as `J` and `Ω`. Negative `J` and
//! `D` are accepted but have not been studied.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{kron, pauli, ComplexMatrix, StateVector};

/// Physical parameters of the two-cell battery (ħ = 1).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    /// Exchange coupling `J`.
    #[serde(rename = "J")]
    pub j: f64,
    /// XY anisotropy `γ`.
    pub gamma: f64,
    /// Z anisotropy `Δ`.
    pub delta: f64,
    /// DM strength `D`.
    #[serde(rename = "D")]
    pub d: f64,
    /// Charging field `Ω`; sets the unit of time.
    pub omega: f64,
    /// Larmor frequency `ω₀`.
    pub omega0: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        Self {
            j: 1.0,
            gamma: 0.0,
            delta: 0.0,
            d: 0.0,
            omega: 1.0,
            omega0: 1.0,
        }
    }
}

impl ModelParams {
    /// Ising chain (`γ = 1`, `Δ = 0`) with `J = Ω = ω₀ = 1`.
    pub fn ising(d: f64) -> Self {
        Self {
            gamma: 1.0,
            d,
            ..Self::default()
        }
    }

    /// XXZ chain (`γ = 0`) with `J = Ω = ω₀ = 1`.
    pub fn xxz(delta: f64, d: f64) -> Self {
        Self {
            delta,
            d,
            ..Self::default()
        }
    }

    /// XYZ chain with `J = Ω = ω₀ = 1`.
    pub fn xyz(gamma: f64, delta: f64, d: f64) -> Self {
        Self {
            gamma,
            delta,
            d,
            ..Self::default()
        }
    }

    /// Same field and Larmor frequency, cells decoupled (`J = D = 0`).
    pub fn parallel(&self) -> Self {
        Self {
            j: 0.0,
            d: 0.0,
            ..*self
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("J", self.j),
            ("gamma", self.gamma),
            ("delta", self.delta),
            ("D", self.d),
            ("omega", self.omega),
            ("omega0", self.omega0),
        ];
        for (name, value) in fields {
            if !value.is_finite() {
                return Err(Error::param(name, format!("must be finite, got {value}")));
            }
        }
        if self.omega <= 0.0 {
            return Err(Error::param("omega", format!("must be positive, got {}", self.omega)));
        }
        if self.omega0 <= 0.0 {
            return Err(Error::param(
                "omega0",
                format!("must be positive, got {}", self.omega0),
            ));
        }
        Ok(())
    }
}

/// Named regimes of the interaction Hamiltonian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelPreset {
    /// `γ = 1`, `Δ = 0`.
    Ising,
    /// `γ = 0`. `D` stays free so DM-extended XXZ chains are covered.
    Xxz,
    /// `γ ≠ 0` and `Δ ≠ 0`.
    Xyz,
    Custom,
}

impl ModelPreset {
    pub fn name(self) -> &'static str {
        match self {
            ModelPreset::Ising => "ising",
            ModelPreset::Xxz => "xxz",
            ModelPreset::Xyz => "xyz",
            ModelPreset::Custom => "custom",
        }
    }

    /// Rejects parameters that contradict the preset's pinned values.
    pub fn check(self, params: &ModelParams) -> Result<()> {
        let violation = |reason: String| {
            Err(Error::PresetViolation {
                preset: self.name().into(),
                reason,
            })
        };
        match self {
            ModelPreset::Ising => {
                if params.gamma != 1.0 {
                    return violation(format!("gamma must be 1, got {}", params.gamma));
                }
                if params.delta != 0.0 {
                    return violation(format!("delta must be 0, got {}", params.delta));
                }
            }
            ModelPreset::Xxz => {
                if params.gamma != 0.0 {
                    return violation(format!("gamma must be 0, got {}", params.gamma));
                }
            }
            ModelPreset::Xyz => {
                if params.gamma == 0.0 {
                    return violation("gamma must be nonzero".into());
                }
                if params.delta == 0.0 {
                    return violation("delta must be nonzero".into());
                }
            }
            ModelPreset::Custom => {}
        }
        Ok(())
    }
}

impl fmt::Display for ModelPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelPreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ising" => Ok(ModelPreset::Ising),
            "xxz" => Ok(ModelPreset::Xxz),
            "xyz" => Ok(ModelPreset::Xyz),
            "custom" => Ok(ModelPreset::Custom),
            other => Err(Error::Config(format!(
                "unknown model `{other}` (expected ising, xxz, xyz or custom)"
            ))),
        }
    }
}

/// The four Hamiltonians of one battery configuration.
#[derive(Clone, Debug)]
pub struct HamiltonianSet {
    pub h_ch: ComplexMatrix,
    pub h_int: ComplexMatrix,
    pub h_total: ComplexMatrix,
    pub h_free: ComplexMatrix,
}

fn two_site(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    kron(a, b).expect("Pauli factors are 2x2")
}

/// `Ω(σx⊗I + I⊗σx)`. Does not validate `params`.
pub fn build_charging(params: &ModelParams) -> ComplexMatrix {
    let id = pauli::identity();
    let x = pauli::x();
    (&two_site(&x, &id) + &two_site(&id, &x)).scale_real(params.omega)
}

/// Heisenberg exchange plus the z-aligned DM term. Does not validate `params`.
pub fn build_interaction(params: &ModelParams) -> ComplexMatrix {
    let [x, y, z] = pauli::xyz();
    let exchange = &(&two_site(&x, &x).scale_real(1.0 + params.gamma)
        + &two_site(&y, &y).scale_real(1.0 - params.gamma))
        + &two_site(&z, &z).scale_real(params.delta);
    let dm = &two_site(&x, &y) - &two_site(&y, &x);
    &exchange.scale_real(params.j) + &dm.scale_real(params.d)
}

/// `ω₀(σz⊗I + I⊗σz)`. Does not validate `params`.
pub fn build_free(params: &ModelParams) -> ComplexMatrix {
    let id = pauli::identity();
    let z = pauli::z();
    (&two_site(&z, &id) + &two_site(&id, &z)).scale_real(params.omega0)
}

/// Validates `params` against `preset` and assembles every Hamiltonian.
pub fn build_all(params: &ModelParams, preset: ModelPreset) -> Result<HamiltonianSet> {
    params.validate()?;
    preset.check(params)?;
    let h_ch = build_charging(params);
    let h_int = build_interaction(params);
    let h_total = &h_ch + &h_int;
    let h_free = build_free(params);
    for h in [&h_ch, &h_int, &h_total, &h_free] {
        h.ensure_hermitian()?;
    }
    Ok(HamiltonianSet {
        h_ch,
        h_int,
        h_total,
        h_free,
    })
}

/// The empty battery `|↓↓⟩`.
pub fn initial_state() -> StateVector {
    StateVector::basis(4, 3)
}

/// The fully charged battery `|↑↑⟩`.
pub fn charged_state() -> StateVector {
    StateVector::basis(4, 0)
}
