//! Simulation of two-cell quantum batteries built on Heisenberg spin chains
//! with a Dzyaloshinskii–Moriya (DM) interaction along z.
//!
//! The crate is layered bottom-up:
//!
//! * [`linalg`]: dense complex 2×2 / 4×4 algebra (Pauli operators, Kronecker
//!   products, Hermitian eigensolver, spectral propagator, partial trace).
//! * [`model`]: charging, interaction, total and free Hamiltonians plus the
//!   empty-battery state `|↓↓⟩`.
//! * [`dynamics`]: exact unitary evolution on a uniform time grid and the
//!   closed-form parallel-charging baseline.
//! * [`observables`]: ergotropy, charging power, first-order coherence,
//!   correlation matrix and maximal three-setting steering violation.
//! * [`runner`]: scenario configuration, parameter sweeps, the
//!   parallel-vs-collective comparison, figure presets and CSV/JSON output.
//!
//! Units: ħ = 1, times in 1/Ω, energies in the units of Ω and ω₀.

pub mod dynamics;
pub mod error;
pub mod linalg;
pub mod model;
pub mod observables;
pub mod runner;

pub use error::{Error, Result};
