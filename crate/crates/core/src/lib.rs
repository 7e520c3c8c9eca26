//! Continuous-time noise mitigation for analogue quantum simulation.
//!
//! This crate simulates noisy Lindblad dynamics of a quantum system coupled
//! to one or more ancillas under engineered joint dissipation, and recovers
//! noiseless expectation values by classical post-processing. It provides:
//!
//! - [`operator`]: dense complex operator algebra with tensor-factor layouts;
//! - [`engine`]: Lindblad master-equation integration (fixed-step RK4 and
//!   adaptive RK45), time-dependent jump amplitudes, ancilla-block extraction;
//! - [`mitigation`]: construction of the mitigation protocols (single-qubit,
//!   projector-based, multi-ancilla, qutrit ancilla), decay constants,
//!   ancilla-noise corrections, and mitigated expectation values;
//! - [`sampling`]: finite-shot simulation of joint measurements, unbiased
//!   mitigated estimators, and sampling-overhead diagnostics;
//! - [`stochastic`]: stochastic-Hamiltonian unraveling of the correlated
//!   dissipators for Hermitian couplings;
//! - [`scenarios`]: end-to-end spin-chain experiments (Heisenberg
//!   magnetization, Loschmidt echo, Floquet power spectrum) with CSV output.
//!
//! The numerical core is generic over the real precision via [`scalar::Real`];
//! `f64` is the working precision and concrete aliases are exported at the
//! crate root.

// Link the system OpenBLAS for the LAPACK-backed routines.
extern crate openblas_src;

pub mod engine;
pub mod error;
pub mod mitigation;
pub mod operator;
pub mod sampling;
pub mod scalar;
pub mod scenarios;
pub mod standard;
pub mod states;
pub mod stochastic;

pub use error::{Error, Result};
pub use operator::{
    commutator, dissipator_apply, embed_local, expectation, expectation_real, kron, Layout,
    Operator,
};
pub use scalar::Real;
pub use states::{DensityMatrix, StateRole};

/// Working-precision aliases.
pub type Operator64 = Operator<f64>;
pub type DensityMatrix64 = DensityMatrix<f64>;

/// Low-precision aliases.
pub type Operator32 = Operator<f32>;
pub type DensityMatrix32 = DensityMatrix<f32>;
