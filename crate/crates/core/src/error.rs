//! Crate-wide error type.

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("layout mismatch: expected {expected}, found {found}")]
    LayoutMismatch { expected: String, found: String },

    #[error("dimension mismatch: {context} (lhs {lhs}, rhs {rhs})")]
    DimensionMismatch {
        context: &'static str,
        lhs: usize,
        rhs: usize,
    },

    #[error("site index {site} out of range for layout with {factors} factors")]
    SiteOutOfRange { site: usize, factors: usize },

    #[error("operator is not Hermitian: max |A - A\u{2020}| = {deviation:e} exceeds {tolerance:e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("matrix has a significantly negative eigenvalue {lambda_min:e} (tolerance {tolerance:e})")]
    NegativeEigenvalue { lambda_min: f64, tolerance: f64 },

    #[error("eigendecomposition failed: {0}")]
    Eigensolver(String),

    #[error("integration exceeded the step limit of {max_steps}")]
    StepLimitExceeded { max_steps: usize },

    #[error("non-finite value encountered during integration at t = {t}")]
    NonFinite { t: f64 },

    #[error("measurement probability {p:e} is negative beyond tolerance; state is not physical")]
    NonPhysicalProbability { p: f64 },

    #[error("expectation value has imaginary residue {imag:e} beyond {tolerance:e}")]
    NonRealExpectation { imag: f64, tolerance: f64 },

    #[error("denominator {value:e} vanishes; decay exponent is unrecoverable from this state")]
    VanishingDenominator { value: f64 },

    #[error("no outcomes supplied")]
    EmptyOutcomes,

    #[error("system jump {index} is not local to a single site (support {support:?})")]
    NonLocalJump { index: usize, support: Vec<usize> },

    #[error("ancilla jump {index} is not post-processing-correctable (block contribution not proportional to W_ij)")]
    UncorrectableAncillaNoise { index: usize },

    #[error("stochastic coupling {index} is not Hermitian; the unraveling assumes Hermitian couplings")]
    NonHermitianCoupling { index: usize },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),
}
