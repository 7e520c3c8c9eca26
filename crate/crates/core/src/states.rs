//! Density matrices and common initial states.

use crate::error::{Error, Result};
use crate::operator::{kron, Layout, Operator};
use crate::scalar::{c, cr, Real};
use ndarray::{Array1, Array2};
use ndarray_linalg::types::Scalar;
use std::ops::Deref;

/// Whether a state lives on the system alone or on the joint
/// system-plus-ancilla space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateRole {
    System,
    Joint,
}

/// A density matrix: unit-trace Hermitian operator with a role tag.
#[derive(Clone, Debug)]
pub struct DensityMatrix<T: Real> {
    op: Operator<T>,
    role: StateRole,
}

impl<T: Real> DensityMatrix<T> {
    pub fn new(op: Operator<T>, role: StateRole) -> Result<Self> {
        let tr = op.trace();
        let drift = (tr - c::<T>(1.0, 0.0)).abs();
        if drift > T::real(1e-9).max(T::epsilon() * T::real(256.0)) {
            return Err(Error::InvalidParam(format!(
                "density matrix trace deviates from 1 by {:e}",
                drift.to_f64().unwrap_or(f64::NAN)
            )));
        }
        let herm = op.hermiticity_deviation();
        let tol = T::real(1e-10).max(T::epsilon() * T::real(64.0)) * op.max_abs().max(T::one());
        if herm > tol {
            return Err(Error::NotHermitian {
                deviation: herm.to_f64().unwrap_or(f64::NAN),
                tolerance: tol.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(DensityMatrix { op, role })
    }

    pub fn system(op: Operator<T>) -> Result<Self> {
        Self::new(op, StateRole::System)
    }

    pub fn joint(op: Operator<T>) -> Result<Self> {
        Self::new(op, StateRole::Joint)
    }

    /// Skip validation; for states produced by the integrator, which carries
    /// its own drift monitoring.
    pub fn from_evolved(op: Operator<T>, role: StateRole) -> Self {
        DensityMatrix { op, role }
    }

    /// Pure state `|ψ⟩⟨ψ|` from an unnormalized ket.
    pub fn pure(ket: &Array1<T::Complex>, layout: Layout, role: StateRole) -> Result<Self> {
        if ket.len() != layout.dim() {
            return Err(Error::DimensionMismatch {
                context: "ket length must equal layout dimension",
                lhs: ket.len(),
                rhs: layout.dim(),
            });
        }
        let norm2: T = ket.iter().map(|z| z.abs() * z.abs()).sum();
        if norm2 <= T::zero() {
            return Err(Error::InvalidParam("zero ket".into()));
        }
        let d = ket.len();
        let mut m = Array2::zeros((d, d));
        for i in 0..d {
            for j in 0..d {
                m[(i, j)] = ket[i] * ket[j].conj() / cr::<T>(norm2);
            }
        }
        Ok(DensityMatrix {
            op: Operator::new(m, layout)?,
            role,
        })
    }

    pub fn op(&self) -> &Operator<T> {
        &self.op
    }

    pub fn into_op(self) -> Operator<T> {
        self.op
    }

    pub fn role(&self) -> StateRole {
        self.role
    }

    /// `ρ ⊗ ancilla`, producing a joint state.
    pub fn tensor_ancilla(&self, ancilla: &Operator<T>) -> DensityMatrix<T> {
        DensityMatrix {
            op: kron(&self.op, ancilla),
            role: StateRole::Joint,
        }
    }

    /// Smallest eigenvalue, for positivity monitoring.
    pub fn min_eigenvalue(&self) -> Result<T> {
        let (w, _) = self.op.hermitian_eigh()?;
        Ok(w[0])
    }
}

impl<T: Real> Deref for DensityMatrix<T> {
    type Target = Operator<T>;
    fn deref(&self) -> &Operator<T> {
        &self.op
    }
}

/// Computational-basis ket `|index⟩`.
pub fn basis_ket<T: Real>(layout: &Layout, index: usize) -> Array1<T::Complex> {
    let d = layout.dim();
    assert!(index < d, "basis index out of range");
    let mut v = Array1::zeros(d);
    v[index] = c::<T>(1.0, 0.0);
    v
}

/// `|0...0⟩⟨0...0|` on the given layout.
pub fn all_zeros_state<T: Real>(layout: &Layout, role: StateRole) -> DensityMatrix<T> {
    let ket = basis_ket::<T>(layout, 0);
    DensityMatrix::pure(&ket, layout.clone(), role).expect("basis ket is normalized")
}

/// Qubit `|+⟩⟨+|`.
pub fn plus_state<T: Real>() -> Operator<T> {
    let half = c::<T>(0.5, 0.0);
    let m = Array2::from_elem((2, 2), half);
    Operator::new(m, Layout::single(2)).expect("2x2")
}

/// Qutrit `|χ⟩⟨χ|` with `|χ⟩ = (|1⟩ + |2⟩)/√2` on the first two levels.
pub fn chi_state<T: Real>() -> Operator<T> {
    let half = c::<T>(0.5, 0.0);
    let mut m = Array2::zeros((3, 3));
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = half;
        }
    }
    Operator::new(m, Layout::single(3)).expect("3x3")
}

/// Maximally mixed state on a layout.
pub fn maximally_mixed<T: Real>(layout: &Layout, role: StateRole) -> DensityMatrix<T> {
    let d = layout.dim();
    let op = Operator::identity(layout.clone()).scaled(c::<T>(1.0 / d as f64, 0.0));
    DensityMatrix { op, role }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_state_normalizes() {
        let layout = Layout::qubits(1);
        let mut ket = basis_ket::<f64>(&layout, 0);
        ket[1] = c::<f64>(1.0, 0.0);
        let dm = DensityMatrix::pure(&ket, layout, StateRole::System).unwrap();
        assert!((dm.op().trace() - c::<f64>(1.0, 0.0)).abs() < 1e-15);
        assert!(dm.op().max_abs_diff(&plus_state()) < 1e-15);
    }

    #[test]
    fn validation_rejects_bad_trace() {
        let op = Operator::<f64>::identity(Layout::qubits(1));
        assert!(DensityMatrix::system(op).is_err());
    }

    #[test]
    fn chi_state_has_no_third_level_weight() {
        let chi = chi_state::<f64>();
        assert_eq!(chi.data()[(2, 2)], c::<f64>(0.0, 0.0));
        assert!((chi.trace() - c::<f64>(1.0, 0.0)).abs() < 1e-15);
    }
}
