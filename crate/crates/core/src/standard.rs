//! Standard local operators: Paulis, ladder operators, projectors, and the
//! qutrit analogues used by the three-level ancilla protocol.

use crate::operator::{Layout, Operator};
use crate::scalar::{c, Real};
use ndarray::Array2;

pub fn identity_n<T: Real>(d: usize) -> Operator<T> {
    Operator::identity(Layout::single(d))
}

pub fn pauli_x<T: Real>() -> Operator<T> {
    ketbra(2, 0, 1).add_ketbra(1, 0, c::<T>(1.0, 0.0))
}

pub fn pauli_y<T: Real>() -> Operator<T> {
    ketbra_scaled(2, 0, 1, c::<T>(0.0, -1.0)).add_ketbra(1, 0, c::<T>(0.0, 1.0))
}

pub fn pauli_z<T: Real>() -> Operator<T> {
    ketbra(2, 0, 0).add_ketbra(1, 1, c::<T>(-1.0, 0.0))
}

/// Lowering operator `σ− = |0⟩⟨1|` (so `σ−†σ− = |1⟩⟨1|`).
pub fn sigma_minus<T: Real>() -> Operator<T> {
    ketbra(2, 0, 1)
}

/// Raising operator `σ+ = |1⟩⟨0|`.
pub fn sigma_plus<T: Real>() -> Operator<T> {
    ketbra(2, 1, 0)
}

/// `|i⟩⟨i|` on a single factor of dimension `d`.
pub fn projector<T: Real>(d: usize, i: usize) -> Operator<T> {
    ketbra(d, i, i)
}

/// `|i⟩⟨j|` on a single factor of dimension `d`.
pub fn ketbra<T: Real>(d: usize, i: usize, j: usize) -> Operator<T> {
    ketbra_scaled(d, i, j, c::<T>(1.0, 0.0))
}

fn ketbra_scaled<T: Real>(d: usize, i: usize, j: usize, amp: T::Complex) -> Operator<T> {
    assert!(i < d && j < d, "ketbra index out of range");
    let mut m = Array2::zeros((d, d));
    m[(i, j)] = amp;
    Operator::new(m, Layout::single(d)).expect("square by construction")
}

/// Qutrit `σ̃z = |1⟩⟨1| − |2⟩⟨2|` in the paper's level labels `{1,2,3}`
/// (indices `{0,1,2}` here); the third level is untouched.
pub fn qutrit_tilde_z<T: Real>() -> Operator<T> {
    ketbra(3, 0, 0).add_ketbra(1, 1, c::<T>(-1.0, 0.0))
}

/// Qutrit `σ̃x = |1⟩⟨2| + |2⟩⟨1|` on the first two levels.
pub fn qutrit_tilde_x<T: Real>() -> Operator<T> {
    ketbra(3, 0, 1).add_ketbra(1, 0, c::<T>(1.0, 0.0))
}

impl<T: Real> Operator<T> {
    fn add_ketbra(mut self, i: usize, j: usize, amp: T::Complex) -> Self {
        let d = self.dim();
        assert!(i < d && j < d);
        let mut data = self.data().clone();
        data[(i, j)] += amp;
        self = Operator::new(data, self.layout().clone()).expect("dims unchanged");
        self
    }
}
