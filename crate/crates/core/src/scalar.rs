//! Scalar abstraction for the numerical core.
//!
//! All dense matrices carry complex entries; the crate is generic over the
//! underlying *real* precision through [`Real`]. `f64` is the working
//! precision (all default tolerances are stated for it); `f32` is available
//! through the same API for quick low-precision sweeps.

use ndarray::ScalarOperand;
use ndarray_linalg::types::{Lapack, Scalar};
use num_complex::Complex;
use num_traits::{Float, FromPrimitive, NumAssign};
use std::fmt::{Debug, Display};
use std::iter::Sum;

/// Real scalar type backing all matrix storage and tolerances.
pub trait Real:
    Float + FromPrimitive + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// The matching complex type (`Complex<Self>`), constrained so that
    /// LAPACK-backed routines are available for it.
    type Complex: Scalar<Real = Self, Complex = Self::Complex>
        + Lapack
        + ScalarOperand
        + NumAssign
        + Sum
        + Send
        + Sync
        + 'static;

    /// Convert an `f64` literal (tolerances, physical constants) into `Self`.
    fn real(x: f64) -> Self {
        Self::from_f64(x).expect("constant representable in scalar type")
    }

    /// Build a complex number from real and imaginary parts.
    fn complex(re: Self, im: Self) -> Self::Complex {
        <Self::Complex as Scalar>::complex(re, im)
    }
}

impl Real for f32 {
    type Complex = Complex<f32>;
}

impl Real for f64 {
    type Complex = Complex<f64>;
}

/// Complex literal from `f64` parts.
pub fn c<T: Real>(re: f64, im: f64) -> T::Complex {
    T::complex(T::real(re), T::real(im))
}

/// Purely real complex value.
pub fn cr<T: Real>(re: T) -> T::Complex {
    T::complex(re, T::zero())
}

/// The imaginary unit.
pub fn ci<T: Real>() -> T::Complex {
    T::complex(T::zero(), T::one())
}
