//! Dense complex operator algebra with explicit tensor-factor bookkeeping.
//!
//! Every [`Operator`] is a square complex matrix together with a [`Layout`]:
//! the ordered list of local Hilbert-space dimensions whose product equals the
//! matrix dimension. Carrying the layout on the value turns tensor-wiring
//! mistakes into checkable dimension errors instead of silent corruption.
//!
//! Index convention: the *last* factor varies fastest, i.e.
//! `(A ⊗ B)[i·dB + k, j·dB + l] = A[i,j]·B[k,l]`.

use crate::error::{Error, Result};
use crate::scalar::{cr, Real};
use ndarray::{Array1, Array2, ArrayView2};
use ndarray_linalg::types::Scalar;
use ndarray_linalg::{Eigh, UPLO};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Ordered list of local dimensions of a tensor-product space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layout(Vec<usize>);

impl Layout {
    pub fn new(factors: Vec<usize>) -> Result<Self> {
        if factors.is_empty() || factors.iter().any(|&d| d == 0) {
            return Err(Error::InvalidParam(
                "layout must be a nonempty list of positive dimensions".into(),
            ));
        }
        Ok(Layout(factors))
    }

    /// Layout of `n` qubits.
    pub fn qubits(n: usize) -> Self {
        Layout(vec![2; n.max(1)])
    }

    /// Single factor of dimension `d`.
    pub fn single(d: usize) -> Self {
        Layout(vec![d])
    }

    /// Total Hilbert-space dimension (product of the factors).
    pub fn dim(&self) -> usize {
        self.0.iter().product()
    }

    pub fn factors(&self) -> &[usize] {
        &self.0
    }

    pub fn num_factors(&self) -> usize {
        self.0.len()
    }

    /// Concatenation `self ⊗ other`.
    pub fn concat(&self, other: &Layout) -> Layout {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Layout(v)
    }

    /// Split off the last factor: `(prefix, last_dim)`.
    pub fn split_last(&self) -> Result<(Layout, usize)> {
        if self.0.len() < 2 {
            return Err(Error::InvalidParam(
                "layout has no factor to split off".into(),
            ));
        }
        let (last, rest) = self.0.split_last().expect("nonempty");
        Ok((Layout(rest.to_vec()), *last))
    }
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Dense complex operator on a tensor-product space.
#[derive(Clone, Debug)]
pub struct Operator<T: Real> {
    data: Array2<T::Complex>,
    layout: Layout,
}

impl<T: Real> Operator<T> {
    pub fn new(data: Array2<T::Complex>, layout: Layout) -> Result<Self> {
        let (r, c) = data.dim();
        if r != c {
            return Err(Error::DimensionMismatch {
                context: "operator matrix must be square",
                lhs: r,
                rhs: c,
            });
        }
        if r != layout.dim() {
            return Err(Error::LayoutMismatch {
                expected: format!("dim {} = {}", layout, layout.dim()),
                found: format!("matrix dim {}", r),
            });
        }
        Ok(Operator { data, layout })
    }

    /// Operator with a single-factor layout inferred from the matrix size.
    pub fn from_matrix(data: Array2<T::Complex>) -> Result<Self> {
        let d = data.nrows();
        Self::new(data, Layout::single(d))
    }

    pub fn zeros(layout: Layout) -> Self {
        let d = layout.dim();
        Operator {
            data: Array2::zeros((d, d)),
            layout,
        }
    }

    pub fn identity(layout: Layout) -> Self {
        let d = layout.dim();
        Operator {
            data: Array2::eye(d),
            layout,
        }
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn data(&self) -> &Array2<T::Complex> {
        &self.data
    }

    pub fn view(&self) -> ArrayView2<'_, T::Complex> {
        self.data.view()
    }

    pub fn into_data(self) -> Array2<T::Complex> {
        self.data
    }

    /// Reinterpret the tensor structure without touching the matrix.
    pub fn with_layout(mut self, layout: Layout) -> Result<Self> {
        if layout.dim() != self.dim() {
            return Err(Error::LayoutMismatch {
                expected: format!("dim {}", self.dim()),
                found: format!("{} (dim {})", layout, layout.dim()),
            });
        }
        self.layout = layout;
        Ok(self)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let d = self.dim();
        let mut out = Array2::zeros((d, d));
        for i in 0..d {
            for j in 0..d {
                out[(i, j)] = self.data[(j, i)].conj();
            }
        }
        Operator {
            data: out,
            layout: self.layout.clone(),
        }
    }

    pub fn trace(&self) -> T::Complex {
        self.data.diag().iter().copied().sum()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> T {
        self.data
            .iter()
            .map(|z| z.abs())
            .fold(T::zero(), |a, b| a.max(b))
    }

    pub fn scaled(&self, factor: T::Complex) -> Self {
        Operator {
            data: &self.data * factor,
            layout: self.layout.clone(),
        }
    }

    pub fn scaled_re(&self, factor: T) -> Self {
        self.scaled(cr::<T>(factor))
    }

    /// Max-abs deviation from Hermiticity.
    pub fn hermiticity_deviation(&self) -> T {
        let d = self.dim();
        let mut dev = T::zero();
        for i in 0..d {
            for j in i..d {
                let diff = self.data[(i, j)] - self.data[(j, i)].conj();
                dev = dev.max(diff.abs());
            }
        }
        dev
    }

    /// Hermiticity check at tolerance `1e-12 · max|A|` (floored by machine precision).
    pub fn is_hermitian(&self) -> bool {
        self.hermiticity_deviation() <= hermiticity_tolerance(self.max_abs())
    }

    pub fn assert_hermitian(&self) -> Result<()> {
        let dev = self.hermiticity_deviation();
        let tol = hermiticity_tolerance(self.max_abs());
        if dev <= tol {
            Ok(())
        } else {
            Err(Error::NotHermitian {
                deviation: dev.to_f64().unwrap_or(f64::NAN),
                tolerance: tol.to_f64().unwrap_or(f64::NAN),
            })
        }
    }

    /// True when all off-diagonal entries vanish to roundoff.
    pub fn is_diagonal(&self) -> bool {
        let tol = T::real(4.0) * T::epsilon() * self.max_abs();
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                if i != j && self.data[(i, j)].abs() > tol {
                    return false;
                }
            }
        }
        true
    }

    pub fn diagonal(&self) -> Array1<T::Complex> {
        self.data.diag().to_owned()
    }

    /// Eigendecomposition of a Hermitian operator; eigenvalues ascending.
    pub fn hermitian_eigh(&self) -> Result<(Array1<T>, Array2<T::Complex>)> {
        self.assert_hermitian()?;
        self.data
            .eigh(UPLO::Lower)
            .map_err(|e| Error::Eigensolver(e.to_string()))
    }

    /// Largest eigenvalue of a Hermitian operator.
    pub fn hermitian_lambda_max(&self) -> Result<T> {
        let (w, _) = self.hermitian_eigh()?;
        Ok(w[w.len() - 1])
    }

    /// Hermitian PSD square root. Eigenvalues in `[-tol, 0)` are clamped to
    /// zero; values below `-max(1e-10, 1e-6·max|A|)` are rejected.
    pub fn psd_sqrt(&self) -> Result<Self> {
        let scale = self.max_abs();
        let reject = T::real(1e-10).max(T::real(1e-6) * scale);
        if self.is_diagonal() {
            // Diagonal fast path keeps diagonal structure exact.
            self.assert_hermitian()?;
            let d = self.dim();
            let mut out = Array2::zeros((d, d));
            for i in 0..d {
                let lam = self.data[(i, i)].re();
                if lam < -reject {
                    return Err(Error::NegativeEigenvalue {
                        lambda_min: lam.to_f64().unwrap_or(f64::NAN),
                        tolerance: reject.to_f64().unwrap_or(f64::NAN),
                    });
                }
                out[(i, i)] = cr::<T>(lam.max(T::zero()).sqrt());
            }
            return Ok(Operator {
                data: out,
                layout: self.layout.clone(),
            });
        }
        let (w, v) = self.hermitian_eigh()?;
        if w[0] < -reject {
            return Err(Error::NegativeEigenvalue {
                lambda_min: w[0].to_f64().unwrap_or(f64::NAN),
                tolerance: reject.to_f64().unwrap_or(f64::NAN),
            });
        }
        let mut scaled = v.clone();
        for (k, mut col) in scaled.columns_mut().into_iter().enumerate() {
            let s = cr::<T>(w[k].max(T::zero()).sqrt());
            col.mapv_inplace(|z| z * s);
        }
        let vh = conj_transpose::<T>(&v);
        Ok(Operator {
            data: scaled.dot(&vh),
            layout: self.layout.clone(),
        })
    }

    /// `exp(z·A)` for Hermitian `A`, via eigendecomposition.
    pub fn expm_hermitian_scaled(&self, z: T::Complex) -> Result<Self> {
        let (w, v) = self.hermitian_eigh()?;
        let mut scaled = v.clone();
        for (k, mut col) in scaled.columns_mut().into_iter().enumerate() {
            let f = (z * cr::<T>(w[k])).exp();
            col.mapv_inplace(|x| x * f);
        }
        let vh = conj_transpose::<T>(&v);
        Ok(Operator {
            data: scaled.dot(&vh),
            layout: self.layout.clone(),
        })
    }

    /// Frobenius inner product `⟨self, other⟩ = Σ conj(self)·other`.
    pub fn inner(&self, other: &Self) -> T::Complex {
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a.conj() * *b)
            .sum()
    }

    /// Max-abs entrywise distance to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (*a - *b).abs())
            .fold(T::zero(), |m, x| m.max(x))
    }

    fn check_same_layout(&self, other: &Self, context: &'static str) -> Result<()> {
        if self.layout != other.layout {
            return Err(Error::LayoutMismatch {
                expected: format!("{} ({})", self.layout, context),
                found: other.layout.to_string(),
            });
        }
        Ok(())
    }
}

pub(crate) fn conj_transpose<T: Real>(m: &Array2<T::Complex>) -> Array2<T::Complex> {
    let (r, c) = m.dim();
    let mut out = Array2::zeros((c, r));
    for i in 0..r {
        for j in 0..c {
            out[(j, i)] = m[(i, j)].conj();
        }
    }
    out
}

fn hermiticity_tolerance<T: Real>(scale: T) -> T {
    scale * T::real(1e-12).max(T::epsilon() * T::real(64.0))
}

/// Kronecker product; the result layout is the concatenation of the inputs'.
pub fn kron<T: Real>(a: &Operator<T>, b: &Operator<T>) -> Operator<T> {
    let (da, db) = (a.dim(), b.dim());
    let d = da * db;
    let mut out = Array2::zeros((d, d));
    for i in 0..da {
        for j in 0..da {
            let aij = a.data[(i, j)];
            for k in 0..db {
                for l in 0..db {
                    out[(i * db + k, j * db + l)] = aij * b.data[(k, l)];
                }
            }
        }
    }
    Operator {
        data: out,
        layout: a.layout.concat(&b.layout),
    }
}

/// Embed a local operator at `site` of `layout`, identity elsewhere.
pub fn embed_local<T: Real>(op: &Operator<T>, site: usize, layout: &Layout) -> Result<Operator<T>> {
    let factors = layout.factors();
    if site >= factors.len() {
        return Err(Error::SiteOutOfRange {
            site,
            factors: factors.len(),
        });
    }
    if op.dim() != factors[site] {
        return Err(Error::DimensionMismatch {
            context: "local operator dimension must equal the site's factor",
            lhs: op.dim(),
            rhs: factors[site],
        });
    }
    let pre: usize = factors[..site].iter().product();
    let post: usize = factors[site + 1..].iter().product();
    let mut out = kron(
        &kron(&Operator::identity(Layout::single(pre)), op),
        &Operator::identity(Layout::single(post)),
    );
    out.layout = layout.clone();
    Ok(out)
}

/// Commutator `[A, B] = AB - BA`.
pub fn commutator<T: Real>(a: &Operator<T>, b: &Operator<T>) -> Result<Operator<T>> {
    a.check_same_layout(b, "commutator")?;
    let ab = a.data.dot(&b.data);
    let ba = b.data.dot(&a.data);
    Ok(Operator {
        data: ab - ba,
        layout: a.layout.clone(),
    })
}

/// Anticommutator `{A, B} = AB + BA`.
pub fn anticommutator<T: Real>(a: &Operator<T>, b: &Operator<T>) -> Result<Operator<T>> {
    a.check_same_layout(b, "anticommutator")?;
    let ab = a.data.dot(&b.data);
    let ba = b.data.dot(&a.data);
    Ok(Operator {
        data: ab + ba,
        layout: a.layout.clone(),
    })
}

/// Dissipator action `D[L](ρ) = LρL† − ½{L†L, ρ}`.
pub fn dissipator_apply<T: Real>(l: &Operator<T>, rho: &Operator<T>) -> Result<Operator<T>> {
    l.check_same_layout(rho, "dissipator")?;
    let ldag = conj_transpose::<T>(&l.data);
    let ldl = ldag.dot(&l.data);
    let sandwich = l.data.dot(&rho.data).dot(&ldag);
    let half = cr::<T>(T::real(0.5));
    let anti = (ldl.dot(&rho.data) + rho.data.dot(&ldl)) * half;
    Ok(Operator {
        data: sandwich - anti,
        layout: rho.layout.clone(),
    })
}

/// `Tr[obs · state]` without forming the product matrix.
pub fn expectation<T: Real>(obs: &Operator<T>, state: &Operator<T>) -> Result<T::Complex> {
    obs.check_same_layout(state, "expectation")?;
    let d = obs.dim();
    let mut acc = T::Complex::default();
    for i in 0..d {
        for j in 0..d {
            acc += obs.data[(i, j)] * state.data[(j, i)];
        }
    }
    Ok(acc)
}

/// Real part of `Tr[obs · state]`, rejecting a large imaginary residue.
pub fn expectation_real<T: Real>(obs: &Operator<T>, state: &Operator<T>) -> Result<T> {
    let z = expectation(obs, state)?;
    let scale = T::one().max(z.abs());
    let warn_tol = T::real(1e-9) * scale;
    let hard_tol = T::real(1e-6) * scale;
    let im = z.im().abs();
    if im > hard_tol {
        return Err(Error::NonRealExpectation {
            imag: im.to_f64().unwrap_or(f64::NAN),
            tolerance: hard_tol.to_f64().unwrap_or(f64::NAN),
        });
    }
    if im > warn_tol {
        log::warn!(
            "expectation value carries imaginary residue {:e} (scale {:e})",
            im.to_f64().unwrap_or(f64::NAN),
            scale.to_f64().unwrap_or(f64::NAN)
        );
    }
    Ok(z.re())
}

impl<T: Real> Add for &Operator<T> {
    type Output = Operator<T>;
    fn add(self, rhs: &Operator<T>) -> Operator<T> {
        assert_eq!(self.layout, rhs.layout, "operator addition layout mismatch");
        Operator {
            data: &self.data + &rhs.data,
            layout: self.layout.clone(),
        }
    }
}

impl<T: Real> Sub for &Operator<T> {
    type Output = Operator<T>;
    fn sub(self, rhs: &Operator<T>) -> Operator<T> {
        assert_eq!(
            self.layout, rhs.layout,
            "operator subtraction layout mismatch"
        );
        Operator {
            data: &self.data - &rhs.data,
            layout: self.layout.clone(),
        }
    }
}

impl<T: Real> Neg for &Operator<T> {
    type Output = Operator<T>;
    fn neg(self) -> Operator<T> {
        self.scaled(cr::<T>(-T::one()))
    }
}

/// Matrix product; layouts must agree.
impl<T: Real> Mul for &Operator<T> {
    type Output = Operator<T>;
    fn mul(self, rhs: &Operator<T>) -> Operator<T> {
        assert_eq!(self.layout, rhs.layout, "operator product layout mismatch");
        Operator {
            data: self.data.dot(&rhs.data),
            layout: self.layout.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{identity_n, pauli_x, pauli_z, projector, sigma_minus};
    use crate::scalar::c;
    use ndarray::array;
    use num_complex::Complex64;

    type Op = Operator<f64>;

    #[test]
    fn kron_identities() {
        let i2: Op = identity_n(2);
        let k = kron(&i2, &i2);
        assert_eq!(k.dim(), 4);
        assert!((&k - &identity_n(4).with_layout(k.layout().clone()).unwrap()).max_abs() < 1e-15);

        let z = pauli_z::<f64>();
        let zz = kron(&z, &z);
        let expect = array![
            [Complex64::new(1.0, 0.0), 0.0.into(), 0.0.into(), 0.0.into()],
            [0.0.into(), Complex64::new(-1.0, 0.0), 0.0.into(), 0.0.into()],
            [0.0.into(), 0.0.into(), Complex64::new(-1.0, 0.0), 0.0.into()],
            [0.0.into(), 0.0.into(), 0.0.into(), Complex64::new(1.0, 0.0)],
        ];
        assert!(zz
            .data()
            .iter()
            .zip(expect.iter())
            .all(|(a, b)| (a - b).norm() < 1e-15));
        assert_eq!(zz.layout().factors(), &[2, 2]);
    }

    #[test]
    fn kron_matches_index_formula_oracle() {
        // (A⊗B)[i·dB+k, j·dB+l] = A[i,j]·B[k,l] on fixed pseudo-random inputs.
        let a = Op::from_matrix(Array2::from_shape_fn((3, 3), |(i, j)| {
            Complex64::new((i * 3 + j) as f64 * 0.37 - 1.1, (i + 2 * j) as f64 * 0.21)
        }))
        .unwrap();
        let b = Op::from_matrix(Array2::from_shape_fn((2, 2), |(i, j)| {
            Complex64::new((i * 2 + j) as f64 * -0.53 + 0.4, (2 * i + j) as f64 * 0.11)
        }))
        .unwrap();
        let k = kron(&a, &b);
        for i in 0..3 {
            for j in 0..3 {
                for p in 0..2 {
                    for q in 0..2 {
                        let want = a.data()[(i, j)] * b.data()[(p, q)];
                        let got = k.data()[(i * 2 + p, j * 2 + q)];
                        assert!((want - got).norm() < 1e-15);
                    }
                }
            }
        }
    }

    #[test]
    fn kron_mixed_product_rule() {
        let a = pauli_x::<f64>();
        let b = pauli_z::<f64>();
        let c_ = sigma_minus::<f64>();
        let d = projector::<f64>(2, 1);
        let lhs = &kron(&a, &b) * &kron(&c_, &d);
        let rhs = kron(&(&a * &c_), &(&b * &d));
        assert!(lhs.max_abs_diff(&rhs) < 1e-15);
    }

    #[test]
    fn embed_local_places_identity_elsewhere() {
        let layout = Layout::qubits(2);
        let z = pauli_z::<f64>();
        let e0 = embed_local(&z, 0, &layout).unwrap();
        assert!(e0.max_abs_diff(&kron(&z, &identity_n(2))) < 1e-15);
        let x = pauli_x::<f64>();
        let e1 = embed_local(&x, 1, &layout).unwrap();
        assert!(e1.max_abs_diff(&kron(&identity_n(2), &x)) < 1e-15);
    }

    #[test]
    fn embed_local_last_site_matches_kron_chain() {
        let layout = Layout::qubits(3);
        let op = sigma_minus::<f64>();
        let embedded = embed_local(&op, 2, &layout).unwrap();
        let chain = kron(&identity_n(4), &op);
        assert!(embedded.max_abs_diff(&chain.with_layout(layout).unwrap()) < 1e-15);
    }

    #[test]
    fn embed_local_rejects_bad_inputs() {
        let layout = Layout::qubits(2);
        let z = pauli_z::<f64>();
        assert!(matches!(
            embed_local(&z, 2, &layout),
            Err(Error::SiteOutOfRange { .. })
        ));
        let q3 = identity_n::<f64>(3);
        assert!(matches!(
            embed_local(&q3, 0, &layout),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn lambda_max_identity_and_rejection() {
        let i8: Op = identity_n(8);
        assert!((i8.hermitian_lambda_max().unwrap() - 1.0).abs() < 1e-12);
        let nonherm = Op::from_matrix(array![
            [c::<f64>(0.0, 0.0), c::<f64>(1.0, 0.0)],
            [c::<f64>(0.0, 0.0), c::<f64>(0.0, 0.0)]
        ])
        .unwrap();
        assert!(matches!(
            nonherm.hermitian_lambda_max(),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn psd_sqrt_identity_and_squares_back() {
        let i4: Op = identity_n(4);
        assert!(i4.psd_sqrt().unwrap().max_abs_diff(&i4) < 1e-12);

        // B = C†C is PSD; sqrt(B·B) must recover B.
        let cmat = Array2::from_shape_fn((5, 5), |(i, j)| {
            Complex64::new(
                ((3 * i + 7 * j) % 11) as f64 / 11.0 - 0.3,
                ((5 * i + j) % 7) as f64 / 7.0 - 0.5,
            )
        });
        let b = Op::from_matrix(conj_transpose::<f64>(&cmat).dot(&cmat)).unwrap();
        let b2 = &b * &b;
        let root = b2.psd_sqrt().unwrap();
        assert!(root.max_abs_diff(&b) < 1e-9 * b2.max_abs().max(1.0));
    }

    #[test]
    fn psd_sqrt_rejects_negative() {
        let neg = pauli_z::<f64>();
        assert!(matches!(
            neg.psd_sqrt(),
            Err(Error::NegativeEigenvalue { .. })
        ));
    }

    #[test]
    fn dissipator_basics() {
        let z = pauli_z::<f64>();
        let ket0 = projector::<f64>(2, 0);
        let out = dissipator_apply(&z, &ket0).unwrap();
        assert!(out.max_abs() < 1e-15, "ρ commuting with unitary L is fixed");

        // D[σz](|+⟩⟨+|) = |−⟩⟨−| − |+⟩⟨+|, by direct matrix arithmetic.
        let plus = Op::from_matrix(Array2::from_elem((2, 2), Complex64::new(0.5, 0.0))).unwrap();
        let out = dissipator_apply(&z, &plus).unwrap();
        let minus = Op::from_matrix(array![
            [Complex64::new(0.5, 0.0), Complex64::new(-0.5, 0.0)],
            [Complex64::new(-0.5, 0.0), Complex64::new(0.5, 0.0)]
        ])
        .unwrap();
        let oracle = &minus - &plus;
        assert!(out.max_abs_diff(&oracle) < 1e-15);
    }

    #[test]
    fn expectation_real_rejects_complex() {
        let y = crate::standard::pauli_y::<f64>();
        let m = Op::from_matrix(array![
            [c::<f64>(0.0, 0.0), c::<f64>(1.0, 0.0)],
            [c::<f64>(0.0, 0.0), c::<f64>(0.0, 0.0)]
        ])
        .unwrap();
        // Tr[σy · |0⟩⟨1|] = ⟨1|σy|0⟩ = i
        assert!(matches!(
            expectation_real(&y, &m),
            Err(Error::NonRealExpectation { .. })
        ));
    }
}
