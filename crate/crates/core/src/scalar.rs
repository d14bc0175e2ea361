//! Scalar backends: exact Gaussian rationals and complex floating point.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::matrix::Matrix;

/// Gaussian rational `a + b i` with `a, b ∈ ℚ`.
pub type GaussRat = Complex<BigRational>;

/// Relative threshold below which a floating-point matrix counts as singular.
pub const SINGULAR_RTOL: f64 = 1e-10;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn imag_unit() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_f64(v: f64) -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn modulus(&self) -> f64;
    fn to_c64(&self) -> Complex64;

    /// `Some(re)` when the value is real (exactly, or to within the float tolerance).
    fn as_real(&self) -> Option<f64> {
        let c = self.to_c64();
        if Self::EXACT {
            self.conj().eq(self).then_some(c.re)
        } else {
            (c.im.abs() <= 1e-12 * c.re.abs().max(1.0)).then_some(c.re)
        }
    }

    /// Equality up to `tol` (relative to the larger modulus, floored at 1); exact backends ignore `tol`.
    fn close(&self, other: &Self, tol: f64) -> bool {
        if Self::EXACT {
            self == other
        } else {
            let d = (self.clone() - other.clone()).modulus();
            d <= tol * self.modulus().max(other.modulus()).max(1.0)
        }
    }

    /// Rank of a matrix: exact elimination or numerical rank at [`SINGULAR_RTOL`].
    fn matrix_rank(m: &Matrix<Self>) -> usize;

    fn is_singular(m: &Matrix<Self>) -> bool {
        m.rows() != m.cols() || Self::matrix_rank(m) < m.rows()
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn imag_unit() -> Self {
        Complex64::new(0.0, 1.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn from_f64(v: f64) -> Self {
        Complex64::new(v, 0.0)
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn modulus(&self) -> f64 {
        self.norm()
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn matrix_rank(m: &Matrix<Self>) -> usize {
        numerical_rank(m, SINGULAR_RTOL)
    }
}

impl Scalar for GaussRat {
    const EXACT: bool = true;

    fn zero() -> Self {
        Complex::new(BigRational::zero(), BigRational::zero())
    }
    fn one() -> Self {
        Complex::new(BigRational::one(), BigRational::zero())
    }
    fn imag_unit() -> Self {
        Complex::new(BigRational::zero(), BigRational::one())
    }
    fn from_i64(v: i64) -> Self {
        Complex::new(BigRational::from_integer(BigInt::from(v)), BigRational::zero())
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }
    /// Exact binary expansion of the float.
    fn from_f64(v: f64) -> Self {
        let re = BigRational::from_float(v).expect("finite float");
        Complex::new(re, BigRational::zero())
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn modulus(&self) -> f64 {
        self.to_c64().norm()
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
    fn matrix_rank(m: &Matrix<Self>) -> usize {
        crate::exact::rank(m.rows(), m.cols(), m.data())
    }
}

/// Gaussian rational from integer real and imaginary numerators over a common denominator.
pub fn gauss(re: i64, im: i64, den: i64) -> GaussRat {
    Complex::new(
        BigRational::new(BigInt::from(re), BigInt::from(den)),
        BigRational::new(BigInt::from(im), BigInt::from(den)),
    )
}

/// Leading-principal-minor test for Hermitian positive definiteness over exact scalars.
pub fn is_positive_definite_exact(m: &Matrix<GaussRat>) -> bool {
    if m.rows() != m.cols() {
        return false;
    }
    (1..=m.rows()).all(|k| {
        let minor = m.submatrix(0, 0, k, k).determinant();
        minor.im.is_zero() && minor.re.is_positive()
    })
}

pub fn to_nalgebra(m: &Matrix<Complex64>) -> DMatrix<Complex64> {
    DMatrix::from_row_slice(m.rows(), m.cols(), m.data())
}

pub fn from_nalgebra(m: &DMatrix<Complex64>) -> Matrix<Complex64> {
    let mut out = Matrix::zeros(m.nrows(), m.ncols());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            *out.get_mut(i, j) = m[(i, j)];
        }
    }
    out
}

pub fn singular_values(m: &Matrix<Complex64>) -> Vec<f64> {
    if m.rows() == 0 || m.cols() == 0 {
        return Vec::new();
    }
    let mut sv: Vec<f64> = to_nalgebra(m).singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

pub fn numerical_rank(m: &Matrix<Complex64>, rtol: f64) -> usize {
    let sv = singular_values(m);
    match sv.first() {
        Some(&top) if top > 0.0 => sv.iter().filter(|&&s| s > rtol * top).count(),
        _ => 0,
    }
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &Matrix<Complex64>) -> Vec<f64> {
    let h = to_nalgebra(m);
    let h = (&h + h.adjoint()) * Complex64::new(0.5, 0.0);
    let mut ev: Vec<f64> = h.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| a.total_cmp(b));
    ev
}

/// Spectral (largest singular value) norm.
pub fn operator_norm(m: &Matrix<Complex64>) -> f64 {
    singular_values(m).first().copied().unwrap_or(0.0)
}
