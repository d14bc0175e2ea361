use std::ops::{Add, Neg, Sub};

use num_complex::Complex64;

use super::model::JordanModel;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{GaussRat, Scalar};

/// Element of V in model coordinates (row-major `p x q` for rect, ℂⁿ for spin).
/// V′-elements are stored as their image in V under the involution.
#[derive(Clone, Debug, PartialEq)]
pub struct Element<S> {
    pub model: JordanModel,
    pub coords: Vec<S>,
}

impl<S: Scalar> Element<S> {
    pub fn new(model: JordanModel, coords: Vec<S>) -> Result<Self> {
        if coords.len() != model.dim() {
            return Err(Error::Dimension {
                expected: model.dim(),
                got: coords.len(),
            });
        }
        Ok(Self { model, coords })
    }

    pub(crate) fn from_coords(model: JordanModel, coords: Vec<S>) -> Self {
        debug_assert_eq!(coords.len(), model.dim());
        Self { model, coords }
    }

    pub fn zero(model: JordanModel) -> Self {
        Self::from_coords(model, vec![S::zero(); model.dim()])
    }

    pub fn basis(model: JordanModel, k: usize) -> Self {
        let mut e = Self::zero(model);
        e.coords[k] = S::one();
        e
    }

    /// Rect element from a `p x q` matrix.
    pub fn from_matrix(model: JordanModel, m: &Matrix<S>) -> Result<Self> {
        match model {
            JordanModel::Rect { p, q } if m.rows() == p && m.cols() == q => {
                Ok(Self::from_coords(model, m.data().to_vec()))
            }
            _ => Err(Error::Dimension {
                expected: model.dim(),
                got: m.rows() * m.cols(),
            }),
        }
    }

    /// Coordinates as a `p x q` matrix (rect) or a column (spin).
    pub fn to_matrix(&self) -> Matrix<S> {
        match self.model {
            JordanModel::Rect { p, q } => Matrix::from_row_major(p, q, self.coords.clone()),
            JordanModel::Spin { n } => Matrix::from_row_major(n, 1, self.coords.clone()),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_coords(self.model, self.coords.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn conj(&self) -> Self {
        Self::from_coords(self.model, self.coords.iter().map(|c| c.conj()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Euclidean norm of the coordinate vector.
    pub fn coord_norm(&self) -> f64 {
        self.coords
            .iter()
            .map(|c| {
                let m = c.modulus();
                m * m
            })
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a.clone() - b.clone()).modulus())
            .fold(0.0, f64::max)
    }

    pub fn close(&self, other: &Self, tol: f64) -> bool {
        if S::EXACT {
            self == other
        } else {
            self.max_abs_diff(other) <= tol * self.coord_norm().max(other.coord_norm()).max(1.0)
        }
    }

    pub fn to_c64(&self) -> Element<Complex64> {
        Element::from_coords(self.model, self.coords.iter().map(|c| c.to_c64()).collect())
    }

    pub fn check_same(&self, other: &Self) -> Result<()> {
        if self.model != other.model {
            Err(Error::ModelMismatch(self.model, other.model))
        } else {
            Ok(())
        }
    }
}

impl Element<GaussRat> {
    pub fn from_ints(model: JordanModel, re: &[i64]) -> Result<Self> {
        Self::new(model, re.iter().map(|&v| GaussRat::from_i64(v)).collect())
    }
}

impl Element<Complex64> {
    pub fn to_exact(&self) -> Element<GaussRat> {
        Element::from_coords(
            self.model,
            self.coords
                .iter()
                .map(|c| GaussRat::from_f64(c.re) + GaussRat::from_f64(c.im) * GaussRat::imag_unit())
                .collect(),
        )
    }
}

impl<S: Scalar> Add for &Element<S> {
    type Output = Element<S>;
    fn add(self, rhs: Self) -> Element<S> {
        assert_eq!(self.model, rhs.model, "model mismatch");
        Element::from_coords(
            self.model,
            self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.clone() + b.clone()).collect(),
        )
    }
}

impl<S: Scalar> Sub for &Element<S> {
    type Output = Element<S>;
    fn sub(self, rhs: Self) -> Element<S> {
        assert_eq!(self.model, rhs.model, "model mismatch");
        Element::from_coords(
            self.model,
            self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.clone() - b.clone()).collect(),
        )
    }
}

impl<S: Scalar> Neg for &Element<S> {
    type Output = Element<S>;
    fn neg(self) -> Element<S> {
        Element::from_coords(self.model, self.coords.iter().map(|a| -a.clone()).collect())
    }
}
