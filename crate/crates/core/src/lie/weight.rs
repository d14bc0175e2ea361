use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use num_traits::{Signed, Zero};

/// Vector in the ambient ε-coordinate space of a root system.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Rational64>,
}

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Self {
            coords: vec![Rational64::zero(); dim],
        }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self {
            coords: v.iter().map(|&x| Rational64::from_integer(x)).collect(),
        }
    }

    /// Unit vector ε_i (0-based).
    pub fn epsilon(dim: usize, i: usize) -> Self {
        let mut w = Self::zero(dim);
        w.coords[i] = Rational64::from_integer(1);
        w
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn dot(&self, other: &Self) -> Rational64 {
        assert_eq!(self.dim(), other.dim(), "weight dimension mismatch");
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(Rational64::zero(), |acc, (a, b)| acc + a * b)
    }

    /// `⟨self, α^∨⟩ = 2(self, α)/(α, α)`.
    pub fn pair_coroot(&self, alpha: &Self) -> Rational64 {
        Rational64::from_integer(2) * self.dot(alpha) / alpha.dot(alpha)
    }

    pub fn scale(&self, c: Rational64) -> Self {
        Self {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(Rational64::from_integer(c))
    }

    /// Reflection in the hyperplane orthogonal to `alpha`.
    pub fn reflect(&self, alpha: &Self) -> Self {
        self - &alpha.scale(self.pair_coroot(alpha))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn max_abs(&self) -> Rational64 {
        self.coords
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational64::zero)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords
            .iter()
            .map(|c| *c.numer() as f64 / *c.denom() as f64)
            .collect()
    }

    /// Coordinates as `"n/d"` (or `"n"`) strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(|c| c.to_string()).collect()
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: Self) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weight dimension mismatch");
        Weight {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: Self) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weight dimension mismatch");
        Weight {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
