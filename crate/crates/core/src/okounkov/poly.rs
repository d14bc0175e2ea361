use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{GaussRat, Scalar};

pub type Exponent = Vec<u32>;

/// Inverse lexicographic order: compare at the largest index where the
/// vectors differ.
pub fn invlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

pub fn invlex_min<'a, I>(exponents: I) -> Result<Exponent>
where
    I: IntoIterator<Item = &'a Exponent>,
{
    exponents
        .into_iter()
        .min_by(|a, b| invlex_cmp(a, b))
        .cloned()
        .ok_or(Error::EmptySet)
}

/// Sparse polynomial in `n` commuting variables with Gaussian-rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct ExponentPolynomial {
    n: usize,
    terms: BTreeMap<Exponent, GaussRat>,
}

impl ExponentPolynomial {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: GaussRat) -> Self {
        let mut p = Self::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, GaussRat::one())
    }

    pub fn variable(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        let mut p = Self::zero(n);
        p.add_term(e, GaussRat::one());
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exponent, GaussRat)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &GaussRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> GaussRat {
        self.terms.get(e).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn add_term(&mut self, e: Exponent, c: GaussRat) {
        assert_eq!(e.len(), self.n, "exponent length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &GaussRat) {
        if c.is_zero() {
            return;
        }
        for (e, v) in &other.terms {
            self.add_term(e.clone(), v.clone() * c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &GaussRat::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-GaussRat::one());
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x.clone() * y.clone());
            }
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// `∂/∂z_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            out.add_term(f, c.clone() * GaussRat::from_i64(e[i] as i64));
        }
        out
    }

    /// Terms whose exponent satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Exponent) -> bool) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Restriction to the coordinate subspace spanned by `vars` (all other
    /// variables set to zero), in the variables `vars` in the given order.
    pub fn restrict(&self, vars: &[usize]) -> Self {
        let n = vars.len();
        let mut out = Self::zero(n);
        for (e, c) in &self.terms {
            let outside = e
                .iter()
                .enumerate()
                .any(|(i, &d)| d > 0 && !vars.contains(&i));
            if !outside {
                out.add_term(vars.iter().map(|&i| e[i]).collect(), c.clone());
            }
        }
        out
    }

    /// Invlex-minimal exponent with nonzero coefficient.
    pub fn valuation(&self) -> Result<Exponent> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        invlex_min(self.terms.keys())
    }

    /// Coefficient at the valuation exponent.
    pub fn leading(&self) -> Option<(Exponent, GaussRat)> {
        let e = self.valuation().ok()?;
        let c = self.coeff(&e);
        Some((e, c))
    }

    /// Scaled so the coefficient at the valuation exponent is 1.
    pub fn normalized(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&(GaussRat::one() / c)),
            None => self.clone(),
        }
    }
}

impl fmt::Debug for ExponentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_coeff(c: &GaussRat) -> String {
    if c.im == num_rational::BigRational::from_integer(0.into()) {
        c.re.to_string()
    } else {
        format!("({}+{}i)", c.re, c.im)
    }
}

impl fmt::Display for ExponentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", fmt_coeff(c))?;
            for (i, &d) in e.iter().enumerate() {
                match d {
                    0 => {}
                    1 => write!(f, "*z{}", i + 1)?,
                    _ => write!(f, "*z{}^{d}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: usize) -> ExponentPolynomial {
        ExponentPolynomial::variable(4, i)
    }

    #[test]
    fn invlex_examples() {
        assert_eq!(invlex_min([&vec![0u32]]).unwrap(), vec![0]);
        let a = vec![1, 1, 0, 0];
        let b = vec![0, 0, 1, 1];
        assert_eq!(invlex_min([&a, &b]).unwrap(), a);
        assert!(invlex_min(std::iter::empty()).is_err());
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(ExponentPolynomial::one(4).valuation().unwrap(), vec![0; 4]);
        let p = z(0).mul(&z(1)).sub(&z(2).mul(&z(3)));
        assert_eq!(p.valuation().unwrap(), vec![1, 1, 0, 0]);
        assert!(ExponentPolynomial::zero(4).valuation().is_err());
        let q = z(2).add(&z(0).mul(&z(0)));
        let v = p.mul(&q).valuation().unwrap();
        let w: Vec<u32> = p
            .valuation()
            .unwrap()
            .iter()
            .zip(q.valuation().unwrap())
            .map(|(a, b)| a + b)
            .collect();
        assert_eq!(v, w);
    }

    #[test]
    fn derivative_and_cancellation() {
        let p = z(0).mul(&z(0)).add(&z(1));
        assert_eq!(p.derivative(0), z(0).scale(&GaussRat::from_i64(2)));
        assert!(p.sub(&p).is_zero());
    }
}
