use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::element::Element;
use crate::error::{Error, Result};
use crate::lie::{build_marked_parabolic, CartanType, MarkedParabolic};
use crate::scalar::Scalar;

/// A simple Jordan pair with positive Hermitian involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum JordanModel {
    /// `p x q` complex matrices; `{x,y,z} = x y z + z y x`.
    Rect { p: usize, q: usize },
    /// Spin factor on ℂⁿ, `n >= 3`.
    Spin { n: usize },
}

impl fmt::Display for JordanModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JordanModel::Rect { p, q } => write!(f, "rect:{p},{q}"),
            JordanModel::Spin { n } => write!(f, "spin:{n}"),
        }
    }
}

impl FromStr for JordanModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ModelSpec(s.to_string());
        let (kind, args) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        match (kind.trim(), nums.as_slice()) {
            ("rect", &[p, q]) if p >= 1 && q >= 1 => Ok(JordanModel::Rect { p, q }),
            ("spin", &[n]) if n >= 3 => Ok(JordanModel::Spin { n }),
            ("spin", &[n]) => Err(Error::UnsupportedModel(format!(
                "spin:{n} (the spin factor needs n >= 3)"
            ))),
            ("sym" | "alt", _) => Err(Error::UnsupportedModel(s.to_string())),
            _ => Err(bad()),
        }
    }
}

impl JordanModel {
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }

    /// Complex dimension of V.
    pub fn dim(&self) -> usize {
        match *self {
            JordanModel::Rect { p, q } => p * q,
            JordanModel::Spin { n } => n,
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            JordanModel::Rect { p, q } => p.min(q),
            JordanModel::Spin { .. } => 2,
        }
    }

    /// `p = τ(e, ē)` for a primitive tripotent.
    pub fn structure_constant(&self) -> usize {
        match *self {
            JordanModel::Rect { p, q } => p + q,
            JordanModel::Spin { n } => n,
        }
    }

    /// Cartan type, rank and marked node of the associated simple Lie algebra.
    pub fn lie_data(&self) -> (CartanType, usize, usize) {
        match *self {
            JordanModel::Rect { p, q } => (CartanType::A, p + q - 1, p),
            JordanModel::Spin { n } if n % 2 == 1 => (CartanType::B, n.div_ceil(2), 1),
            JordanModel::Spin { n } => (CartanType::D, (n + 2) / 2, 1),
        }
    }

    pub fn parabolic(&self) -> Result<MarkedParabolic> {
        let (t, s, node) = self.lie_data();
        build_marked_parabolic(t, s, node)
    }

    pub fn is_compatible(&self, parabolic: &MarkedParabolic) -> bool {
        let (t, s, node) = self.lie_data();
        parabolic.root_system.cartan_type == t
            && parabolic.root_system.rank == s
            && parabolic.marked + 1 == node
            && parabolic.dim() == self.dim()
            && parabolic.rank() == self.rank()
    }

    /// The standard frame: diagonal matrix units, resp. `(1, ±i, 0, …)/2`.
    pub fn frame<S: Scalar>(&self) -> Vec<Element<S>> {
        match *self {
            JordanModel::Rect { p, q } => (0..p.min(q))
                .map(|j| Element::basis(*self, j * q + j))
                .collect(),
            JordanModel::Spin { n } => [S::one(), -S::one()]
                .into_iter()
                .map(|sign| {
                    let mut c = vec![S::zero(); n];
                    c[0] = S::from_ratio(1, 2);
                    c[1] = sign * S::imag_unit() * S::from_ratio(1, 2);
                    Element::from_coords(*self, c)
                })
                .collect(),
        }
    }

    /// Model coordinate index of the root attached to each coordinate, as an
    /// index into `parabolic.noncompact`. Only defined for `rect`.
    pub fn coordinate_roots(&self, parabolic: &MarkedParabolic) -> Result<Vec<usize>> {
        let JordanModel::Rect { p, q } = *self else {
            return Err(Error::UnsupportedModel(format!(
                "{self}: coordinate-root correspondence is only implemented for rect models"
            )));
        };
        if !self.is_compatible(parabolic) {
            return Err(Error::IncompatibleParabolic {
                model: self.to_string(),
                parabolic: parabolic.to_string(),
            });
        }
        let dim = parabolic.ambient_dim();
        let mut out = Vec::with_capacity(p * q);
        for i in 0..p {
            for j in 0..q {
                // (i, j) ↔ ε_{p-i} − ε_{p+1+j} (0-based ε indices)
                let w = &crate::lie::Weight::epsilon(dim, p - 1 - i)
                    - &crate::lie::Weight::epsilon(dim, p + j);
                let idx = parabolic.noncompact_index(&w).ok_or_else(|| {
                    Error::RootData(format!("coordinate ({i},{j}) has no noncompact root"))
                })?;
                out.push(idx);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["rect:2,3", "rect:1,1", "spin:5", "spin:4"] {
            assert_eq!(JordanModel::parse(s).unwrap().to_string(), s);
        }
        assert!(matches!(JordanModel::parse("rect:2"), Err(Error::ModelSpec(_))));
        assert!(matches!(JordanModel::parse("cube:3"), Err(Error::ModelSpec(_))));
        assert!(matches!(JordanModel::parse("spin:2"), Err(Error::UnsupportedModel(_))));
    }

    #[test]
    fn rect_arithmetic() {
        let m = JordanModel::Rect { p: 2, q: 3 };
        assert_eq!((m.dim(), m.rank(), m.structure_constant()), (6, 2, 5));
    }

    #[test]
    fn compatible_parabolics() {
        for s in ["rect:1,1", "rect:2,2", "rect:2,3", "rect:3,1", "spin:3", "spin:5", "spin:6"] {
            let m = JordanModel::parse(s).unwrap();
            let p = m.parabolic().unwrap();
            assert!(m.is_compatible(&p), "{s}");
        }
    }

    #[test]
    fn coordinate_roots_put_frame_first() {
        let m = JordanModel::Rect { p: 2, q: 2 };
        let par = m.parabolic().unwrap();
        let idx = m.coordinate_roots(&par).unwrap();
        assert_eq!(idx[0], 0);
        assert_eq!(idx[3], 1);
    }
}
