use std::collections::HashSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use super::weight::Weight;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
        };
        f.write_str(s)
    }
}

/// A positive root with its simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub vector: Weight,
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

/// Simple roots and positive roots of a (sub)system; used both for the full
/// system and for the Levi part.
#[derive(Clone, Debug)]
pub struct PositiveSystem {
    pub simple: Vec<Weight>,
    pub positive: Vec<Weight>,
}

impl PositiveSystem {
    pub fn rho(&self, dim: usize) -> Weight {
        let sum = self
            .positive
            .iter()
            .fold(Weight::zero(dim), |acc, a| &acc + a);
        sum.scale(Rational64::new(1, 2))
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.simple.iter().all(|a| w.pair_coroot(a) >= Rational64::zero())
    }

    pub fn is_antidominant(&self, w: &Weight) -> bool {
        self.simple.iter().all(|a| w.pair_coroot(a) <= Rational64::zero())
    }

    pub fn is_integral(&self, w: &Weight) -> bool {
        self.simple.iter().all(|a| w.pair_coroot(a).is_integer())
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub simple_roots: Vec<Weight>,
    pub positive_roots: Vec<Root>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType, rank: usize) -> Result<Self> {
        let min_rank = match cartan_type {
            CartanType::A | CartanType::B => 1,
            CartanType::C => 2,
            CartanType::D => 3,
        };
        if rank < min_rank {
            return Err(Error::RootData(format!(
                "{cartan_type}{rank} is not a simple root system"
            )));
        }
        let dim = match cartan_type {
            CartanType::A => rank + 1,
            _ => rank,
        };
        let diff = |i: usize, j: usize| &Weight::epsilon(dim, i) - &Weight::epsilon(dim, j);
        let mut simple: Vec<Weight> = (0..rank - 1).map(|i| diff(i, i + 1)).collect();
        let last = match cartan_type {
            CartanType::A => diff(rank - 1, rank),
            CartanType::B => Weight::epsilon(dim, rank - 1),
            CartanType::C => Weight::epsilon(dim, rank - 1).scale_int(2),
            CartanType::D => &Weight::epsilon(dim, rank - 2) + &Weight::epsilon(dim, rank - 1),
        };
        simple.push(last);
        let positive_roots = generate_positive(&simple);
        Ok(Self {
            cartan_type,
            rank,
            simple_roots: simple,
            positive_roots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.simple_roots[0].dim()
    }

    /// |Φ⁺| from the classification.
    pub fn expected_positive_count(&self) -> usize {
        let s = self.rank;
        match self.cartan_type {
            CartanType::A => s * (s + 1) / 2,
            CartanType::B | CartanType::C => s * s,
            CartanType::D => s * (s - 1),
        }
    }

    pub fn positive_system(&self) -> PositiveSystem {
        PositiveSystem {
            simple: self.simple_roots.clone(),
            positive: self.positive_roots.iter().map(|r| r.vector.clone()).collect(),
        }
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.positive_roots
            .iter()
            .any(|r| r.vector == *w || (-&r.vector) == *w)
    }

    pub fn find_positive(&self, w: &Weight) -> Option<&Root> {
        self.positive_roots.iter().find(|r| r.vector == *w)
    }

    /// `⟨α_j, α_i^∨⟩` at `[i][j]`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_roots
            .iter()
            .map(|ai| {
                self.simple_roots
                    .iter()
                    .map(|aj| aj.pair_coroot(ai).to_integer())
                    .collect()
            })
            .collect()
    }

    /// ϖ_i in the span of the roots, dual to the simple coroots.
    #[allow(clippy::needless_range_loop)]
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let s = self.rank;
        // Solve Σ_k c_k ⟨α_k, α_j^∨⟩ = δ_ij for j = 1..s.
        let cm = self.cartan_matrix();
        let mut a: Vec<Vec<Rational64>> = (0..s)
            .map(|j| {
                let mut row: Vec<Rational64> =
                    (0..s).map(|k| Rational64::from_integer(cm[j][k])).collect();
                row.push(if i == j { Rational64::one() } else { Rational64::zero() });
                row
            })
            .collect();
        for col in 0..s {
            let p = (col..s).find(|&r| !a[r][col].is_zero()).expect("Cartan matrix is invertible");
            a.swap(col, p);
            let inv = Rational64::one() / a[col][col];
            for v in a[col].iter_mut() {
                *v *= inv;
            }
            for r in 0..s {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col];
                    for c in 0..=s {
                        let v = a[col][c];
                        a[r][c] -= f * v;
                    }
                }
            }
        }
        (0..s).fold(Weight::zero(self.ambient_dim()), |acc, k| {
            &acc + &self.simple_roots[k].scale(a[k][s])
        })
    }
}

fn generate_positive(simple: &[Weight]) -> Vec<Root> {
    let s = simple.len();
    let mut roots: Vec<Root> = (0..s)
        .map(|i| {
            let mut coeffs = vec![0; s];
            coeffs[i] = 1;
            Root {
                vector: simple[i].clone(),
                coeffs,
            }
        })
        .collect();
    let mut seen: HashSet<Vec<i64>> = roots.iter().map(|r| r.coeffs.clone()).collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for root in &frontier {
            for (i, a) in simple.iter().enumerate() {
                let c = root.vector.pair_coroot(a).to_integer();
                if c == 0 {
                    continue;
                }
                let mut coeffs = root.coeffs.clone();
                coeffs[i] -= c;
                if coeffs.iter().any(|&x| x < 0) || !seen.insert(coeffs.clone()) {
                    continue;
                }
                let r = Root {
                    vector: root.vector.reflect(a),
                    coeffs,
                };
                next.push(r.clone());
                roots.push(r);
            }
        }
        frontier = next;
    }
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.coeffs.cmp(&b.coeffs)));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        for (t, s) in [
            (CartanType::A, 1),
            (CartanType::A, 3),
            (CartanType::A, 5),
            (CartanType::B, 2),
            (CartanType::B, 4),
            (CartanType::C, 3),
            (CartanType::D, 3),
            (CartanType::D, 5),
        ] {
            let rs = RootSystem::new(t, s).unwrap();
            assert_eq!(rs.positive_roots.len(), rs.expected_positive_count(), "{t}{s}");
        }
    }

    #[test]
    fn reflection_closure() {
        let rs = RootSystem::new(CartanType::B, 3).unwrap();
        for a in &rs.positive_roots {
            for b in &rs.positive_roots {
                assert!(rs.is_root(&b.vector.reflect(&a.vector)));
            }
        }
    }

    #[test]
    fn fundamental_weights_are_dual() {
        let rs = RootSystem::new(CartanType::D, 4).unwrap();
        for i in 0..4 {
            let w = rs.fundamental_weight(i);
            for (j, a) in rs.simple_roots.iter().enumerate() {
                let expect = if i == j { 1 } else { 0 };
                assert_eq!(w.pair_coroot(a), Rational64::from_integer(expect));
            }
        }
    }

    #[test]
    fn root_coefficients_reconstruct_vector() {
        let rs = RootSystem::new(CartanType::C, 3).unwrap();
        for r in &rs.positive_roots {
            let v = r
                .coeffs
                .iter()
                .zip(&rs.simple_roots)
                .fold(Weight::zero(3), |acc, (&c, a)| &acc + &a.scale_int(c));
            assert_eq!(v, r.vector);
        }
    }
}
