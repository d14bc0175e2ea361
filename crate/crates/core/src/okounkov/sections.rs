use num_traits::ToPrimitive;
use rand::Rng;

use super::poly::{Exponent, ExponentPolynomial};
use crate::branching::section_dimension;
use crate::error::{Error, Result};
use crate::jordan::{Element, JordanModel};
use crate::lie::{MarkedParabolic, Weight};
use crate::random::seeded;
use crate::scalar::{GaussRat, Scalar};

const SAMPLE_SEED: u64 = 0x0b5e_55ed;

/// Coordinates of the chart `V ≅ 𝔭⁻`, ordered by the noncompact-root
/// enumeration of the marked parabolic (cascade first).
#[derive(Clone, Debug)]
pub struct Trivialization {
    pub model: JordanModel,
    pub parabolic: MarkedParabolic,
    /// Model coordinate index → polynomial variable index.
    pub coordinate_vars: Vec<usize>,
    roots: Vec<Weight>,
}

impl Trivialization {
    pub fn new(model: JordanModel) -> Result<Self> {
        let parabolic = model.parabolic()?;
        let coordinate_vars = model.coordinate_roots(&parabolic)?;
        let roots = parabolic.noncompact.iter().map(|r| r.vector.clone()).collect();
        Ok(Self {
            model,
            parabolic,
            coordinate_vars,
            roots,
        })
    }

    pub fn nvars(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, var: usize) -> &Weight {
        &self.roots[var]
    }

    /// `kλ + Σ a_j α_j`.
    pub fn monomial_weight(&self, k: u32, a: &[u32]) -> Weight {
        a.iter()
            .zip(&self.roots)
            .fold(self.parabolic.lambda.scale_int(k as i64), |acc, (&d, r)| {
                if d == 0 {
                    acc
                } else {
                    &acc + &r.scale_int(d as i64)
                }
            })
    }

    /// `x ↦ Δ(x, w̄)` as a polynomial in the chart coordinates, for the stored
    /// V′-element `w`.
    pub fn delta(&self, w: &Element<GaussRat>) -> Result<ExponentPolynomial> {
        if w.model != self.model {
            return Err(Error::ModelMismatch(w.model, self.model));
        }
        let JordanModel::Rect { p, q } = self.model else {
            return Err(Error::UnsupportedModel(self.model.to_string()));
        };
        let n = self.nvars();
        let wm = w.to_matrix();
        // det(I − x w*), with (x w*)_{ik} = Σ_j x_ij conj(w_kj)
        let mut m = vec![vec![ExponentPolynomial::zero(n); p]; p];
        for (i, row) in m.iter_mut().enumerate() {
            for (k, entry) in row.iter_mut().enumerate() {
                if i == k {
                    entry.add_term(vec![0; n], GaussRat::one());
                }
                for j in 0..q {
                    let c = wm.get(k, j).conj();
                    if c.is_zero() {
                        continue;
                    }
                    let var = self.coordinate_vars[i * q + j];
                    entry.add_scaled(&ExponentPolynomial::variable(n, var), &-c);
                }
            }
        }
        Ok(poly_det(&m, n))
    }

    /// `f̃_j(x) = Δ(x, −ē_j)` with `e_j` the sum of the first `j` frame tripotents.
    pub fn trivialize_fk(&self, j: usize) -> Result<ExponentPolynomial> {
        let frame: Vec<Element<GaussRat>> = self.model.frame();
        if j > frame.len() {
            return Err(Error::FrameIndex {
                j,
                rank: frame.len(),
            });
        }
        let e = frame[..j]
            .iter()
            .fold(Element::zero(self.model), |acc, f| &acc - f);
        self.delta(&e)
    }

    /// Derivation `f ↦ Σ_δ ∂f/∂z_δ · z_{δ+α}` realising the root vector of a
    /// Levi root `α` on trivialized sections.
    pub fn raising_action(&self, alpha: &Weight, s: &ExponentPolynomial) -> Result<ExponentPolynomial> {
        if !self.parabolic.is_levi_root(alpha) {
            return Err(Error::UnsupportedRoot(alpha.to_string()));
        }
        let n = self.nvars();
        let mut out = ExponentPolynomial::zero(n);
        for (d, delta) in self.roots.iter().enumerate() {
            let target = delta + alpha;
            let Some(t) = self.roots.iter().position(|r| *r == target) else {
                continue;
            };
            let ds = s.derivative(d);
            if ds.is_zero() {
                continue;
            }
            out = out.add(&ds.mul(&ExponentPolynomial::variable(n, t)));
        }
        Ok(out)
    }

    /// Part of `s` of weight `mu` at level `k`.
    pub fn weight_component(&self, k: u32, mu: &Weight, s: &ExponentPolynomial) -> ExponentPolynomial {
        s.filter(|e| self.monomial_weight(k, e) == *mu)
    }

    /// Distinct monomial weights occurring in `s`.
    pub fn weights(&self, k: u32, s: &ExponentPolynomial) -> Vec<Weight> {
        let mut out: Vec<Weight> = Vec::new();
        for (e, _) in s.terms() {
            let w = self.monomial_weight(k, e);
            if !out.contains(&w) {
                out.push(w);
            }
        }
        out
    }
}

fn poly_det(m: &[Vec<ExponentPolynomial>], n: usize) -> ExponentPolynomial {
    match m.len() {
        0 => ExponentPolynomial::one(n),
        1 => m[0][0].clone(),
        size => {
            let mut out = ExponentPolynomial::zero(n);
            for c in 0..size {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<ExponentPolynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][c].mul(&poly_det(&minor, n));
                let sign = if c % 2 == 0 { GaussRat::one() } else { -GaussRat::one() };
                out.add_scaled(&term, &sign);
            }
            out
        }
    }
}

/// Fully reduced sparse row echelon basis; each row has a pivot monomial that
/// appears in no other row, with coefficient 1.
#[derive(Clone, Debug)]
pub struct ReducedBasis {
    n: usize,
    rows: Vec<(Exponent, ExponentPolynomial)>,
}

impl ReducedBasis {
    pub fn new(n: usize) -> Self {
        Self { n, rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn reduce(&self, s: &ExponentPolynomial) -> ExponentPolynomial {
        let mut r = s.clone();
        for (pivot, row) in &self.rows {
            let c = r.coeff(pivot);
            if !c.is_zero() {
                r.add_scaled(row, &-c);
            }
        }
        r
    }

    /// Adds `s` to the span; returns whether the rank grew.
    pub fn insert(&mut self, s: &ExponentPolynomial) -> bool {
        assert_eq!(s.nvars(), self.n);
        let r = self.reduce(s);
        let Some((pivot, c)) = r.leading() else {
            return false;
        };
        let r = r.scale(&(GaussRat::one() / c));
        for (_, row) in self.rows.iter_mut() {
            let c = row.coeff(&pivot);
            if !c.is_zero() {
                row.add_scaled(&r, &-c);
            }
        }
        self.rows.push((pivot, r));
        true
    }

    pub fn contains(&self, s: &ExponentPolynomial) -> bool {
        self.reduce(s).is_zero()
    }

    pub fn into_basis(self) -> Vec<ExponentPolynomial> {
        self.rows.into_iter().map(|(_, r)| r).collect()
    }
}

/// `H⁰(X, 𝓛ᵏ)` realised as polynomials on the chart.
#[derive(Clone, Debug)]
pub struct SectionSpace {
    pub k: u32,
    pub basis: Vec<ExponentPolynomial>,
}

impl SectionSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Basis of the weight-`mu` subspace.
    pub fn weight_slice(&self, triv: &Trivialization, mu: &Weight) -> Vec<ExponentPolynomial> {
        let mut red = ReducedBasis::new(triv.nvars());
        for b in &self.basis {
            let c = triv.weight_component(self.k, mu, b);
            if !c.is_zero() {
                red.insert(&c);
            }
        }
        red.into_basis()
    }

    /// All monomial weights occurring in the space.
    pub fn weights(&self, triv: &Trivialization) -> Vec<Weight> {
        let mut out: Vec<Weight> = Vec::new();
        for b in &self.basis {
            for w in triv.weights(self.k, b) {
                if !out.contains(&w) {
                    out.push(w);
                }
            }
        }
        out.sort_by(|a, b| a.coords.cmp(&b.coords));
        out
    }
}

fn expected_dimension(triv: &Trivialization, k: u32) -> Result<usize> {
    let d = section_dimension(&triv.parabolic, k)?;
    Ok(d.to_usize().expect("section dimension fits in usize"))
}

fn level_one(triv: &Trivialization, expected: usize) -> Result<ReducedBasis> {
    let n = triv.nvars();
    let dim = triv.model.dim();
    let mut red = ReducedBasis::new(n);
    let mut rng = seeded(SAMPLE_SEED);
    let attempts = 64 + 32 * expected;
    for t in 0..attempts {
        let coords: Vec<i64> = if t == 0 {
            vec![0; dim]
        } else {
            (0..dim).map(|_| rng.random_range(-2..=2)).collect()
        };
        let b = Element::from_ints(triv.model, &coords)?;
        red.insert(&triv.delta(&b)?);
        if red.len() > expected {
            return Err(Error::RankOvershoot {
                expected,
                got: red.len(),
            });
        }
        if red.len() == expected {
            return Ok(red);
        }
    }
    Err(Error::RankShortfall {
        expected,
        got: red.len(),
    })
}

fn multisets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if cur.len() == k {
        return f(cur);
    }
    for i in start..n {
        cur.push(i);
        if !multisets(n, k, i, cur, f) {
            cur.pop();
            return false;
        }
        cur.pop();
    }
    true
}

/// Span of `x ↦ Δ(x, b)` over integer `b` (k = 1), and of `k`-fold products of
/// level-one sections. Fails if the rank exceeds or never reaches
/// `weyl_dimension(k ϖ_{β₁})`.
pub fn build_section_space(triv: &Trivialization, k: u32) -> Result<SectionSpace> {
    if k == 0 {
        return Ok(SectionSpace {
            k,
            basis: vec![ExponentPolynomial::one(triv.nvars())],
        });
    }
    let expected1 = expected_dimension(triv, 1)?;
    let one = level_one(triv, expected1)?.into_basis();
    if k == 1 {
        return Ok(SectionSpace { k, basis: one });
    }
    let expected = expected_dimension(triv, k)?;
    let mut red = ReducedBasis::new(triv.nvars());
    let mut overshoot = false;
    multisets(one.len(), k as usize, 0, &mut Vec::new(), &mut |idx| {
        let prod = idx
            .iter()
            .skip(1)
            .fold(one[idx[0]].clone(), |acc, &i| acc.mul(&one[i]));
        red.insert(&prod);
        overshoot = red.len() > expected;
        !overshoot
    });
    if overshoot {
        return Err(Error::RankOvershoot {
            expected,
            got: red.len(),
        });
    }
    if red.len() < expected {
        return Err(Error::RankShortfall {
            expected,
            got: red.len(),
        });
    }
    Ok(SectionSpace {
        k,
        basis: red.into_basis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::generic_det;
    use crate::scalar::gauss;

    fn eval(p: &ExponentPolynomial, triv: &Trivialization, x: &Element<GaussRat>) -> GaussRat {
        let mut vals = vec![GaussRat::zero(); triv.nvars()];
        for (c, &v) in triv.coordinate_vars.iter().enumerate() {
            vals[v] = x.coords[c].clone();
        }
        let mut out = GaussRat::zero();
        for (e, c) in p.terms() {
            let mut t = c.clone();
            for (v, &d) in vals.iter().zip(e) {
                for _ in 0..d {
                    t *= v.clone();
                }
            }
            out += t;
        }
        out
    }

    #[test]
    fn delta_matches_generic_det() {
        let m = JordanModel::Rect { p: 2, q: 3 };
        let triv = Trivialization::new(m).unwrap();
        let mut rng = seeded(3);
        for _ in 0..5 {
            let x: Element<GaussRat> = crate::random::random_element(m, &mut rng);
            let w: Element<GaussRat> = crate::random::random_element(m, &mut rng);
            let p = triv.delta(&w).unwrap();
            assert_eq!(eval(&p, &triv, &x), generic_det(&x, &w).unwrap());
        }
    }

    #[test]
    fn fk_rect22() {
        let m = JordanModel::Rect { p: 2, q: 2 };
        let triv = Trivialization::new(m).unwrap();
        assert_eq!(triv.trivialize_fk(0).unwrap(), ExponentPolynomial::one(4));
        let f = triv.trivialize_fk(2).unwrap();
        let x = Element::new(m, vec![gauss(2, 0, 1), gauss(3, 0, 1), gauss(5, 0, 1), gauss(7, 0, 1)]).unwrap();
        // det(I + x) = 3·8 − 15
        assert_eq!(eval(&f, &triv, &x), gauss(9, 0, 1));
        let r = f.restrict(&[0, 1]);
        let x1 = ExponentPolynomial::variable(2, 0);
        let x2 = ExponentPolynomial::variable(2, 1);
        let one = ExponentPolynomial::one(2);
        assert_eq!(r, one.add(&x1).mul(&one.add(&x2)));
    }

    #[test]
    fn section_space_dimensions() {
        let p1 = Trivialization::new(JordanModel::Rect { p: 1, q: 1 }).unwrap();
        assert_eq!(build_section_space(&p1, 1).unwrap().dimension(), 2);
        let gr = Trivialization::new(JordanModel::Rect { p: 2, q: 2 }).unwrap();
        assert_eq!(build_section_space(&gr, 1).unwrap().dimension(), 6);
        assert_eq!(build_section_space(&gr, 2).unwrap().dimension(), 20);
    }

    #[test]
    fn raising_shifts_weight() {
        let triv = Trivialization::new(JordanModel::Rect { p: 2, q: 2 }).unwrap();
        let z = ExponentPolynomial::variable(4, 0);
        for a in triv.parabolic.levi.positive.clone() {
            for alpha in [a.clone(), -&a] {
                let s = triv.raising_action(&alpha, &z).unwrap();
                for (e, _) in s.terms() {
                    assert_eq!(triv.monomial_weight(1, e), &triv.monomial_weight(1, &[1, 0, 0, 0]) + &alpha);
                }
                assert!(triv.raising_action(&alpha, &ExponentPolynomial::one(4)).unwrap().is_zero());
            }
        }
        let gamma = triv.parabolic.gammas[0].clone();
        assert!(triv.raising_action(&gamma, &z).is_err());
    }
}
