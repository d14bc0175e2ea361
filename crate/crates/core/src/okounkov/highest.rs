use std::collections::HashSet;

use serde::Serialize;

use super::poly::ExponentPolynomial;
use super::sections::{SectionSpace, Trivialization};
use crate::error::{Error, Result};
use crate::exact::kernel;
use crate::lie::{antidominant_representative, dominant_representative, Weight};
use crate::scalar::GaussRat;

/// Which root vectors annihilate a highest weight vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `R = {T_α : α ∈ Φ_L⁺}`.
    Positive,
    /// `R = {T_{−α} : α ∈ Φ_L⁺}`.
    Negative,
}

impl Convention {
    pub fn raising_roots(self, triv: &Trivialization) -> Vec<Weight> {
        triv.parabolic
            .levi
            .positive
            .iter()
            .map(|a| match self {
                Convention::Positive => a.clone(),
                Convention::Negative => -a,
            })
            .collect()
    }

    /// Weight of the vector killed by `R` in the L-type with label `w`.
    pub fn extreme_weight(self, triv: &Trivialization, w: &Weight) -> Weight {
        match self {
            Convention::Positive => dominant_representative(w, &triv.parabolic.levi),
            Convention::Negative => antidominant_representative(w, &triv.parabolic.levi),
        }
    }
}

/// Outcome of the level-one convention test.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ConventionChoice {
    pub convention: Convention,
    /// Both choices reproduced the weight list (e.g. when `Φ_L` is empty).
    pub vacuous: bool,
}

/// Basis of `{s ∈ slice : T s = 0 for all T ∈ R}` as coefficient vectors.
fn raising_kernel(
    triv: &Trivialization,
    slice: &[ExponentPolynomial],
    roots: &[Weight],
) -> Result<Vec<Vec<GaussRat>>> {
    let d = slice.len();
    if d == 0 {
        return Ok(Vec::new());
    }
    let mut rows: Vec<(usize, Vec<u32>)> = Vec::new();
    let mut seen: HashSet<(usize, Vec<u32>)> = HashSet::new();
    let mut images: Vec<Vec<ExponentPolynomial>> = Vec::with_capacity(roots.len());
    for (ai, a) in roots.iter().enumerate() {
        let im = slice
            .iter()
            .map(|s| triv.raising_action(a, s))
            .collect::<Result<Vec<_>>>()?;
        for p in &im {
            for (e, _) in p.terms() {
                let key = (ai, e.clone());
                if seen.insert(key.clone()) {
                    rows.push(key);
                }
            }
        }
        images.push(im);
    }
    let mut data = Vec::with_capacity(rows.len() * d);
    for (ai, e) in &rows {
        for im in &images[*ai] {
            data.push(im.coeff(e));
        }
    }
    Ok(kernel(rows.len(), d, &data))
}

fn combine(slice: &[ExponentPolynomial], coeffs: &[GaussRat], n: usize) -> ExponentPolynomial {
    let mut out = ExponentPolynomial::zero(n);
    for (s, c) in slice.iter().zip(coeffs) {
        out.add_scaled(s, c);
    }
    out
}

fn kernel_multiset(triv: &Trivialization, space: &SectionSpace, conv: Convention) -> Result<Vec<Weight>> {
    let roots = conv.raising_roots(triv);
    let mut out = Vec::new();
    for mu in space.weights(triv) {
        let slice = space.weight_slice(triv, &mu);
        let dim = raising_kernel(triv, &slice, &roots)?.len();
        out.extend(std::iter::repeat_n(mu, dim));
    }
    out.sort_by(|a, b| a.coords.cmp(&b.coords));
    Ok(out)
}

/// Labels `λ + Σ m_i γ_i` over the 0/1 staircases, sorted.
fn level_one_labels(triv: &Trivialization) -> Vec<Weight> {
    let mut out: Vec<Weight> = (0..=triv.parabolic.rank())
        .map(|j| triv.parabolic.lambda_j(j))
        .collect();
    out.sort_by(|a, b| a.coords.cmp(&b.coords));
    out
}

/// Selects the raising set whose level-one kernel weights are exactly the
/// labels `λ + Σ m_i γ_i`, `m ∈ {0,1}` staircase.
pub fn resolve_convention(triv: &Trivialization, level_one: &SectionSpace) -> Result<ConventionChoice> {
    let labels = level_one_labels(triv);
    let pos = kernel_multiset(triv, level_one, Convention::Positive)? == labels;
    let neg = kernel_multiset(triv, level_one, Convention::Negative)? == labels;
    match (pos, neg) {
        (true, true) => Ok(ConventionChoice {
            convention: Convention::Positive,
            vacuous: true,
        }),
        (true, false) => Ok(ConventionChoice {
            convention: Convention::Positive,
            vacuous: false,
        }),
        (false, true) => Ok(ConventionChoice {
            convention: Convention::Negative,
            vacuous: false,
        }),
        (false, false) => Err(Error::Convention),
    }
}

/// The unique (up to scalar) vector of the relevant weight slice annihilated
/// by the raising set, normalised to leading coefficient 1.
pub fn highest_weight_vector(
    triv: &Trivialization,
    space: &SectionSpace,
    m: &[u32],
    conv: Convention,
) -> Result<ExponentPolynomial> {
    let k = space.k;
    if m.len() != triv.parabolic.rank() || !crate::branching::is_staircase(k, m) {
        return Err(Error::Staircase { m: m.to_vec(), k });
    }
    let mu = conv.extreme_weight(triv, &triv.parabolic.label(k, m));
    let slice = space.weight_slice(triv, &mu);
    let ker = raising_kernel(triv, &slice, &conv.raising_roots(triv))?;
    if ker.len() != 1 {
        return Err(Error::KernelDimension {
            m: m.to_vec(),
            k,
            dim: ker.len(),
        });
    }
    let v = combine(&slice, &ker[0], triv.nvars());
    debug_assert!(!v.is_zero());
    Ok(v.normalized())
}

/// Whether every monomial of `s` has the same level-`k` weight.
pub fn is_weight_pure(triv: &Trivialization, k: u32, s: &ExponentPolynomial) -> bool {
    triv.weights(k, s).len() <= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::JordanModel;
    use crate::okounkov::sections::build_section_space;

    #[test]
    fn p1_tie_and_vectors() {
        let triv = Trivialization::new(JordanModel::Rect { p: 1, q: 1 }).unwrap();
        let s1 = build_section_space(&triv, 1).unwrap();
        let c = resolve_convention(&triv, &s1).unwrap();
        assert!(c.vacuous);
        let z = highest_weight_vector(&triv, &s1, &[1], c.convention).unwrap();
        assert_eq!(z, ExponentPolynomial::variable(1, 0));
        let one = highest_weight_vector(&triv, &s1, &[0], c.convention).unwrap();
        assert_eq!(one, ExponentPolynomial::one(1));
    }

    #[test]
    fn gr24_plucker() {
        let triv = Trivialization::new(JordanModel::Rect { p: 2, q: 2 }).unwrap();
        let s1 = build_section_space(&triv, 1).unwrap();
        let c = resolve_convention(&triv, &s1).unwrap();
        assert!(!c.vacuous);
        let det = highest_weight_vector(&triv, &s1, &[1, 1], c.convention).unwrap();
        assert_eq!(det.len(), 2);
        assert_eq!(det.total_degree(), 2);
        assert!(is_weight_pure(&triv, 1, &det));
        assert_eq!(det.valuation().unwrap(), vec![1, 1, 0, 0]);
    }
}
