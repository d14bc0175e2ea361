use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::highest::{highest_weight_vector, resolve_convention, Convention, ConventionChoice};
use super::poly::Exponent;
use super::sections::{build_section_space, Trivialization};
use crate::branching::{integral_points, staircase_factors};
use crate::error::{Error, Result};
use crate::exact::rref;
use crate::jordan::JordanModel;
use crate::lie::Weight;
use crate::scalar::{GaussRat, Scalar};

#[derive(Clone, Debug, Serialize)]
pub struct OkounkovData {
    pub model: JordanModel,
    pub convention: ConventionChoice,
    /// `v(s_m)` for the 0/1 staircases `m = (1^j, 0^{r−j})`, `j = 0..r`.
    pub generators: Vec<Exponent>,
    /// `Λ(1, v)` for each generator.
    #[serde(serialize_with = "ser_weights")]
    pub lambda_images: Vec<Weight>,
    /// Vertices of the body `Δ(𝓛, N_L⁺, v)` (a subset of the generators).
    pub body_vertices: Vec<Exponent>,
    /// Levels at which finite generation was verified.
    pub levels_checked: Vec<u32>,
}

fn ser_weights<S: serde::Serializer>(w: &[Weight], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(w.iter().map(|w| w.to_strings()))
}

fn fail(check: &'static str, m: &[u32], detail: String) -> Error {
    Error::Okounkov {
        check,
        m: m.to_vec(),
        detail,
    }
}

fn rat(v: u32) -> GaussRat {
    GaussRat::new(
        BigRational::from_integer(BigInt::from(v)),
        BigRational::from_integer(BigInt::from(0)),
    )
}

fn is_nonnegative(c: &GaussRat) -> bool {
    c.im == BigRational::from_integer(BigInt::from(0)) && c.re >= BigRational::from_integer(BigInt::from(0))
}

/// Whether `p` is a convex combination of an affinely independent subset of `pts`.
fn in_hull(p: &[u32], pts: &[&Exponent]) -> bool {
    let n = p.len();
    let t = pts.len();
    for mask in 1u32..(1 << t) {
        let sub: Vec<&Exponent> = (0..t).filter(|i| mask >> i & 1 == 1).map(|i| pts[i]).collect();
        let s = sub.len();
        if s > n + 1 {
            continue;
        }
        // rows: n coordinates plus the affine row; columns: subset points, then p
        let cols = s + 1;
        let mut data = Vec::with_capacity((n + 1) * cols);
        for row in 0..=n {
            for q in &sub {
                data.push(if row < n { rat(q[row]) } else { GaussRat::one() });
            }
            data.push(if row < n { rat(p[row]) } else { GaussRat::one() });
        }
        let (red, pivots) = rref(n + 1, cols, &data);
        // affinely independent and consistent
        if pivots.len() != s || pivots.contains(&s) {
            continue;
        }
        if red.iter().all(|r| is_nonnegative(&r[s])) {
            return true;
        }
    }
    false
}

/// Vertices of `conv(points)`, by exact Carathéodory membership.
pub fn hull_vertices(points: &[Exponent]) -> Vec<Exponent> {
    let mut out = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if out.contains(p) {
            continue;
        }
        let others: Vec<&Exponent> = points
            .iter()
            .enumerate()
            .filter(|&(j, q)| j != i && q != p)
            .map(|(_, q)| q)
            .collect();
        if !in_hull(p, &others) {
            out.push(p.clone());
        }
    }
    out
}

fn zero_one(r: usize, j: usize) -> Vec<u32> {
    (0..r).map(|i| u32::from(i < j)).collect()
}

/// Generators `(1, v(s_m))`, the morphism `Λ`, the body and finite generation
/// up to level `max_level`. Only `rect` models are supported.
pub fn okounkov_pipeline(model: JordanModel, max_level: u32) -> Result<OkounkovData> {
    let triv = Trivialization::new(model)?;
    let r = triv.parabolic.rank();
    let level_one = build_section_space(&triv, 1)?;
    let convention = resolve_convention(&triv, &level_one)?;
    let conv = convention.convention;

    let mut generators = Vec::with_capacity(r + 1);
    let mut lambda_images = Vec::with_capacity(r + 1);
    for j in 0..=r {
        let m = zero_one(r, j);
        let s = highest_weight_vector(&triv, &level_one, &m, conv)?;
        let v = s.valuation()?;
        let image = triv.monomial_weight(1, &v);
        let expected = expected_weight(&triv, conv, 1, &m);
        if image != expected {
            return Err(fail(
                "lambda-image",
                &m,
                format!("Λ(v) = {image}, expected {expected}"),
            ));
        }
        generators.push(v);
        lambda_images.push(image);
    }
    for i in 0..generators.len() {
        for j in 0..i {
            if generators[i] == generators[j] {
                return Err(fail(
                    "distinct-valuations",
                    &zero_one(r, i),
                    format!("v coincides with generator {j}"),
                ));
            }
        }
    }
    let points: Vec<Weight> = integral_points(1, r)
        .iter()
        .map(|m| expected_weight(&triv, conv, 1, m))
        .collect();
    if !same_set(&points, &lambda_images) {
        return Err(fail("lambda-bijection", &[], "Λ images differ from the level-one integral points".into()));
    }

    let mut levels_checked = Vec::new();
    for k in 2..=max_level {
        check_level(&triv, conv, k, &generators)?;
        levels_checked.push(k);
    }

    let body_vertices = hull_vertices(&generators);
    if body_vertices.len() > r + 1 {
        return Err(fail(
            "hull-size",
            &[],
            format!("{} vertices for rank {r}", body_vertices.len()),
        ));
    }
    let vertex_images: Vec<Weight> = body_vertices.iter().map(|v| triv.monomial_weight(1, v)).collect();
    let lambdas: Vec<Weight> = (0..=r)
        .map(|j| expected_weight(&triv, conv, 1, &zero_one(r, j)))
        .collect();
    if !same_set(&vertex_images, &lambdas) {
        return Err(fail("hull-vertices", &[], "Λ(vertices) ≠ {λ_j}".into()));
    }

    Ok(OkounkovData {
        model,
        convention,
        generators,
        lambda_images,
        body_vertices,
        levels_checked,
    })
}

fn expected_weight(triv: &Trivialization, conv: Convention, k: u32, m: &[u32]) -> Weight {
    conv.extreme_weight(triv, &triv.parabolic.label(k, m))
}

fn same_set(a: &[Weight], b: &[Weight]) -> bool {
    a.len() == b.len() && a.iter().all(|w| b.contains(w)) && b.iter().all(|w| a.contains(w))
}

/// `v(s_m) = Σ_j v(s_{m(j)})` padded with `k − m₁` copies of `v(1)`.
fn check_level(triv: &Trivialization, conv: Convention, k: u32, generators: &[Exponent]) -> Result<()> {
    let r = triv.parabolic.rank();
    let space = build_section_space(triv, k)?;
    for m in integral_points(k, r) {
        let v = highest_weight_vector(triv, &space, &m, conv)?.valuation()?;
        let factors = staircase_factors(&m);
        let mut sum = vec![0u32; v.len()];
        let pad = k as usize - factors.len();
        let idx = factors
            .iter()
            .map(|f| f.iter().sum::<u32>() as usize)
            .chain(std::iter::repeat_n(0, pad));
        for g in idx {
            for (s, x) in sum.iter_mut().zip(&generators[g]) {
                *s += x;
            }
        }
        if sum != v {
            return Err(fail(
                "finite-generation",
                &m,
                format!("v = {v:?}, generator sum = {sum:?}"),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_triangle() {
        let pts = vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![1, 0]];
        assert_eq!(hull_vertices(&pts).len(), 3);
        let interior = vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![1, 1]];
        assert_eq!(hull_vertices(&interior).len(), 3);
    }

    #[test]
    fn p1_pipeline() {
        let d = okounkov_pipeline(JordanModel::Rect { p: 1, q: 1 }, 3).unwrap();
        assert_eq!(d.generators, vec![vec![0], vec![1]]);
        assert_eq!(d.body_vertices.len(), 2);
    }

    #[test]
    fn gr24_pipeline() {
        let d = okounkov_pipeline(JordanModel::Rect { p: 2, q: 2 }, 2).unwrap();
        assert_eq!(d.generators[0], vec![0, 0, 0, 0]);
        assert_eq!(d.generators[2], vec![1, 1, 0, 0]);
        assert_eq!(d.body_vertices.len(), 3);
        assert_eq!(d.convention.convention, Convention::Negative);
    }

    #[test]
    fn spin_unsupported() {
        assert!(matches!(
            okounkov_pipeline(JordanModel::Spin { n: 3 }, 1),
            Err(Error::UnsupportedModel(_))
        ));
    }
}
