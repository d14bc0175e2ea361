use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::jordan::{cube, spin_form, Element, JordanModel};
use crate::scalar::{numerical_rank, to_nalgebra, Scalar, SINGULAR_RTOL};

/// Relative gap below which singular values are merged.
pub const MERGE_RTOL: f64 = 1e-8;
/// Relative size of the spin discriminant below which `σ₁ = σ₂`.
const DISC_RTOL: f64 = 1e-7;

/// `x = Σ σ_j c_j` with `σ₁ > … > σ_k > 0` and orthogonal tripotents `c_j`.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralData {
    pub sigmas: Vec<f64>,
    #[serde(skip)]
    pub tripotents: Vec<Element<Complex64>>,
    /// Rank of each `c_j`.
    pub ranks: Vec<usize>,
}

impl SpectralData {
    pub fn reconstruct(&self, model: JordanModel) -> Element<Complex64> {
        self.sigmas
            .iter()
            .zip(&self.tripotents)
            .fold(Element::zero(model), |acc, (s, c)| {
                &acc + &c.scale(&Complex64::new(*s, 0.0))
            })
    }

    pub fn is_empty(&self) -> bool {
        self.sigmas.is_empty()
    }
}

/// A complete frame of primitive tripotents adapted to `x`, with the
/// coefficient of `x` on each (zero past the rank), ordered decreasingly.
#[derive(Clone, Debug)]
pub struct SpectralFrame {
    pub sigmas: Vec<f64>,
    pub tripotents: Vec<Element<Complex64>>,
}

pub fn spectral_decomposition(x: &Element<Complex64>) -> SpectralData {
    let frame = spectral_frame(x);
    let top = frame.sigmas.first().copied().unwrap_or(0.0);
    let mut data = SpectralData {
        sigmas: Vec::new(),
        tripotents: Vec::new(),
        ranks: Vec::new(),
    };
    if top == 0.0 {
        return data;
    }
    let mut groups: Vec<(Vec<f64>, Element<Complex64>, usize)> = Vec::new();
    for (s, c) in frame.sigmas.iter().zip(&frame.tripotents) {
        if *s <= SINGULAR_RTOL * top {
            break;
        }
        match groups.last_mut() {
            Some((ss, acc, rank)) if ss.last().unwrap() - s < MERGE_RTOL * top => {
                ss.push(*s);
                *acc = &*acc + c;
                *rank += 1;
            }
            _ => groups.push((vec![*s], c.clone(), 1)),
        }
    }
    for (ss, c, rank) in groups {
        data.sigmas.push(ss.iter().sum::<f64>() / ss.len() as f64);
        data.tripotents.push(c);
        data.ranks.push(rank);
    }
    data
}

pub fn spectral_frame(x: &Element<Complex64>) -> SpectralFrame {
    match x.model {
        JordanModel::Rect { p, q } => rect_frame(x, p, q),
        JordanModel::Spin { n } => spin_frame(x, n),
    }
}

/// Orthonormalize the columns of `m`, replacing degenerate ones by completed
/// standard basis vectors.
fn orthonormal_columns(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let (rows, cols) = m.shape();
    let mut out: Vec<DVector<Complex64>> = Vec::with_capacity(cols);
    let reduce = |v: DVector<Complex64>, out: &Vec<DVector<Complex64>>| {
        let mut v = v;
        for _ in 0..2 {
            for u in out {
                let c = u.dotc(&v);
                v -= u * c;
            }
        }
        v
    };
    let mut next_basis = 0;
    for j in 0..cols {
        let mut v = reduce(m.column(j).into_owned(), &out);
        while v.norm() < 1e-6 {
            let mut e = DVector::zeros(rows);
            e[next_basis] = Complex64::new(1.0, 0.0);
            next_basis += 1;
            v = reduce(e, &out);
        }
        let nv = v.norm();
        out.push(v / Complex64::new(nv, 0.0));
    }
    DMatrix::from_columns(&out)
}

fn rect_frame(x: &Element<Complex64>, p: usize, q: usize) -> SpectralFrame {
    let svd = to_nalgebra(&x.to_matrix()).svd(true, true);
    let u = svd.u.expect("left singular vectors");
    let v = svd.v_t.expect("right singular vectors").adjoint();
    let r = p.min(q);
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
    let top = order.first().map_or(0.0, |&i| svd.singular_values[i]);
    let sigma = |i: usize| {
        let s = svd.singular_values[i];
        if s <= SINGULAR_RTOL * top {
            0.0
        } else {
            s
        }
    };
    let u = orthonormal_columns(&DMatrix::from_columns(
        &order.iter().map(|&i| u.column(i).into_owned()).collect::<Vec<_>>(),
    ));
    let v = orthonormal_columns(&DMatrix::from_columns(
        &order.iter().map(|&i| v.column(i).into_owned()).collect::<Vec<_>>(),
    ));
    let tripotents = (0..r)
        .map(|j| {
            let c = u.column(j) * v.column(j).adjoint();
            let data: Vec<Complex64> = (0..p)
                .flat_map(|a| (0..q).map(move |b| (a, b)))
                .map(|(a, b)| c[(a, b)])
                .collect();
            Element {
                model: x.model,
                coords: data,
            }
        })
        .collect();
    SpectralFrame {
        sigmas: order.iter().map(|&i| sigma(i)).collect(),
        tripotents,
    }
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Split a maximal tripotent `u = e^{iφ} r` (r real) into `e^{iφ}(r ± i s)/2`.
fn split_maximal(u: &Element<Complex64>, n: usize) -> [Element<Complex64>; 2] {
    let quu = spin_form(u, u);
    let phase = Complex64::from_polar(1.0, quu.arg() / 2.0);
    let r: Vec<f64> = u.coords.iter().map(|z| (z / phase).re).collect();
    let rn = r.iter().map(|v| v * v).sum::<f64>().sqrt();
    let k = (0..n)
        .min_by(|&a, &b| r[a].abs().total_cmp(&r[b].abs()))
        .expect("n >= 3");
    let mut s: Vec<f64> = (0..n).map(|i| if i == k { 1.0 } else { 0.0 }).collect();
    let proj = r[k] / (rn * rn);
    for i in 0..n {
        s[i] -= proj * r[i];
    }
    let sn = s.iter().map(|v| v * v).sum::<f64>().sqrt();
    let make = |sign: f64| Element {
        model: u.model,
        coords: (0..n)
            .map(|i| phase * Complex64::new(r[i], sign * s[i] * rn / sn) * 0.5)
            .collect(),
    };
    [make(1.0), make(-1.0)]
}

fn spin_frame(x: &Element<Complex64>, n: usize) -> SpectralFrame {
    let model = x.model;
    let norm2: f64 = x.coords.iter().map(|z| z.norm_sqr()).sum();
    if norm2 == 0.0 {
        return SpectralFrame {
            sigmas: vec![0.0, 0.0],
            tripotents: model.frame(),
        };
    }
    let s = 2.0 * norm2;
    let t = spin_form(x, x).norm();
    let disc = (s * s - 4.0 * t * t).max(0.0).sqrt();
    // rounding in s² − 4t² is amplified by the square root, so equal σ are
    // detected on the scale of the discriminant
    if disc <= DISC_RTOL * s {
        let s1 = (s / 2.0).sqrt();
        let u = x.scale(&c(1.0 / s1));
        let [c1, c2] = split_maximal(&u, n);
        return SpectralFrame {
            sigmas: vec![s1, s1],
            tripotents: vec![c1, c2],
        };
    }
    let s1 = ((s + disc) / 2.0).sqrt();
    let s2_sq = ((s - disc) / 2.0).max(0.0);
    let s2 = if s2_sq.sqrt() <= SINGULAR_RTOL * s1 { 0.0 } else { s2_sq.sqrt() };
    let x3 = cube(x);
    let c1 = (&x3 - &x.scale(&c(s2 * s2))).scale(&c(1.0 / (s1 * (s1 * s1 - s2 * s2))));
    let c2 = if s2 == 0.0 {
        c1.conj()
    } else {
        (x - &c1.scale(&c(s1))).scale(&c(1.0 / s2))
    };
    SpectralFrame {
        sigmas: vec![s1, s2],
        tripotents: vec![c1, c2],
    }
}

/// Rank of `x`: matrix rank for rect, 0/1/2 by the norm form for spin.
pub fn rank<S: Scalar>(x: &Element<S>) -> usize {
    match x.model {
        JordanModel::Rect { .. } => {
            if S::EXACT {
                S::matrix_rank(&x.to_matrix())
            } else {
                numerical_rank(&x.to_matrix().to_c64(), SINGULAR_RTOL)
            }
        }
        JordanModel::Spin { .. } => {
            if x.is_zero() {
                return 0;
            }
            let q = spin_form(x, x);
            let norm2: f64 = x.coords.iter().map(|z| z.modulus().powi(2)).sum();
            let vanishes = if S::EXACT {
                q.is_zero()
            } else {
                q.modulus() <= SINGULAR_RTOL * norm2
            };
            if vanishes {
                1
            } else {
                2
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::tripotent::is_tripotent;

    fn r22() -> JordanModel {
        JordanModel::Rect { p: 2, q: 2 }
    }

    fn el(model: JordanModel, re: &[f64]) -> Element<Complex64> {
        Element::new(model, re.iter().map(|&v| c(v)).collect()).unwrap()
    }

    #[test]
    fn zero_is_empty() {
        assert!(spectral_decomposition(&Element::zero(r22())).is_empty());
    }

    #[test]
    fn diagonal_example() {
        let d = spectral_decomposition(&el(r22(), &[3.0, 0.0, 0.0, 1.0]));
        assert_eq!(d.sigmas.len(), 2);
        assert!((d.sigmas[0] - 3.0).abs() < 1e-12 && (d.sigmas[1] - 1.0).abs() < 1e-12);
        assert!(d.tripotents[0].max_abs_diff(&el(r22(), &[1.0, 0.0, 0.0, 0.0])) < 1e-12);
        assert!(d.tripotents[1].max_abs_diff(&el(r22(), &[0.0, 0.0, 0.0, 1.0])) < 1e-12);
    }

    #[test]
    fn equal_values_merge() {
        let x = el(r22(), &[1.0, 0.0, 0.0, 1.0]);
        let d = spectral_decomposition(&x);
        assert_eq!(d.sigmas.len(), 1);
        assert_eq!(d.ranks, vec![2]);
        assert!(d.tripotents[0].max_abs_diff(&x) < 1e-12);
    }

    #[test]
    fn spin_cases() {
        let m = JordanModel::Spin { n: 5 };
        let frame: Vec<Element<Complex64>> = m.frame();
        let x = &frame[0].scale(&c(3.0)) + &frame[1].scale(&c(0.5));
        let d = spectral_decomposition(&x);
        assert!((d.sigmas[0] - 3.0).abs() < 1e-12 && (d.sigmas[1] - 0.5).abs() < 1e-12);
        assert!(d.reconstruct(m).max_abs_diff(&x) < 1e-12);
        let real = el(m, &[1.0, 2.0, 0.0, -1.0, 0.5]);
        let f = spectral_frame(&real);
        assert!((f.sigmas[0] - f.sigmas[1]).abs() < 1e-12);
        for t in &f.tripotents {
            assert!(is_tripotent(t));
        }
        assert_eq!(rank(&frame[0]), 1);
        assert_eq!(rank(&real), 2);
    }
}
