use num_complex::Complex64;
use serde::Serialize;

use super::point::{NormalForm, PairPoint};
use crate::error::{Error, Result};
use crate::jordan::{bergman, d_operator, q_operator, quasi_inverse, Element, JordanModel};
use crate::matrix::Matrix;
use crate::scalar::singular_values;
use crate::structure::SpectralData;

/// Below this scaled smallest singular value of `B(x, ā)` the direct Bergman
/// product for Γ is replaced by the contour mean.
const GAMMA_RCOND: f64 = 1e-6;
const CONTOUR_POINTS: usize = 32;
const CONTOUR_RADII: [f64; 4] = [0.5, 0.35, 0.7, 0.25];

/// Value `μ̃_𝔨` of the moment map, an anti-Hermitian operator on V.
#[derive(Clone, Debug, Serialize)]
pub struct MomentValue {
    #[serde(skip)]
    pub operator: Matrix<Complex64>,
}

impl MomentValue {
    /// `‖M + M*‖_max`.
    pub fn anti_hermitian_defect(&self) -> f64 {
        (&self.operator + &self.operator.adjoint()).max_abs()
    }

    pub fn distance(&self, other: &MomentValue) -> f64 {
        crate::scalar::operator_norm(&(&self.operator - &other.operator))
    }
}

fn i_times(m: &Matrix<Complex64>) -> Matrix<Complex64> {
    m.scale(&Complex64::new(0.0, 1.0))
}

/// `σ_min(B(x, ā)) / (1 + ‖x‖‖a‖)²`.
fn conditioning(x: &Element<Complex64>, a: &Element<Complex64>) -> Result<f64> {
    let sv = singular_values(&bergman(x, a)?);
    let scale = (1.0 + x.coord_norm() * a.coord_norm()).powi(2);
    Ok(sv.last().copied().unwrap_or(0.0) / scale)
}

fn inv(m: &Matrix<Complex64>) -> Matrix<Complex64> {
    m.inverse().expect("positive definite operator is invertible")
}

/// `Q_x Γ′⁻¹ Q_{x̄}` where `Γ′` is given by its stored-coordinate matrix `g`.
fn q_sandwich(x: &Element<Complex64>, g_inv: &Matrix<Complex64>) -> Matrix<Complex64> {
    let a = q_operator(x);
    &(&a * &g_inv.conj()) * &a.conj()
}

/// `B(x, t ā) B(x^{ta}, −x̄^{tā}) B(tā, x̄)` with `a ↦ ta`, `ā ↦ tā` for complex
/// `t`; holomorphic in `t` and equal to `Γ_{x,ta}` for real `t`.
fn gamma_at(x: &Element<Complex64>, a: &Element<Complex64>, t: Complex64) -> Result<Matrix<Complex64>> {
    let (at, atc) = (a.scale(&t), a.scale(&t.conj()));
    let q1 = quasi_inverse(x, &atc)?;
    let q2 = quasi_inverse(x, &at)?;
    let left = bergman(x, &atc)?;
    let mid = bergman(&q1, &-&q2)?;
    let right = bergman(&at, x)?;
    Ok(&(&left * &mid) * &right)
}

fn contour(radius: f64) -> impl Iterator<Item = Complex64> {
    (0..CONTOUR_POINTS).map(move |k| {
        let theta = std::f64::consts::TAU * (k as f64 + 0.5) / CONTOUR_POINTS as f64;
        Complex64::new(1.0, 0.0) + Complex64::from_polar(radius, theta)
    })
}

/// `Γ_{x,a} = B(x,a) B(x^a, −x̄^ā) B(ā, x̄)`. Off the quasi-invertible locus it
/// is evaluated through its polynomial dependence on `a`: the mean of
/// `Γ_{x,ta}` (complexified) over a circle around `t = 1`.
pub fn gamma_operator(x: &Element<Complex64>, a: &Element<Complex64>) -> Result<Matrix<Complex64>> {
    x.check_same(a)?;
    if conditioning(x, a)? > GAMMA_RCOND {
        return gamma_at(x, a, Complex64::new(1.0, 0.0));
    }
    let mut best: Option<(f64, f64)> = None;
    for radius in CONTOUR_RADII {
        let mut worst = f64::INFINITY;
        for t in contour(radius) {
            worst = worst
                .min(conditioning(x, &a.scale(&t))?)
                .min(conditioning(x, &a.scale(&t.conj()))?);
        }
        if best.is_none_or(|(w, _)| worst > w) {
            best = Some((worst, radius));
        }
    }
    let (worst, radius) = best.expect("nonempty radius list");
    if worst <= GAMMA_RCOND * 1e-6 {
        return Err(Error::NotQuasiInvertible);
    }
    let n = x.dim();
    let mut sum = Matrix::zeros(n, n);
    for t in contour(radius) {
        sum = &sum + &gamma_at(x, a, t)?;
    }
    Ok(sum.scale(&Complex64::new(1.0 / CONTOUR_POINTS as f64, 0.0)))
}

/// `i(B(x,−x̄)⁻¹ − Q_x B(−x̄,x)⁻¹ Q_{x̄})`.
pub fn moment_chart(x: &Element<Complex64>) -> MomentValue {
    let neg = -x;
    let b = bergman(x, &neg).expect("same model");
    let b_dual = bergman(&neg, x).expect("same model");
    let m = &inv(&b) - &q_sandwich(x, &inv(&b_dual));
    MomentValue { operator: i_times(&m) }
}

/// `i(Id − Σ σ_j²/(1+σ_j²) D(e_j, ē_j))`.
pub fn moment_spectral(model: JordanModel, spectral: &SpectralData) -> MomentValue {
    let n = model.dim();
    let mut m = Matrix::identity(n);
    for (s, c) in spectral.sigmas.iter().zip(&spectral.tripotents) {
        let w = s * s / (1.0 + s * s);
        let d = d_operator(c, c).expect("same model");
        m = &m - &d.scale(&Complex64::new(w, 0.0));
    }
    MomentValue { operator: i_times(&m) }
}

/// `i(B(ā,x̄) Γ_{x,a}⁻¹ B(x,a) − Q_x Γ_{x̄,ā}⁻¹ Q_{x̄})`.
pub fn moment_general(point: &PairPoint) -> Result<MomentValue> {
    let (x, a) = (&point.x, &point.a);
    let g_inv = inv(&gamma_operator(x, a)?);
    let first = &(&bergman(a, x)? * &g_inv) * &bergman(x, a)?;
    let m = &first - &q_sandwich(x, &g_inv);
    Ok(MomentValue { operator: i_times(&m) })
}

/// `i(Id − Σ σ_j²/(1+σ_j²) D(e_j, ē_j) − D(e, ē))` for `z = Σ σ_j e_j`.
pub fn moment_normal_form(nf: &NormalForm) -> MomentValue {
    let spectral = nf.spectral();
    let base = moment_spectral(nf.z.model, &spectral);
    MomentValue {
        operator: &base.operator - &i_times(&nf.e.d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_element_scaled, seeded};
    use crate::structure::spectral_decomposition;

    fn c(v: f64) -> Complex64 {
        Complex64::new(v, 0.0)
    }

    #[test]
    fn origin_maps_to_i_identity() {
        let m = JordanModel::Rect { p: 2, q: 2 };
        let v = moment_chart(&Element::zero(m));
        assert!(v.operator.max_abs_diff(&i_times(&Matrix::identity(4))) < 1e-15);
    }

    #[test]
    fn scalar_unit_point_is_zero() {
        let m = JordanModel::Rect { p: 1, q: 1 };
        let x = Element::new(m, vec![c(1.0)]).unwrap();
        assert!(moment_chart(&x).operator.max_abs() < 1e-15);
        let s = moment_spectral(m, &spectral_decomposition(&x));
        assert!(s.operator.max_abs() < 1e-15);
    }

    #[test]
    fn gamma_at_zero_is_bergman() {
        let m = JordanModel::Rect { p: 2, q: 3 };
        let mut rng = seeded(1);
        let x = random_element_scaled(m, 1.0, &mut rng);
        let g = gamma_operator(&x, &Element::zero(m)).unwrap();
        assert!(g.max_abs_diff(&bergman(&x, &-&x).unwrap()) < 1e-12);
    }

    #[test]
    fn spectral_example_rect22() {
        let m = JordanModel::Rect { p: 2, q: 2 };
        let e: Vec<Element<Complex64>> = m.frame();
        let x = e[0].scale(&c(3.0));
        let v = moment_spectral(m, &spectral_decomposition(&x));
        let d = d_operator(&e[0], &e[0]).unwrap();
        let expect = i_times(&(&Matrix::identity(4) - &d.scale(&c(0.9))));
        assert!(v.operator.max_abs_diff(&expect) < 1e-12);
        assert!(moment_chart(&x).operator.max_abs_diff(&expect) < 1e-12);
    }

    #[test]
    fn gamma_at_normal_form_is_bergman_of_z() {
        let m = JordanModel::Rect { p: 2, q: 3 };
        let f: Vec<Element<Complex64>> = m.frame();
        let z = f[1].scale(&c(1.7));
        let x = &f[0] + &z;
        let g = gamma_operator(&x, &f[0]).unwrap();
        assert!(g.max_abs_diff(&bergman(&z, &-&z).unwrap()) < 1e-10);
    }

    #[test]
    fn contour_mean_matches_direct_product() {
        let m = JordanModel::Rect { p: 2, q: 2 };
        let mut rng = seeded(9);
        let x = random_element_scaled(m, 1.0, &mut rng);
        let a = random_element_scaled(m, 1.0, &mut rng);
        let direct = gamma_at(&x, &a, c(1.0)).unwrap();
        let n = x.dim();
        let mut sum = Matrix::zeros(n, n);
        for t in contour(0.3) {
            sum = &sum + &gamma_at(&x, &a, t).unwrap();
        }
        let mean = sum.scale(&c(1.0 / CONTOUR_POINTS as f64));
        assert!(mean.max_abs_diff(&direct) < 1e-9 * direct.max_abs());
    }
}
