use rand::Rng;

use super::element::Element;
use super::model::JordanModel;
use crate::matrix::Matrix;
use crate::random::Sample;
use crate::scalar::Scalar;

/// Linear automorphism of the Jordan triple that is unitary for `(·|·)`:
/// `X ↦ U X W` for rect, `x ↦ ζ O x` for spin.
#[derive(Clone, Debug)]
pub struct Automorphism<S> {
    pub model: JordanModel,
    pub matrix: Matrix<S>,
}

/// Cayley transform `(I − A)(I + A)⁻¹` of a random skew-Hermitian (or, with
/// `real`, skew-symmetric) matrix with small Gaussian-integer entries, which
/// keeps exact coordinates short.
fn cayley<S: Sample, R: Rng + ?Sized>(n: usize, real: bool, rng: &mut R) -> Matrix<S> {
    let small = |rng: &mut R| S::from_i64(rng.random_range(-2..=2));
    let mut a = Matrix::<S>::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            if i == j {
                if !real {
                    *a.get_mut(i, i) = small(rng) * S::imag_unit();
                }
            } else {
                let v = if real {
                    small(rng)
                } else {
                    small(rng) + small(rng) * S::imag_unit()
                };
                *a.get_mut(j, i) = -v.conj();
                *a.get_mut(i, j) = v;
            }
        }
    }
    let id = Matrix::identity(n);
    let inv = (&id + &a).inverse().expect("I + A is invertible for skew-Hermitian A");
    &(&id - &a) * &inv
}

impl<S: Sample> Automorphism<S> {
    pub fn random<R: Rng + ?Sized>(model: JordanModel, rng: &mut R) -> Self {
        let matrix = match model {
            JordanModel::Rect { p, q } => {
                let u: Matrix<S> = cayley(p, false, rng);
                let w: Matrix<S> = cayley(q, false, rng);
                let n = p * q;
                let mut m = Matrix::zeros(n, n);
                for i in 0..p {
                    for j in 0..q {
                        for k in 0..p {
                            for l in 0..q {
                                *m.get_mut(i * q + j, k * q + l) =
                                    u.get(i, k).clone() * w.get(l, j).clone();
                            }
                        }
                    }
                }
                m
            }
            JordanModel::Spin { n } => {
                let o: Matrix<S> = cayley(n, true, rng);
                let zeta: Matrix<S> = cayley(1, false, rng);
                o.scale(zeta.get(0, 0))
            }
        };
        Self { model, matrix }
    }
}

impl<S: Scalar> Automorphism<S> {
    pub fn apply(&self, x: &Element<S>) -> Element<S> {
        Element::from_coords(self.model, self.matrix.mul_vec(&x.coords))
    }

    /// `h T h⁻¹`, using `h⁻¹ = h*`.
    pub fn conjugate(&self, t: &Matrix<S>) -> Matrix<S> {
        &(&self.matrix * t) * &self.matrix.adjoint()
    }

    pub fn inverse(&self) -> Self {
        Self {
            model: self.model,
            matrix: self.matrix.adjoint(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::ops::triple;
    use crate::random::{random_element, seeded};
    use crate::scalar::GaussRat;

    #[test]
    fn exact_automorphisms_preserve_triple() {
        let mut rng = seeded(7);
        for model in [JordanModel::Rect { p: 2, q: 3 }, JordanModel::Spin { n: 4 }] {
            let h = Automorphism::<GaussRat>::random(model, &mut rng);
            assert_eq!(&h.matrix * &h.matrix.adjoint(), Matrix::identity(model.dim()));
            let x = random_element::<GaussRat, _>(model, &mut rng);
            let w = random_element::<GaussRat, _>(model, &mut rng);
            let z = random_element::<GaussRat, _>(model, &mut rng);
            let lhs = triple(&h.apply(&x), &h.apply(&w), &h.apply(&z)).unwrap();
            assert_eq!(lhs, h.apply(&triple(&x, &w, &z).unwrap()));
        }
    }
}
