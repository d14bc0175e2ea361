use super::element::Element;
use super::model::JordanModel;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

fn bilinear<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn same3<S: Scalar>(x: &Element<S>, y: &Element<S>, z: &Element<S>) -> Result<()> {
    x.check_same(y)?;
    x.check_same(z)
}

/// `{x, w̄, z}`: the triple product with the middle slot given by its stored
/// V-representative `w`.
pub fn triple<S: Scalar>(x: &Element<S>, w: &Element<S>, z: &Element<S>) -> Result<Element<S>> {
    same3(x, w, z)?;
    Ok(triple_unchecked(x, w, z))
}

pub(crate) fn triple_unchecked<S: Scalar>(
    x: &Element<S>,
    w: &Element<S>,
    z: &Element<S>,
) -> Element<S> {
    match x.model {
        JordanModel::Rect { .. } => {
            let (xm, wa, zm) = (x.to_matrix(), w.to_matrix().adjoint(), z.to_matrix());
            let a = &(&xm * &wa) * &zm;
            let b = &(&zm * &wa) * &xm;
            Element::from_coords(x.model, (&a + &b).data().to_vec())
        }
        JordanModel::Spin { .. } => {
            let wb = w.conj();
            let two = S::from_i64(2);
            let cx = two.clone() * bilinear(&x.coords, &wb.coords);
            let cz = two.clone() * bilinear(&z.coords, &wb.coords);
            let cw = two * bilinear(&x.coords, &z.coords);
            let coords = (0..x.dim())
                .map(|i| {
                    cx.clone() * z.coords[i].clone() + cz.clone() * x.coords[i].clone()
                        - cw.clone() * wb.coords[i].clone()
                })
                .collect();
            Element::from_coords(x.model, coords)
        }
    }
}

/// `Q_x w̄ = ½{x, w̄, x}`; conjugate-linear in `w`.
pub fn quad<S: Scalar>(x: &Element<S>, w: &Element<S>) -> Result<Element<S>> {
    x.check_same(w)?;
    Ok(quad_unchecked(x, w))
}

pub(crate) fn quad_unchecked<S: Scalar>(x: &Element<S>, w: &Element<S>) -> Element<S> {
    triple_unchecked(x, w, x).scale(&S::from_ratio(1, 2))
}

/// `x^{(3)} = Q_x x̄`.
pub fn cube<S: Scalar>(x: &Element<S>) -> Element<S> {
    quad_unchecked(x, x)
}

/// Matrix of the linear operator `D(x, w̄) = {x, w̄, ·}` on V.
pub fn d_operator<S: Scalar>(x: &Element<S>, w: &Element<S>) -> Result<Matrix<S>> {
    x.check_same(w)?;
    let n = x.dim();
    let cols: Vec<Vec<S>> = (0..n)
        .map(|k| triple_unchecked(x, w, &Element::basis(x.model, k)).coords)
        .collect();
    Ok(Matrix::from_columns(n, &cols))
}

/// Matrix `A` with `Q_x w̄ = A · conj(w)`.
pub fn q_operator<S: Scalar>(x: &Element<S>) -> Matrix<S> {
    let n = x.dim();
    let cols: Vec<Vec<S>> = (0..n)
        .map(|k| quad_unchecked(x, &Element::basis(x.model, k)).coords)
        .collect();
    Matrix::from_columns(n, &cols)
}

/// Bergman operator `B(x, w̄) = Id − D(x, w̄) + Q_x Q_{w̄}` as a matrix on V.
pub fn bergman<S: Scalar>(x: &Element<S>, w: &Element<S>) -> Result<Matrix<S>> {
    let d = d_operator(x, w)?;
    let qq = &q_operator(x) * &q_operator(w).conj();
    Ok(&(&Matrix::identity(x.dim()) - &d) + &qq)
}

/// Rect closed form `z ↦ (I − x w*) z (I − w* x)`; `None` for other models.
pub fn bergman_closed<S: Scalar>(x: &Element<S>, w: &Element<S>) -> Option<Matrix<S>> {
    let JordanModel::Rect { p, q } = x.model else {
        return None;
    };
    let (xm, wa) = (x.to_matrix(), w.to_matrix().adjoint());
    let left = &Matrix::identity(p) - &(&xm * &wa);
    let right = &Matrix::identity(q) - &(&wa * &xm);
    let n = p * q;
    let cols: Vec<Vec<S>> = (0..n)
        .map(|k| {
            let z = Element::<S>::basis(x.model, k).to_matrix();
            (&(&left * &z) * &right).data().to_vec()
        })
        .collect();
    Some(Matrix::from_columns(n, &cols))
}

pub fn is_quasi_invertible<S: Scalar>(x: &Element<S>, w: &Element<S>) -> Result<bool> {
    Ok(!S::is_singular(&bergman(x, w)?))
}

/// `x^{w̄} = B(x, w̄)⁻¹ (x − Q_x w̄)`.
pub fn quasi_inverse<S: Scalar>(x: &Element<S>, w: &Element<S>) -> Result<Element<S>> {
    let b = bergman(x, w)?;
    if S::is_singular(&b) {
        return Err(Error::NotQuasiInvertible);
    }
    let inv = b.inverse().ok_or(Error::NotQuasiInvertible)?;
    let rhs = &x.clone() - &quad_unchecked(x, w);
    Ok(Element::from_coords(x.model, inv.mul_vec(&rhs.coords)))
}

/// `τ(x, w̄) = Tr D(x, w̄)`.
pub fn trace_form<S: Scalar>(x: &Element<S>, w: &Element<S>) -> Result<S> {
    Ok(d_operator(x, w)?.trace())
}

/// `(x | z) = τ(x, z̄)`.
pub fn inner_product<S: Scalar>(x: &Element<S>, z: &Element<S>) -> Result<S> {
    trace_form(x, z)
}

/// Closed form of the inner product: `(p+q) Tr(x z*)`, resp. `2n Σ x_i z̄_i`.
pub fn inner_product_closed<S: Scalar>(x: &Element<S>, z: &Element<S>) -> S {
    let c = S::from_i64(match x.model {
        JordanModel::Rect { .. } => x.model.structure_constant() as i64,
        JordanModel::Spin { n } => 2 * n as i64,
    });
    c * bilinear(&x.coords, &z.conj().coords)
}

/// Gram matrix of `(·|·)` on the coordinate basis.
pub fn gram_matrix<S: Scalar>(model: JordanModel) -> Result<Matrix<S>> {
    let n = model.dim();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            *g.get_mut(i, j) =
                inner_product(&Element::basis(model, i), &Element::basis(model, j))?;
        }
    }
    Ok(g)
}

/// Generic minimum polynomial `Δ(x, w̄)`.
pub fn generic_det<S: Scalar>(x: &Element<S>, w: &Element<S>) -> Result<S> {
    x.check_same(w)?;
    Ok(match x.model {
        JordanModel::Rect { p, .. } => {
            let m = &Matrix::identity(p) - &(&x.to_matrix() * &w.to_matrix().adjoint());
            m.determinant()
        }
        JordanModel::Spin { .. } => {
            let wb = w.conj();
            S::one() - S::from_i64(2) * bilinear(&x.coords, &wb.coords)
                + bilinear(&x.coords, &x.coords) * bilinear(&wb.coords, &wb.coords)
        }
    })
}

/// Spin bilinear form `q(x, z) = Σ x_i z_i`.
pub fn spin_form<S: Scalar>(x: &Element<S>, z: &Element<S>) -> S {
    bilinear(&x.coords, &z.coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss, GaussRat};

    fn r11() -> JordanModel {
        JordanModel::Rect { p: 1, q: 1 }
    }

    fn scalar(v: i64) -> Element<GaussRat> {
        Element::from_ints(r11(), &[v]).unwrap()
    }

    #[test]
    fn scalar_triple_and_quad() {
        assert_eq!(triple(&scalar(2), &scalar(1), &scalar(3)).unwrap(), scalar(12));
        assert_eq!(quad(&scalar(2), &scalar(3)).unwrap(), scalar(12));
    }

    #[test]
    fn rect22_matrix_unit_triple() {
        let m = JordanModel::Rect { p: 2, q: 2 };
        let e11 = Element::<GaussRat>::basis(m, 0);
        let e12 = Element::<GaussRat>::basis(m, 1);
        assert_eq!(triple(&e11, &e11, &e12).unwrap(), e12);
    }

    #[test]
    fn bergman_scalar_cases() {
        let b = bergman(&scalar(1), &scalar(1)).unwrap();
        assert!(b.is_zero());
        assert!(!is_quasi_invertible(&scalar(1), &scalar(1)).unwrap());
        let b0 = bergman(&scalar(5), &scalar(0)).unwrap();
        assert_eq!(b0, Matrix::identity(1));
    }

    #[test]
    fn quasi_inverse_scalar() {
        let q = quasi_inverse(&scalar(2), &scalar(3)).unwrap();
        assert_eq!(q.coords[0], GaussRat::from_ratio(-2, 5));
        let x = scalar(7);
        assert_eq!(quasi_inverse(&x, &scalar(0)).unwrap(), x);
        assert_eq!(quasi_inverse(&scalar(1), &scalar(1)), Err(Error::NotQuasiInvertible));
    }

    #[test]
    fn cocycle_scalar_instance() {
        let u = scalar(1);
        let lhs = generic_det(&u, &scalar(2)).unwrap()
            * generic_det(&quasi_inverse(&u, &scalar(2)).unwrap(), &scalar(3)).unwrap();
        assert_eq!(lhs, GaussRat::from_i64(-4));
        assert_eq!(generic_det(&u, &scalar(5)).unwrap(), GaussRat::from_i64(-4));
    }

    #[test]
    fn rect22_diagonal_det() {
        let m = JordanModel::Rect { p: 2, q: 2 };
        let x = Element::from_ints(m, &[2, 0, 0, 3]).unwrap();
        let w = Element::from_ints(m, &[5, 0, 0, 7]).unwrap();
        assert_eq!(generic_det(&x, &w).unwrap(), GaussRat::from_i64((1 - 10) * (1 - 21)));
    }

    #[test]
    fn frame_trace_form() {
        for m in [JordanModel::Rect { p: 2, q: 3 }, JordanModel::Spin { n: 5 }] {
            let f = m.frame::<GaussRat>();
            let p = GaussRat::from_i64(m.structure_constant() as i64);
            assert_eq!(trace_form(&f[0], &f[0]).unwrap(), p);
            assert_eq!(inner_product(&f[0], &f[1]).unwrap(), GaussRat::from_i64(0));
        }
    }

    #[test]
    fn spin_frame_is_tripotent() {
        let m = JordanModel::Spin { n: 4 };
        for e in m.frame::<GaussRat>() {
            assert_eq!(cube(&e), e);
        }
        let x = Element::new(m, vec![gauss(1, 1, 2), gauss(0, 1, 1), gauss(2, 0, 3), gauss(0, 0, 1)]).unwrap();
        assert_eq!(inner_product(&x, &x).unwrap(), inner_product_closed(&x, &x));
    }
}
