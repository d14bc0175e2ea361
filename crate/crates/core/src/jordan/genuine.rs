//! The pair (V, V′) with V′ kept as its own space: `q x p` matrices for rect,
//! ℂⁿ for spin. Used to check the stored-representative convention.

use super::element::Element;
use super::model::JordanModel;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Raw V′ coordinates (row-major `q x p` for rect).
#[derive(Clone, Debug, PartialEq)]
pub struct DualElement<S> {
    pub model: JordanModel,
    pub coords: Vec<S>,
}

fn bilinear<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn spin_triple<S: Scalar>(x: &[S], y: &[S], z: &[S]) -> Vec<S> {
    let two = S::from_i64(2);
    let (a, b, c) = (bilinear(x, y), bilinear(z, y), bilinear(x, z));
    (0..x.len())
        .map(|i| {
            two.clone()
                * (a.clone() * z[i].clone() + b.clone() * x[i].clone() - c.clone() * y[i].clone())
        })
        .collect()
}

/// `x̄ ∈ V′`.
pub fn involution<S: Scalar>(x: &Element<S>) -> DualElement<S> {
    let coords = match x.model {
        JordanModel::Rect { .. } => x.to_matrix().adjoint().data().to_vec(),
        JordanModel::Spin { .. } => x.conj().coords,
    };
    DualElement {
        model: x.model,
        coords,
    }
}

/// `ȳ ∈ V` for `y ∈ V′`.
pub fn involution_dual<S: Scalar>(y: &DualElement<S>) -> Element<S> {
    let coords = match y.model {
        JordanModel::Rect { p, q } => Matrix::from_row_major(q, p, y.coords.clone())
            .adjoint()
            .data()
            .to_vec(),
        JordanModel::Spin { .. } => y.coords.iter().map(|c| c.conj()).collect(),
    };
    Element {
        model: y.model,
        coords,
    }
}

/// `{x, y, z}` with `y ∈ V′`.
pub fn triple_v<S: Scalar>(x: &Element<S>, y: &DualElement<S>, z: &Element<S>) -> Element<S> {
    let coords = match x.model {
        JordanModel::Rect { p, q } => {
            let ym = Matrix::from_row_major(q, p, y.coords.clone());
            let (xm, zm) = (x.to_matrix(), z.to_matrix());
            (&(&(&xm * &ym) * &zm) + &(&(&zm * &ym) * &xm)).data().to_vec()
        }
        JordanModel::Spin { .. } => spin_triple(&x.coords, &y.coords, &z.coords),
    };
    Element {
        model: x.model,
        coords,
    }
}

/// `{y, x, u}` with `y, u ∈ V′`, `x ∈ V`.
pub fn triple_dual<S: Scalar>(y: &DualElement<S>, x: &Element<S>, u: &DualElement<S>) -> DualElement<S> {
    let coords = match y.model {
        JordanModel::Rect { p, q } => {
            let ym = Matrix::from_row_major(q, p, y.coords.clone());
            let um = Matrix::from_row_major(q, p, u.coords.clone());
            let xm = x.to_matrix();
            (&(&(&ym * &xm) * &um) + &(&(&um * &xm) * &ym)).data().to_vec()
        }
        JordanModel::Spin { .. } => spin_triple(&y.coords, &x.coords, &u.coords),
    };
    DualElement {
        model: y.model,
        coords,
    }
}

/// `Q_x y` for `x ∈ V`, `y ∈ V′`.
pub fn quad_v<S: Scalar>(x: &Element<S>, y: &DualElement<S>) -> Element<S> {
    triple_v(x, y, x).scale(&S::from_ratio(1, 2))
}

/// `Q_y x` for `y ∈ V′`, `x ∈ V`.
pub fn quad_dual<S: Scalar>(y: &DualElement<S>, x: &Element<S>) -> DualElement<S> {
    let t = triple_dual(y, x, y);
    DualElement {
        model: t.model,
        coords: t.coords.into_iter().map(|c| c * S::from_ratio(1, 2)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::ops;
    use crate::scalar::gauss;

    #[test]
    fn stored_convention_matches_pair() {
        let m = JordanModel::Rect { p: 2, q: 3 };
        let x = Element::new(m, (0..6).map(|i| gauss(i, 1 - i, 2)).collect()).unwrap();
        let w = Element::new(m, (0..6).map(|i| gauss(2 - i, i, 3)).collect()).unwrap();
        let z = Element::new(m, (0..6).map(|i| gauss(i * i, 1, 1)).collect()).unwrap();
        assert_eq!(ops::triple(&x, &w, &z).unwrap(), triple_v(&x, &involution(&w), &z));
        let y = involution(&w);
        let lhs = quad_dual(&involution(&x), &involution_dual(&y));
        let rhs = involution(&quad_v(&x, &y));
        assert_eq!(lhs, rhs);
    }
}
