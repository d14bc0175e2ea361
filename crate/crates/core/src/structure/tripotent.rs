use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::jordan::{cube, d_operator, generic_det, Element, JordanModel};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Tolerance for the tripotent equation on the float backend.
pub const TRIPOTENT_TOL: f64 = 1e-12;

/// Tests `Q_x x̄ = x`.
pub fn is_tripotent<S: Scalar>(x: &Element<S>) -> bool {
    cube(x).close(x, TRIPOTENT_TOL)
}

/// A tripotent with its Peirce projections.
#[derive(Clone, Debug)]
pub struct Tripotent<S> {
    pub e: Element<S>,
    /// `D(e, ē)`.
    pub d: Matrix<S>,
    pub p2: Matrix<S>,
    pub p1: Matrix<S>,
    pub p0: Matrix<S>,
}

impl<S: Scalar> Tripotent<S> {
    pub fn new(e: Element<S>) -> Result<Self> {
        if !is_tripotent(&e) {
            return Err(Error::NotTripotent);
        }
        let d = d_operator(&e, &e)?;
        let (p2, p1, p0) = peirce_projections(&d);
        Ok(Self { e, d, p2, p1, p0 })
    }

    pub fn model(&self) -> JordanModel {
        self.e.model
    }

    /// `P_k` for `k ∈ {0, 1, 2}`.
    pub fn projection(&self, k: usize) -> &Matrix<S> {
        match k {
            0 => &self.p0,
            1 => &self.p1,
            2 => &self.p2,
            _ => panic!("Peirce index {k} out of range"),
        }
    }

    /// `dim V_k(e)`, read off the trace of the projection.
    pub fn peirce_dim(&self, k: usize) -> usize {
        self.projection(k).trace().to_c64().re.round() as usize
    }

    /// `τ(e, ē) = Tr D(e, ē)`.
    pub fn trace_constant(&self) -> S {
        self.d.trace()
    }

    /// `Δ_e(x) = Δ(e − x, ē)`.
    pub fn jordan_det(&self, x: &Element<S>) -> Result<S> {
        jordan_algebra_det(&self.e, x)
    }
}

/// `P₂ = ½D(D−I)`, `P₁ = D(2I−D)`, `P₀ = ½(D−I)(D−2I)`.
pub fn peirce_projections<S: Scalar>(d: &Matrix<S>) -> (Matrix<S>, Matrix<S>, Matrix<S>) {
    let n = d.rows();
    let id = Matrix::identity(n);
    let half = S::from_ratio(1, 2);
    let d_minus = d - &id;
    let two_id = id.scale(&S::from_i64(2));
    let p2 = (d * &d_minus).scale(&half);
    let p1 = d * &(&two_id - d);
    let p0 = (&d_minus * &(d - &two_id)).scale(&half);
    (p2, p1, p0)
}

/// `Δ_e(x) = Δ(e − x, ē)`.
pub fn jordan_algebra_det<S: Scalar>(e: &Element<S>, x: &Element<S>) -> Result<S> {
    e.check_same(x)?;
    generic_det(&(e - x), e)
}

/// An orthogonal system of tripotents with its joint Peirce projections.
#[derive(Clone, Debug)]
pub struct Frame<S> {
    pub tripotents: Vec<Tripotent<S>>,
    joint: BTreeMap<(usize, usize), Matrix<S>>,
}

impl<S: Scalar> Frame<S> {
    /// Checks pairwise strong orthogonality (`e_i ∈ V₀(e_j)`).
    pub fn new(elements: Vec<Element<S>>) -> Result<Self> {
        let tripotents: Vec<Tripotent<S>> = elements
            .into_iter()
            .map(Tripotent::new)
            .collect::<Result<_>>()?;
        for (i, a) in tripotents.iter().enumerate() {
            for (j, b) in tripotents.iter().enumerate() {
                if i != j {
                    let proj = Element {
                        model: a.model(),
                        coords: b.p0.mul_vec(&a.e.coords),
                    };
                    if !proj.close(&a.e, TRIPOTENT_TOL) {
                        return Err(Error::NotTripotent);
                    }
                }
            }
        }
        let r = tripotents.len();
        let n = tripotents.first().map_or(0, |t| t.e.dim());
        let mut joint = BTreeMap::new();
        for i in 0..=r {
            for j in i..=r {
                let mut p = Matrix::identity(n);
                for (l, t) in tripotents.iter().enumerate() {
                    let idx = usize::from(i == l + 1) + usize::from(j == l + 1);
                    p = &p * t.projection(idx);
                }
                joint.insert((i, j), p);
            }
        }
        Ok(Self { tripotents, joint })
    }

    pub fn len(&self) -> usize {
        self.tripotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tripotents.is_empty()
    }

    /// `P_ij` for `0 ≤ i, j ≤ r` (symmetric in `i, j`).
    pub fn joint_projection(&self, i: usize, j: usize) -> &Matrix<S> {
        &self.joint[&(i.min(j), i.max(j))]
    }

    pub fn joint_indices(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.joint.keys().copied()
    }

    pub fn elements(&self) -> Vec<Element<S>> {
        self.tripotents.iter().map(|t| t.e.clone()).collect()
    }

    /// `e₁ + … + e_k`.
    pub fn partial_sum(&self, k: usize) -> Element<S> {
        let model = self.tripotents[0].model();
        self.tripotents[..k]
            .iter()
            .fold(Element::zero(model), |acc, t| &acc + &t.e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRat;

    fn r(p: usize, q: usize) -> JordanModel {
        JordanModel::Rect { p, q }
    }

    #[test]
    fn scalar_tripotents() {
        assert!(is_tripotent(&Element::<GaussRat>::from_ints(r(1, 1), &[1]).unwrap()));
        assert!(!is_tripotent(&Element::<GaussRat>::from_ints(r(1, 1), &[2]).unwrap()));
    }

    #[test]
    fn unitary_is_tripotent() {
        // (1/5) [[3, 4i], [4i, 3]] is unitary.
        let m = r(2, 2);
        let u = Element::new(
            m,
            vec![
                crate::scalar::gauss(3, 0, 5),
                crate::scalar::gauss(0, 4, 5),
                crate::scalar::gauss(0, 4, 5),
                crate::scalar::gauss(3, 0, 5),
            ],
        )
        .unwrap();
        assert!(is_tripotent(&u));
    }

    #[test]
    fn projections_partition_identity() {
        let e = Tripotent::new(Element::<GaussRat>::basis(r(2, 3), 0)).unwrap();
        let sum = &(&e.p0 + &e.p1) + &e.p2;
        assert_eq!(sum, Matrix::identity(6));
        assert_eq!(&e.p1 * &e.p2, Matrix::zeros(6, 6));
        assert_eq!(e.peirce_dim(1), 3);
        assert_eq!(e.trace_constant(), GaussRat::from_i64(5));
    }

    #[test]
    fn jordan_det_examples() {
        let one = Element::<GaussRat>::from_ints(r(1, 1), &[1]).unwrap();
        let x = Element::<GaussRat>::from_ints(r(1, 1), &[7]).unwrap();
        assert_eq!(jordan_algebra_det(&one, &x).unwrap(), GaussRat::from_i64(7));
        assert_eq!(jordan_algebra_det(&one, &one).unwrap(), GaussRat::from_i64(1));
        let e = Element::<GaussRat>::basis(r(2, 2), 0);
        let z = Element::<GaussRat>::from_ints(r(2, 2), &[5, 2, 3, 9]).unwrap();
        assert_eq!(jordan_algebra_det(&e, &z).unwrap(), GaussRat::from_i64(5));
    }

    #[test]
    fn joint_projections_sum_to_identity() {
        for m in [r(2, 3), JordanModel::Spin { n: 5 }] {
            let f = Frame::new(m.frame::<GaussRat>()).unwrap();
            let n = m.dim();
            let sum = f
                .joint_indices()
                .fold(Matrix::zeros(n, n), |acc, (i, j)| &acc + f.joint_projection(i, j));
            assert_eq!(sum, Matrix::identity(n));
        }
    }
}
