use num_complex::Complex64;
use num_rational::Rational64;
use rand::Rng;

use super::spectral::spectral_frame;
use super::tripotent::{jordan_algebra_det, Frame};
use crate::error::{Error, Result};
use crate::jordan::{trace_form, Automorphism, Element, JordanModel};
use crate::lie::MarkedParabolic;
use crate::scalar::{GaussRat, Scalar};

/// The standard frame ordered so that `e_j ↔ γ_j`, validated against
/// `γ_j(D(e_i, ē_i)) = (1/p) τ(D(e_i, ē_i) e_j, ē_j)`.
pub fn frame_from_parabolic(
    model: JordanModel,
    parabolic: &MarkedParabolic,
) -> Result<Frame<GaussRat>> {
    if !model.is_compatible(parabolic) {
        return Err(Error::IncompatibleParabolic {
            model: model.to_string(),
            parabolic: parabolic.to_string(),
        });
    }
    let frame = Frame::new(model.frame::<GaussRat>())?;
    let table = gamma_table(model, parabolic, &frame)?;
    for (i, row) in table.iter().enumerate() {
        for (j, (jordan, root)) in row.iter().enumerate() {
            if jordan != &GaussRat::from_ratio(*root.numer(), *root.denom()) {
                return Err(Error::RootData(format!(
                    "gamma identity fails at (i, j) = ({}, {}): {:?} vs {root}",
                    i + 1,
                    j + 1,
                    jordan
                )));
            }
        }
    }
    Ok(frame)
}

/// `[i][j] = ((1/p) τ(D(e_i, ē_i) e_j, ē_j), ⟨γ_j, γ_i^∨⟩)`.
pub fn gamma_table(
    model: JordanModel,
    parabolic: &MarkedParabolic,
    frame: &Frame<GaussRat>,
) -> Result<Vec<Vec<(GaussRat, Rational64)>>> {
    let p = GaussRat::from_i64(model.structure_constant() as i64);
    frame
        .tripotents
        .iter()
        .zip(&parabolic.gammas)
        .map(|(ti, gi)| {
            frame
                .tripotents
                .iter()
                .zip(&parabolic.gammas)
                .map(|(tj, gj)| {
                    let te = Element {
                        model,
                        coords: ti.d.mul_vec(&tj.e.coords),
                    };
                    let lhs = trace_form(&te, &tj.e)? / p.clone();
                    Ok((lhs, gj.pair_coroot(gi)))
                })
                .collect()
        })
        .collect()
}

/// Checks `Δ_c(x) = 0` over a constructive family of rank-`k` tripotents:
/// partial sums of the spectral frame of `x`, of the standard frame, and of
/// `samples` random conjugates of the standard frame.
pub fn rank_condition_check<R: Rng + ?Sized>(
    x: &Element<Complex64>,
    k: usize,
    samples: usize,
    rng: &mut R,
) -> bool {
    let model = x.model;
    let r = model.rank();
    if k == 0 {
        return false;
    }
    if k > r {
        return true;
    }
    let sum = |ts: &[Element<Complex64>]| {
        ts[..k]
            .iter()
            .fold(Element::zero(model), |acc, t| &acc + t)
    };
    let standard: Vec<Element<Complex64>> = model.frame();
    let mut family = vec![sum(&spectral_frame(x).tripotents), sum(&standard)];
    for _ in 0..samples {
        let h = Automorphism::<Complex64>::random(model, rng);
        let conj: Vec<Element<Complex64>> = standard.iter().map(|e| h.apply(e)).collect();
        family.push(sum(&conj));
    }
    let scale = (1.0 + x.coord_norm()).powi(k as i32);
    family.iter().all(|c| {
        jordan_algebra_det(c, x).is_ok_and(|d| d.modulus() <= 1e-9 * scale)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::seeded;

    #[test]
    fn rect_and_spin_frames_validate() {
        for s in ["rect:1,1", "rect:2,2", "rect:2,3", "spin:3", "spin:4", "spin:7"] {
            let m = JordanModel::parse(s).unwrap();
            let par = m.parabolic().unwrap();
            let f = frame_from_parabolic(m, &par).unwrap();
            assert_eq!(f.len(), m.rank(), "{s}");
        }
    }

    #[test]
    fn incompatible_pair_rejected() {
        let m = JordanModel::Rect { p: 2, q: 2 };
        let par = JordanModel::Rect { p: 1, q: 3 }.parabolic().unwrap();
        assert!(matches!(
            frame_from_parabolic(m, &par),
            Err(Error::IncompatibleParabolic { .. })
        ));
    }

    #[test]
    fn rank_condition_examples() {
        let m = JordanModel::Rect { p: 2, q: 2 };
        let f: Vec<Element<Complex64>> = m.frame();
        let mut rng = seeded(3);
        let x = &f[0] + &f[1];
        assert!(!rank_condition_check(&x, 1, 8, &mut rng));
        assert!(rank_condition_check(&f[0], 2, 8, &mut rng));
        assert!(rank_condition_check(&Element::zero(m), 1, 8, &mut rng));
    }
}
