use num_complex::Complex64;
use serde::Serialize;

use super::formulas::MomentValue;
use super::point::PairPoint;
use crate::error::{Error, Result};
use crate::jordan::{d_operator, inner_product_closed, Element};
use crate::lie::{MarkedParabolic, Weight};
use crate::matrix::Matrix;
use crate::structure::{peirce_projections, spectral_decomposition};

/// Residual above which a frame is rejected by [`moment_to_weight`].
pub const FRAME_RESIDUAL_TOL: f64 = 1e-8;
/// Rounding applied to ν before the polytope membership test.
pub const POLYTOPE_ROUNDING: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct MomentWeight {
    /// `ν₁ ≥ … ≥ ν_r`.
    pub nu: Vec<f64>,
    /// `λ + Σ ν_j γ_j` in ε-coordinates.
    pub weight: Vec<f64>,
}

impl MomentWeight {
    /// `1 ≥ ν₁ ≥ … ≥ ν_r ≥ 0` after rounding at [`POLYTOPE_ROUNDING`].
    pub fn in_polytope(&self) -> bool {
        let t = POLYTOPE_ROUNDING;
        let first_ok = self.nu.first().is_none_or(|&v| v <= 1.0 + t);
        let last_ok = self.nu.last().is_none_or(|&v| v >= -t);
        first_ok && last_ok && self.nu.windows(2).all(|w| w[0] >= w[1] - t)
    }
}

/// Reads `ν` off `−iM = Id − Σ ν_j D(f_j, f̄_j)` against the frame `f` and
/// returns `λ + Σ ν_j γ_j` with `ν` sorted decreasingly.
pub fn moment_to_weight(
    value: &MomentValue,
    frame: &[Element<Complex64>],
    parabolic: &MarkedParabolic,
) -> Result<MomentWeight> {
    let h = value.operator.scale(&Complex64::new(0.0, -1.0));
    let n = h.rows();
    let mut nu = Vec::with_capacity(frame.len());
    let mut recon = Matrix::identity(n);
    for f in frame {
        let hf = Element {
            model: f.model,
            coords: h.mul_vec(&f.coords),
        };
        let ratio = inner_product_closed(f, &hf).re / inner_product_closed(f, f).re;
        let v = (1.0 - ratio) / 2.0;
        recon = &recon - &d_operator(f, f)?.scale(&Complex64::new(v, 0.0));
        nu.push(v);
    }
    let residual = recon.max_abs_diff(&h);
    if residual > FRAME_RESIDUAL_TOL * h.max_abs().max(1.0) {
        return Err(Error::FrameMisaligned(residual));
    }
    nu.sort_by(|a, b| b.total_cmp(a));
    let mut weight = parabolic.lambda.to_f64();
    for (v, g) in nu.iter().zip(&parabolic.gammas) {
        for (w, gc) in weight.iter_mut().zip(g.to_f64()) {
            *w += v * gc;
        }
    }
    Ok(MomentWeight { nu, weight })
}

/// Vertices `k λ_j`, `j = 0..r`, of `k Π_s`.
pub fn moment_polytope(parabolic: &MarkedParabolic, k: u32) -> Vec<Weight> {
    (0..=parabolic.rank())
        .map(|j| parabolic.lambda_j(j).scale_int(k as i64))
        .collect()
}

fn same_projections(a: &Element<Complex64>, b: &Element<Complex64>, tol: f64) -> Result<bool> {
    let (a2, a1, a0) = peirce_projections(&d_operator(a, a)?);
    let (b2, b1, b0) = peirce_projections(&d_operator(b, b)?);
    Ok(a2.max_abs_diff(&b2) <= tol && a1.max_abs_diff(&b1) <= tol && a0.max_abs_diff(&b0) <= tol)
}

/// Whether two normal-form points lie in the same fibre: equal σ-profiles and
/// Peirce-equivalent tripotents.
pub fn same_fibre(p1: &PairPoint, p2: &PairPoint) -> Result<bool> {
    let (Some(n1), Some(n2)) = (&p1.normal_form, &p2.normal_form) else {
        return Err(Error::MissingNormalForm);
    };
    n1.e.e.check_same(&n2.e.e)?;
    let tol = 1e-8;
    if !same_projections(&n1.e.e, &n2.e.e, tol)? {
        return Ok(false);
    }
    let (s1, s2) = (spectral_decomposition(&n1.z), spectral_decomposition(&n2.z));
    if s1.sigmas.len() != s2.sigmas.len() || s1.ranks != s2.ranks {
        return Ok(false);
    }
    for (a, b) in s1.sigmas.iter().zip(&s2.sigmas) {
        if (a - b).abs() > tol * a.max(1.0) {
            return Ok(false);
        }
    }
    for (a, b) in s1.tripotents.iter().zip(&s2.tripotents) {
        if !same_projections(a, b, tol)? {
            return Ok(false);
        }
    }
    Ok(true)
}
