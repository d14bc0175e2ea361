use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::jordan::{quasi_inverse, Element, JordanModel};
use crate::structure::{spectral_decomposition, spectral_frame, SpectralData, Tripotent};

/// Representative `(e + z, ē)` with `e` a tripotent and `z ∈ V₀(e)`.
#[derive(Clone, Debug)]
pub struct NormalForm {
    pub e: Tripotent<Complex64>,
    pub z: Element<Complex64>,
}

/// A point `⟦x : a⟧` of X; `a ∈ V′` is stored through its V-representative.
#[derive(Clone, Debug)]
pub struct PairPoint {
    pub x: Element<Complex64>,
    pub a: Element<Complex64>,
    pub normal_form: Option<NormalForm>,
}

impl NormalForm {
    pub fn new(e: Element<Complex64>, z: Element<Complex64>) -> Result<Self> {
        e.check_same(&z)?;
        let e = Tripotent::new(e)?;
        let projected = Element {
            model: z.model,
            coords: e.p0.mul_vec(&z.coords),
        };
        if !projected.close(&z, 1e-10) {
            return Err(Error::NotTripotent);
        }
        Ok(Self { e, z })
    }

    pub fn rank_e(&self) -> usize {
        crate::structure::rank(&self.e.e)
    }

    pub fn spectral(&self) -> SpectralData {
        spectral_decomposition(&self.z)
    }
}

impl PairPoint {
    /// Chart point `⟦x : 0⟧`.
    pub fn chart(x: Element<Complex64>) -> Self {
        let a = Element::zero(x.model);
        Self {
            x,
            a,
            normal_form: None,
        }
    }

    pub fn new(x: Element<Complex64>, a: Element<Complex64>) -> Result<Self> {
        x.check_same(&a)?;
        Ok(Self {
            x,
            a,
            normal_form: None,
        })
    }

    pub fn from_normal_form(nf: NormalForm) -> Self {
        Self {
            x: &nf.e.e + &nf.z,
            a: nf.e.e.clone(),
            normal_form: Some(nf),
        }
    }

    pub fn model(&self) -> JordanModel {
        self.x.model
    }

    /// The representative `(x^{a−b}, b)` of the same point.
    pub fn shifted(&self, b: &Element<Complex64>) -> Result<Self> {
        let z = quasi_inverse(&self.x, &(&self.a - b))?;
        Self::new(z, b.clone())
    }

    /// A frame adapted to the point, with the expected ν-profile: spectral
    /// frame of `x^a`, or of `c·e + z` for a normal form.
    pub fn adapted_frame(&self) -> Result<(Vec<Element<Complex64>>, Vec<f64>)> {
        if let Some(nf) = &self.normal_form {
            let k = nf.rank_e();
            let top = spectral_frame(&nf.z).sigmas.first().copied().unwrap_or(0.0);
            let c = 2.0 * (top + 1.0);
            let y = &nf.e.e.scale(&Complex64::new(c, 0.0)) + &nf.z;
            let f = spectral_frame(&y);
            let nu = f
                .sigmas
                .iter()
                .enumerate()
                .map(|(j, s)| if j < k { 1.0 } else { s * s / (1.0 + s * s) })
                .collect();
            return Ok((f.tripotents, nu));
        }
        let x = if self.a.is_zero() {
            self.x.clone()
        } else {
            quasi_inverse(&self.x, &self.a).map_err(|_| Error::MissingNormalForm)?
        };
        let f = spectral_frame(&x);
        let nu = f.sigmas.iter().map(|s| s * s / (1.0 + s * s)).collect();
        Ok((f.tripotents, nu))
    }
}
