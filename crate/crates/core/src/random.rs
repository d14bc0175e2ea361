//! Seeded sampling of scalars and elements.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::jordan::{Element, JordanModel};
use crate::scalar::{gauss, GaussRat, Scalar};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small-height sample: Gaussian rationals with numerators in `-4..=4` and
/// denominators in `1..=3`, or uniform floats in the unit square.
pub trait Sample: Scalar {
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;
    fn sample_real<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

impl Sample for GaussRat {
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        gauss(rng.random_range(-4..=4), rng.random_range(-4..=4), rng.random_range(1..=3))
    }
    fn sample_real<R: Rng + ?Sized>(rng: &mut R) -> Self {
        gauss(rng.random_range(-4..=4), 0, rng.random_range(1..=3))
    }
}

impl Sample for Complex64 {
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    }
    fn sample_real<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Complex64::new(rng.random_range(-1.0..1.0), 0.0)
    }
}

pub fn random_element<S: Sample, R: Rng + ?Sized>(model: JordanModel, rng: &mut R) -> Element<S> {
    Element::from_coords(model, (0..model.dim()).map(|_| S::sample(rng)).collect())
}

/// Random element scaled by `scale` (float backend).
pub fn random_element_scaled<R: Rng + ?Sized>(
    model: JordanModel,
    scale: f64,
    rng: &mut R,
) -> Element<Complex64> {
    random_element::<Complex64, R>(model, rng).scale(&Complex64::new(scale, 0.0))
}
