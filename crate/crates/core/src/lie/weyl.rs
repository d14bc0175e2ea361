use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

use super::roots::PositiveSystem;
use super::weight::Weight;
use crate::error::{Error, Result};

fn big(r: Rational64) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// Weyl dimension `∏_{α>0} (μ+ρ, α)/(ρ, α)` for a dominant `mu`.
pub fn weyl_dimension(ps: &PositiveSystem, mu: &Weight) -> Result<BigInt> {
    if !ps.is_dominant(mu) || !ps.is_integral(mu) {
        return Err(Error::NotDominant(mu.to_string()));
    }
    let rho = ps.rho(mu.dim());
    let shifted = mu + &rho;
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for a in &ps.positive {
        num *= big(shifted.dot(a));
        den *= big(rho.dot(a));
    }
    let q = num / den;
    debug_assert!(q.is_integer());
    Ok(q.to_integer())
}

/// Dominant element of the Weyl orbit, by repeated simple reflections.
pub fn dominant_representative(w: &Weight, ps: &PositiveSystem) -> Weight {
    let mut w = w.clone();
    'outer: loop {
        for a in &ps.simple {
            if w.pair_coroot(a) < Rational64::zero() {
                w = w.reflect(a);
                continue 'outer;
            }
        }
        return w;
    }
}

/// Antidominant element of the Weyl orbit.
pub fn antidominant_representative(w: &Weight, ps: &PositiveSystem) -> Weight {
    -&dominant_representative(&-w, ps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::roots::{CartanType, RootSystem};

    #[test]
    fn sl2_dimensions() {
        let rs = RootSystem::new(CartanType::A, 1).unwrap();
        let w = rs.fundamental_weight(0);
        for k in 0..10 {
            let d = weyl_dimension(&rs.positive_system(), &w.scale_int(k)).unwrap();
            assert_eq!(d, BigInt::from(k + 1));
        }
    }

    #[test]
    fn a3_second_fundamental() {
        let rs = RootSystem::new(CartanType::A, 3).unwrap();
        let ps = rs.positive_system();
        let w = rs.fundamental_weight(1);
        assert_eq!(weyl_dimension(&ps, &w).unwrap(), BigInt::from(6));
        assert_eq!(weyl_dimension(&ps, &w.scale_int(2)).unwrap(), BigInt::from(20));
    }

    #[test]
    fn non_dominant_rejected() {
        let rs = RootSystem::new(CartanType::A, 1).unwrap();
        let w = rs.fundamental_weight(0).scale_int(-1);
        assert!(weyl_dimension(&rs.positive_system(), &w).is_err());
        let d = dominant_representative(&w, &rs.positive_system());
        assert_eq!(d, rs.fundamental_weight(0));
    }

    #[test]
    fn contragredient_symmetry() {
        for (t, s) in [(CartanType::A, 3), (CartanType::B, 3), (CartanType::C, 3), (CartanType::D, 3)] {
            let rs = RootSystem::new(t, s).unwrap();
            let ps = rs.positive_system();
            for i in 0..s {
                for j in 0..s {
                    let mu = &rs.fundamental_weight(i) + &rs.fundamental_weight(j).scale_int(2);
                    let dual = dominant_representative(&-&mu, &ps);
                    assert_eq!(
                        weyl_dimension(&ps, &mu).unwrap(),
                        weyl_dimension(&ps, &dual).unwrap()
                    );
                }
            }
        }
    }
}
