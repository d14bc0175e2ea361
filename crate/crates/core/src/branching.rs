//! Integral points of `kΠ_s` and the multiplicity-free L-decomposition of
//! `H⁰(X, 𝓛ᵏ)`.
//!
//! Convention: `dim H⁰(X, 𝓛ᵏ) = weyl_dimension(Φ⁺, k ϖ_{β₁})`. All checks
//! are dimension-level and so independent of dualisation.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{dominant_representative, weyl_dimension, MarkedParabolic, Weight};

/// Staircase vectors `k ≥ m₁ ≥ … ≥ m_r ≥ 0` in lexicographic order.
pub fn integral_points(k: u32, r: usize) -> Vec<Vec<u32>> {
    fn rec(bound: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in 0..=bound {
            cur.push(v);
            rec(v, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, r, &mut Vec::with_capacity(r), &mut out);
    out
}

pub fn is_staircase(k: u32, m: &[u32]) -> bool {
    m.first().is_none_or(|&a| a <= k) && m.windows(2).all(|w| w[0] >= w[1])
}

/// Unique decomposition `m = Σ_{j=1..m₁} m(j)` with `m(j)_i = [m_i ≥ j]`.
pub fn staircase_factors(m: &[u32]) -> Vec<Vec<u32>> {
    let top = m.first().copied().unwrap_or(0);
    (1..=top)
        .map(|j| m.iter().map(|&v| u32::from(v >= j)).collect())
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct KType {
    pub m: Vec<u32>,
    #[serde(serialize_with = "ser_weight")]
    pub label: Weight,
    #[serde(serialize_with = "ser_weight")]
    pub dominant: Weight,
    #[serde(serialize_with = "ser_big")]
    pub dimension: BigInt,
}

#[derive(Clone, Debug, Serialize)]
pub struct KTypeTable {
    pub k: u32,
    pub entries: Vec<KType>,
    #[serde(serialize_with = "ser_big")]
    pub total: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub expected_total: BigInt,
}

impl KTypeTable {
    pub fn is_consistent(&self) -> bool {
        self.total == self.expected_total
    }

    /// No two entries share a dominant conjugate.
    pub fn is_multiplicity_free(&self) -> bool {
        let mut seen: Vec<&Weight> = self.entries.iter().map(|e| &e.dominant).collect();
        seen.sort_by(|a, b| a.coords.cmp(&b.coords));
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

fn ser_weight<S: serde::Serializer>(w: &Weight, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(w.to_strings())
}

fn ser_big<S: serde::Serializer>(b: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&b.to_string())
}

/// Dimension of the L-representation with extreme weight `kλ + Σ m_i γ_i`.
pub fn ktype_dimension(parabolic: &MarkedParabolic, k: u32, m: &[u32]) -> Result<BigInt> {
    Ok(ktype(parabolic, k, m)?.dimension)
}

pub fn ktype(parabolic: &MarkedParabolic, k: u32, m: &[u32]) -> Result<KType> {
    if m.len() != parabolic.rank() || !is_staircase(k, m) {
        return Err(Error::Staircase { m: m.to_vec(), k });
    }
    let label = parabolic.label(k, m);
    let dominant = dominant_representative(&label, &parabolic.levi);
    let dimension = weyl_dimension(&parabolic.levi, &dominant)?;
    Ok(KType {
        m: m.to_vec(),
        label,
        dominant,
        dimension,
    })
}

/// `weyl_dimension(Φ⁺, k ϖ_{β₁})`.
pub fn section_dimension(parabolic: &MarkedParabolic, k: u32) -> Result<BigInt> {
    let w = parabolic.marked_fundamental_weight().scale_int(k as i64);
    weyl_dimension(&parabolic.root_system.positive_system(), &w)
}

pub fn decompose(parabolic: &MarkedParabolic, k: u32) -> Result<KTypeTable> {
    let points = integral_points(k, parabolic.rank());
    let entries = points
        .par_iter()
        .map(|m| ktype(parabolic, k, m))
        .collect::<Result<Vec<_>>>()?;
    let total = entries
        .iter()
        .fold(BigInt::zero(), |acc, e| acc + &e.dimension);
    Ok(KTypeTable {
        k,
        entries,
        total,
        expected_total: section_dimension(parabolic, k)?,
    })
}
