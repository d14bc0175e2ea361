//! Supported spaces, their k budgets and a serialisable description.

use serde::Serialize;

use crate::error::Result;
use crate::jordan::{Element, JordanModel};
use crate::lie::{MarkedParabolic, Weight};
use crate::moment::moment_polytope;
use crate::scalar::GaussRat;
use crate::structure::frame_from_parabolic;

/// A compatible (model, marked parabolic) pair.
#[derive(Clone, Debug)]
pub struct HermitianSpace {
    pub model: JordanModel,
    pub parabolic: MarkedParabolic,
}

#[derive(Clone, Debug, Serialize)]
pub struct Description {
    pub model: String,
    pub lie_type: String,
    pub rank: usize,
    pub dim: usize,
    pub structure_constant: usize,
    pub k_max: u32,
    /// Frame tripotents as coordinate strings.
    pub frame: Vec<Vec<String>>,
    pub gammas: Vec<Vec<String>>,
    pub lambda: Vec<String>,
    /// Vertices `λ_j` of `Π_s`.
    pub vertices: Vec<Vec<String>>,
}

fn gauss_string(c: &GaussRat) -> String {
    let zero = num_rational::BigRational::from_integer(0.into());
    match (c.re == zero, c.im == zero) {
        (_, true) => c.re.to_string(),
        (true, false) => format!("{}i", c.im),
        _ => format!("{}+{}i", c.re, c.im).replace("+-", "-"),
    }
}

fn weight_strings(w: &Weight) -> Vec<String> {
    w.to_strings()
}

impl HermitianSpace {
    pub fn new(model: JordanModel) -> Result<Self> {
        let parabolic = model.parabolic()?;
        Ok(Self { model, parabolic })
    }

    pub fn parse(spec: &str) -> Result<Self> {
        Self::new(JordanModel::parse(spec)?)
    }

    pub fn k_max(&self) -> u32 {
        k_max(self.model)
    }

    pub fn describe(&self) -> Result<Description> {
        let frame = frame_from_parabolic(self.model, &self.parabolic)?;
        let frame: Vec<Element<GaussRat>> = frame.elements();
        Ok(Description {
            model: self.model.to_string(),
            lie_type: self.parabolic.to_string(),
            rank: self.model.rank(),
            dim: self.model.dim(),
            structure_constant: self.model.structure_constant(),
            k_max: self.k_max(),
            frame: frame
                .iter()
                .map(|e| e.coords.iter().map(gauss_string).collect())
                .collect(),
            gammas: self.parabolic.gammas.iter().map(weight_strings).collect(),
            lambda: weight_strings(&self.parabolic.lambda),
            vertices: moment_polytope(&self.parabolic, 1)
                .iter()
                .map(weight_strings)
                .collect(),
        })
    }
}

/// Largest k processed without `--force`.
pub fn k_max(model: JordanModel) -> u32 {
    match model {
        JordanModel::Rect { p: 1, q: 1 } => 20,
        JordanModel::Rect { p: 1, .. } | JordanModel::Rect { q: 1, .. } => 10,
        JordanModel::Rect { p: 2, q: 2 } => 6,
        JordanModel::Rect { p: 2, q: 3 } | JordanModel::Rect { p: 3, q: 2 } => 4,
        m => (24 / m.dim() as u32).max(2),
    }
}

/// Largest level at which section spaces and highest weight vectors are
/// computed by the verification suites.
pub fn section_budget(model: JordanModel) -> u32 {
    match model {
        JordanModel::Rect { p: 1, q: 1 } => 8,
        JordanModel::Rect { p: 1, .. } | JordanModel::Rect { q: 1, .. } => 4,
        JordanModel::Rect { p: 2, q: 2 } => 3,
        JordanModel::Rect { .. } => 2,
        JordanModel::Spin { .. } => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptions() {
        let d = HermitianSpace::parse("rect:2,2").unwrap().describe().unwrap();
        assert_eq!((d.rank, d.dim, d.structure_constant), (2, 4, 4));
        assert_eq!(d.vertices.len(), 3);
        let d = HermitianSpace::parse("rect:1,1").unwrap().describe().unwrap();
        assert_eq!((d.rank, d.dim, d.structure_constant), (1, 1, 2));
        let d = HermitianSpace::parse("spin:5").unwrap().describe().unwrap();
        assert_eq!(d.rank, 2);
        assert_eq!(d.frame[1][1], "-1/2i");
    }

    #[test]
    fn budgets() {
        assert_eq!(k_max(JordanModel::Rect { p: 1, q: 1 }), 20);
        assert_eq!(k_max(JordanModel::Rect { p: 1, q: 2 }), 10);
        assert_eq!(k_max(JordanModel::Rect { p: 2, q: 2 }), 6);
        assert_eq!(k_max(JordanModel::Rect { p: 2, q: 3 }), 4);
    }
}
