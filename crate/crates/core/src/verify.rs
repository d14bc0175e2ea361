//! Verification suites shared by the CLI and the acceptance tests.
//!
//! Exact suites (`jordan-identities`, `peirce` rules, `branching`,
//! `okounkov`) ignore the tolerance; the float checks of `peirce` and
//! `moment` use it.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::branching::{decompose, integral_points};
use crate::error::{Error, Result};
use crate::jordan::genuine::{involution, involution_dual, quad_dual, quad_v};
use crate::jordan::{
    bergman, bergman_closed, generic_det, is_quasi_invertible, quasi_inverse, triple, Automorphism,
    Element, JordanModel,
};
use crate::matrix::Matrix;
use crate::moment::{
    moment_chart, moment_general, moment_normal_form, moment_spectral, moment_to_weight,
    same_fibre, MomentValue, NormalForm, PairPoint,
};
use crate::okounkov::{
    build_section_space, highest_weight_vector, is_weight_pure, okounkov_pipeline,
    resolve_convention, Trivialization,
};
use crate::random::{random_element, random_element_scaled, seeded};
use crate::registry::{k_max, section_budget};
use crate::scalar::{GaussRat, Scalar};
use crate::structure::{
    frame_from_parabolic, is_tripotent, rank, spectral_decomposition, Frame, Tripotent,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    pub fn skip(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::Skip,
            detail: detail.into(),
        }
    }

    fn from_error(name: impl Into<String>, e: &Error) -> Self {
        Self::new(name, false, e.to_string())
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    JordanIdentities,
    Peirce,
    Moment,
    Branching,
    Okounkov,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::JordanIdentities,
        Suite::Peirce,
        Suite::Moment,
        Suite::Branching,
        Suite::Okounkov,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::JordanIdentities => "jordan-identities",
            Suite::Peirce => "peirce",
            Suite::Moment => "moment",
            Suite::Branching => "branching",
            Suite::Okounkov => "okounkov",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite `{s}` (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Float tolerance; fibre equalities use a tenth of it.
    pub tolerance: f64,
    /// Random instances per check.
    pub samples: usize,
    /// Highest k for the branching suite (defaults to the model's k_max).
    pub k_max: Option<u32>,
    /// Highest level for the okounkov suite (defaults to the model's budget).
    pub section_budget: Option<u32>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            tolerance: 1e-9,
            samples: 50,
            k_max: None,
            section_budget: None,
        }
    }
}

pub fn run_suite(model: JordanModel, suite: Suite, cfg: &VerifyConfig) -> Vec<Check> {
    let mut rng = seeded(cfg.seed ^ (suite as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let n = cfg.samples;
    let tol = cfg.tolerance;
    match suite {
        Suite::JordanIdentities => vec![
            check_bergman(model, n, &mut rng),
            check_cocycle(model, n, &mut rng),
            check_conjugation(model, n, &mut rng),
            check_structure_constant(model, n, &mut rng),
        ],
        Suite::Peirce => vec![
            check_frame(model),
            check_peirce_rules(model, n, &mut rng),
            check_joint_peirce_rules(model, n.min(20), &mut rng),
            check_spectral(model, n, tol, &mut rng),
        ],
        Suite::Moment => vec![
            check_chart_vs_spectral(model, 2 * n, tol, &mut rng),
            check_general_vs_normal_form(model, 2 * n, tol, &mut rng),
            check_representatives(model, n, tol, &mut rng),
            check_equivariance(model, n, tol, &mut rng),
            check_chamber(model, n, &mut rng),
            check_fibres(model, n, tol / 10.0, 1e-6, &mut rng),
        ],
        Suite::Branching => {
            let top = cfg.k_max.unwrap_or_else(|| k_max(model));
            vec![check_dimension_identity(model, top)]
        }
        Suite::Okounkov => {
            let top = cfg.section_budget.unwrap_or_else(|| section_budget(model));
            check_okounkov(model, top, top.min(3))
        }
    }
}

fn summarize(name: &str, total: usize, failures: Vec<String>) -> Check {
    let ok = failures.is_empty();
    let detail = if ok {
        format!("{total} instances")
    } else {
        format!(
            "{} of {total} failed; first: {}",
            failures.len(),
            failures[0]
        )
    };
    Check::new(name, ok, detail)
}

fn exact_rand<R: Rng + ?Sized>(model: JordanModel, rng: &mut R) -> Element<GaussRat> {
    random_element(model, rng)
}

/// A random tripotent of rank `j`: conjugate of a partial frame sum.
fn random_tripotent<R: Rng + ?Sized>(model: JordanModel, j: usize, rng: &mut R) -> Element<GaussRat> {
    let h = Automorphism::<GaussRat>::random(model, rng);
    let frame: Vec<Element<GaussRat>> = model.frame();
    frame[..j]
        .iter()
        .fold(Element::zero(model), |acc, f| &acc + &h.apply(f))
}

fn project<S: Scalar>(p: &Matrix<S>, x: &Element<S>) -> Element<S> {
    Element {
        model: x.model,
        coords: p.mul_vec(&x.coords),
    }
}

/// `B = Id − D + QQ` against the rect closed form and `det B(x, w̄) = Δ(x, w̄)^p`.
pub fn check_bergman<R: Rng + ?Sized>(model: JordanModel, n: usize, rng: &mut R) -> Check {
    let p = model.structure_constant() as u32;
    let mut failures = Vec::new();
    for i in 0..n {
        let (x, w) = (exact_rand(model, rng), exact_rand(model, rng));
        let b = bergman(&x, &w).expect("same model");
        if let Some(c) = bergman_closed(&x, &w) {
            if b != c {
                failures.push(format!("instance {i}: closed form differs"));
                continue;
            }
        }
        let delta = generic_det(&x, &w).expect("same model");
        let pow = (0..p).fold(GaussRat::one(), |acc, _| acc * delta.clone());
        if b.determinant() != pow {
            failures.push(format!("instance {i}: det B ≠ Δ^{p}"));
        }
    }
    summarize("bergman", n, failures)
}

/// `Δ(u, v) Δ(u^v, w) = Δ(u, v + w)`.
pub fn check_cocycle<R: Rng + ?Sized>(model: JordanModel, n: usize, rng: &mut R) -> Check {
    let mut failures = Vec::new();
    let mut done = 0;
    while done < n {
        let (u, v, w) = (exact_rand(model, rng), exact_rand(model, rng), exact_rand(model, rng));
        if !is_quasi_invertible(&u, &v).expect("same model") {
            continue;
        }
        let uv = quasi_inverse(&u, &v).expect("quasi-invertible");
        let lhs = generic_det(&u, &v).unwrap() * generic_det(&uv, &w).unwrap();
        let rhs = generic_det(&u, &(&v + &w)).unwrap();
        if lhs != rhs {
            failures.push(format!("instance {done}"));
        }
        done += 1;
    }
    summarize("cocycle", n, failures)
}

/// `Q_{x̄} ȳ = conj(Q_x y)` on the genuine pair.
pub fn check_conjugation<R: Rng + ?Sized>(model: JordanModel, n: usize, rng: &mut R) -> Check {
    let mut failures = Vec::new();
    for i in 0..n {
        let x = exact_rand(model, rng);
        let y = involution(&exact_rand(model, rng));
        let lhs = quad_dual(&involution(&x), &involution_dual(&y));
        let rhs = involution(&quad_v(&x, &y));
        if lhs != rhs {
            failures.push(format!("instance {i}"));
        }
    }
    summarize("conjugation", n, failures)
}

/// `p = 2 + dim V₁(e)` for random minimal tripotents.
pub fn check_structure_constant<R: Rng + ?Sized>(model: JordanModel, n: usize, rng: &mut R) -> Check {
    let p = model.structure_constant();
    let mut failures = Vec::new();
    for i in 0..n {
        let e = random_tripotent(model, 1, rng);
        match Tripotent::new(e) {
            Ok(t) if 2 + t.peirce_dim(1) == p => {}
            Ok(t) => failures.push(format!("instance {i}: 2 + {} ≠ {p}", t.peirce_dim(1))),
            Err(err) => failures.push(format!("instance {i}: {err}")),
        }
    }
    summarize("structure-constant", n, failures)
}

pub fn check_frame(model: JordanModel) -> Check {
    match model
        .parabolic()
        .and_then(|par| frame_from_parabolic(model, &par))
    {
        Ok(f) => Check::new("frame", f.len() == model.rank(), format!("{} tripotents", f.len())),
        Err(e) => Check::from_error("frame", &e),
    }
}

/// `{V_i, V′_j, V_k} ⊆ V_{i−j+k}` (zero outside `0..=2`), exactly.
#[allow(clippy::needless_range_loop)]
pub fn check_peirce_rules<R: Rng + ?Sized>(model: JordanModel, n: usize, rng: &mut R) -> Check {
    let r = model.rank();
    let mut failures = Vec::new();
    for inst in 0..n {
        let j = rng.random_range(1..=r);
        let t = match Tripotent::new(random_tripotent(model, j, rng)) {
            Ok(t) => t,
            Err(e) => {
                failures.push(format!("instance {inst}: {e}"));
                continue;
            }
        };
        let (x, w, z) = (exact_rand(model, rng), exact_rand(model, rng), exact_rand(model, rng));
        let parts = |v: &Element<GaussRat>| -> Vec<Element<GaussRat>> {
            (0..3).map(|k| project(t.projection(k), v)).collect()
        };
        let (xs, ws, zs) = (parts(&x), parts(&w), parts(&z));
        'outer: for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let prod = triple(&xs[a], &ws[b], &zs[c]).unwrap();
                    let target = a as i64 - b as i64 + c as i64;
                    let ok = if (0..=2).contains(&target) {
                        project(t.projection(target as usize), &prod) == prod
                    } else {
                        prod.is_zero()
                    };
                    if !ok {
                        failures.push(format!("instance {inst}: ({a},{b},{c})"));
                        break 'outer;
                    }
                }
            }
        }
    }
    summarize("peirce-rules", n, failures)
}

/// Unordered `(a, d)` with `{i,j} = {a,b}`, `{k,l} = {b,c}`, `{m,o} = {c,d}`.
fn chain_targets(x: (usize, usize), y: (usize, usize), z: (usize, usize)) -> Vec<(usize, usize)> {
    let other = |pair: (usize, usize), v: usize| {
        if pair.0 == v {
            Some(pair.1)
        } else if pair.1 == v {
            Some(pair.0)
        } else {
            None
        }
    };
    let mut out = Vec::new();
    for (a, b) in [(x.0, x.1), (x.1, x.0)] {
        let Some(c) = other(y, b) else { continue };
        let Some(d) = other(z, c) else { continue };
        let t = (a.min(d), a.max(d));
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

/// `{V_ij, V′_jk, V_kl} ⊆ V_il`; products that do not chain vanish.
pub fn check_joint_peirce_rules<R: Rng + ?Sized>(model: JordanModel, n: usize, rng: &mut R) -> Check {
    // inputs are drawn sequentially so the outcome does not depend on scheduling
    let inputs: Vec<_> = (0..n)
        .map(|_| {
            let h = Automorphism::<GaussRat>::random(model, rng);
            let xwz = [exact_rand(model, rng), exact_rand(model, rng), exact_rand(model, rng)];
            (h, xwz)
        })
        .collect();
    let failures: Vec<String> = inputs
        .into_par_iter()
        .enumerate()
        .filter_map(|(inst, (h, [x, w, z]))| {
            let std: Vec<Element<GaussRat>> = model.frame();
            let frame = match Frame::new(std.iter().map(|e| h.apply(e)).collect()) {
                Ok(f) => f,
                Err(e) => return Some(format!("instance {inst}: {e}")),
            };
            let idx: Vec<(usize, usize)> = frame.joint_indices().collect();
            let part = |v: &Element<GaussRat>, ij: (usize, usize)| {
                project(frame.joint_projection(ij.0, ij.1), v)
            };
            let xs: Vec<_> = idx.iter().map(|&a| part(&x, a)).collect();
            let ws: Vec<_> = idx.iter().map(|&b| part(&w, b)).collect();
            let zs: Vec<_> = idx.iter().map(|&c| part(&z, c)).collect();
            for (ia, &a) in idx.iter().enumerate() {
                for (ib, &b) in idx.iter().enumerate() {
                    for (ic, &c) in idx.iter().enumerate() {
                        let prod = triple(&xs[ia], &ws[ib], &zs[ic]).unwrap();
                        let kept = chain_targets(a, b, c)
                            .iter()
                            .fold(Element::zero(model), |acc, &t| &acc + &part(&prod, t));
                        if kept != prod {
                            return Some(format!("instance {inst}: {a:?} {b:?} {c:?}"));
                        }
                    }
                }
            }
            None
        })
        .collect();
    summarize("joint-peirce-rules", n, failures)
}

/// `x = Σ σ_j c_j` with tripotent `c_j` and `Σ rank c_j = rank x`.
pub fn check_spectral<R: Rng + ?Sized>(model: JordanModel, n: usize, tol: f64, rng: &mut R) -> Check {
    let mut failures = Vec::new();
    for i in 0..n {
        let x = random_element_scaled(model, 2.0, rng);
        let s = spectral_decomposition(&x);
        let err = s.reconstruct(model).max_abs_diff(&x);
        let trip = s.tripotents.iter().all(is_tripotent);
        let ranks = s.ranks.iter().sum::<usize>() == rank(&x);
        if err > tol * (1.0 + x.coord_norm()) || !trip || !ranks {
            failures.push(format!("instance {i}: residual {err:e}, tripotents {trip}, ranks {ranks}"));
        }
    }
    summarize("spectral", n, failures)
}

fn c(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

fn anti_hermitian(m: &MomentValue, tol: f64) -> bool {
    m.anti_hermitian_defect() <= tol * m.operator.max_abs().max(1.0)
}

/// Random normal form `(e + z, ē)` over a conjugated frame.
pub struct RandomNormalForm {
    pub frame: Vec<Element<Complex64>>,
    /// Frame indices carried by `e`.
    pub e_rank: usize,
    /// `σ` on the remaining frame elements.
    pub sigmas: Vec<f64>,
}

impl RandomNormalForm {
    pub fn sample<R: Rng + ?Sized>(model: JordanModel, rng: &mut R) -> Self {
        let h = Automorphism::<Complex64>::random(model, rng);
        let std: Vec<Element<Complex64>> = model.frame();
        let frame: Vec<Element<Complex64>> = std.iter().map(|e| h.apply(e)).collect();
        let r = frame.len();
        let e_rank = rng.random_range(0..=r);
        let sigmas = (e_rank..r)
            .map(|_| {
                if rng.random_bool(0.2) {
                    0.0
                } else {
                    rng.random_range(0.05..3.0)
                }
            })
            .collect();
        Self {
            frame,
            e_rank,
            sigmas,
        }
    }

    /// Builds the normal form with optional phases on each frame element.
    pub fn build(&self, phases: &[Complex64]) -> Result<NormalForm> {
        let model = self.frame[0].model;
        let f: Vec<Element<Complex64>> = self
            .frame
            .iter()
            .enumerate()
            .map(|(i, e)| e.scale(phases.get(i).unwrap_or(&c(1.0))))
            .collect();
        let e = f[..self.e_rank]
            .iter()
            .fold(Element::zero(model), |acc, t| &acc + t);
        let z = f[self.e_rank..]
            .iter()
            .zip(&self.sigmas)
            .fold(Element::zero(model), |acc, (t, s)| &acc + &t.scale(&c(*s)));
        NormalForm::new(e, z)
    }
}

/// Chart formula against the spectral formula.
pub fn check_chart_vs_spectral<R: Rng + ?Sized>(model: JordanModel, n: usize, tol: f64, rng: &mut R) -> Check {
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    for i in 0..n {
        let scale = [0.3, 1.0, 3.0][i % 3];
        let x = random_element_scaled(model, scale, rng);
        let a = moment_chart(&x);
        let b = moment_spectral(model, &spectral_decomposition(&x));
        let d = a.distance(&b);
        worst = worst.max(d);
        if d > tol || !anti_hermitian(&a, tol) {
            failures.push(format!("instance {i}: distance {d:e}"));
        }
    }
    let mut chk = summarize("chart-vs-spectral", n, failures);
    chk.detail.push_str(&format!(", max distance {worst:e}"));
    chk
}

/// General formula at normal-form points against the normal-form formula.
pub fn check_general_vs_normal_form<R: Rng + ?Sized>(
    model: JordanModel,
    n: usize,
    tol: f64,
    rng: &mut R,
) -> Check {
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    for i in 0..n {
        let nf = match RandomNormalForm::sample(model, rng).build(&[]) {
            Ok(nf) => nf,
            Err(e) => {
                failures.push(format!("instance {i}: {e}"));
                continue;
            }
        };
        let expected = moment_normal_form(&nf);
        match moment_general(&PairPoint::from_normal_form(nf)) {
            Ok(v) => {
                let d = v.distance(&expected);
                worst = worst.max(d);
                if d > tol || !anti_hermitian(&v, tol) {
                    failures.push(format!("instance {i}: distance {d:e}"));
                }
            }
            Err(e) => failures.push(format!("instance {i}: {e}")),
        }
    }
    let mut chk = summarize("general-vs-normal-form", n, failures);
    chk.detail.push_str(&format!(", max distance {worst:e}"));
    chk
}

/// `μ̃⟦x : a⟧` is independent of the representative.
pub fn check_representatives<R: Rng + ?Sized>(model: JordanModel, n: usize, tol: f64, rng: &mut R) -> Check {
    let mut failures = Vec::new();
    for i in 0..n {
        let x = random_element_scaled(model, 1.0, rng);
        let a = random_element_scaled(model, 1.0, rng);
        let b = random_element_scaled(model, 1.0, rng);
        let res = (|| -> Result<(f64, f64)> {
            let p = PairPoint::new(x.clone(), a.clone())?;
            let v = moment_general(&p)?;
            let w = moment_general(&p.shifted(&b)?)?;
            let chart = moment_chart(&quasi_inverse(&x, &a)?);
            Ok((v.distance(&w), v.distance(&chart)))
        })();
        match res {
            Ok((d1, d2)) if d1 <= tol && d2 <= tol => {}
            Ok((d1, d2)) => failures.push(format!("instance {i}: {d1:e}, {d2:e}")),
            Err(Error::NotQuasiInvertible) => {}
            Err(e) => failures.push(format!("instance {i}: {e}")),
        }
    }
    summarize("representatives", n, failures)
}

/// `μ̃(h·x) = h μ̃(x) h⁻¹`.
pub fn check_equivariance<R: Rng + ?Sized>(model: JordanModel, n: usize, tol: f64, rng: &mut R) -> Check {
    let mut failures = Vec::new();
    for i in 0..n {
        let h = Automorphism::<Complex64>::random(model, rng);
        let x = random_element_scaled(model, 2.0, rng);
        let lhs = moment_chart(&h.apply(&x));
        let rhs = MomentValue {
            operator: h.conjugate(&moment_chart(&x).operator),
        };
        let d = lhs.distance(&rhs);
        if d > tol {
            failures.push(format!("instance {i}: distance {d:e}"));
        }
    }
    summarize("equivariance", n, failures)
}

/// `moment_to_weight` lands in `Π_s` with the expected ν-profile.
pub fn check_chamber<R: Rng + ?Sized>(model: JordanModel, n: usize, rng: &mut R) -> Check {
    let par = match model.parabolic() {
        Ok(p) => p,
        Err(e) => return Check::from_error("chamber", &e),
    };
    let mut failures = Vec::new();
    for i in 0..n {
        let points = {
            let x = random_element_scaled(model, 2.0, rng);
            let nf = RandomNormalForm::sample(model, rng).build(&[]);
            [Ok(PairPoint::chart(x)), nf.map(PairPoint::from_normal_form)]
        };
        for p in points {
            let res = (|| -> Result<bool> {
                let p = p?;
                let value = match &p.normal_form {
                    Some(nf) => moment_normal_form(nf),
                    None => moment_chart(&p.x),
                };
                let (frame, mut nu) = p.adapted_frame()?;
                let w = moment_to_weight(&value, &frame, &par)?;
                nu.sort_by(|a, b| b.total_cmp(a));
                let agree = nu.iter().zip(&w.nu).all(|(a, b)| (a - b).abs() <= 1e-8);
                Ok(w.in_polytope() && agree)
            })();
            match res {
                Ok(true) => {}
                Ok(false) => failures.push(format!("instance {i}: outside Π_s")),
                Err(e) => failures.push(format!("instance {i}: {e}")),
            }
        }
    }
    summarize("chamber", 2 * n, failures)
}

/// Peirce-equivalent equal-σ normal forms give equal values (to `eq_tol`);
/// distinct σ give values at least `sep` apart.
pub fn check_fibres<R: Rng + ?Sized>(model: JordanModel, n: usize, eq_tol: f64, sep: f64, rng: &mut R) -> Check {
    let mut failures = Vec::new();
    for i in 0..n {
        let base = RandomNormalForm::sample(model, rng);
        let phases: Vec<Complex64> = base
            .frame
            .iter()
            .map(|_| Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU)))
            .collect();
        let mut moved = RandomNormalForm {
            frame: base.frame.clone(),
            e_rank: base.e_rank,
            sigmas: base.sigmas.clone(),
        };
        let res = (|| -> Result<Option<String>> {
            let p1 = PairPoint::from_normal_form(base.build(&[])?);
            let p2 = PairPoint::from_normal_form(base.build(&phases)?);
            let d = moment_general(&p1)?.distance(&moment_general(&p2)?);
            if !same_fibre(&p1, &p2)? || d > eq_tol {
                return Ok(Some(format!("equal fibre: distance {d:e}")));
            }
            if moved.sigmas.is_empty() {
                return Ok(None);
            }
            let j = rng.random_range(0..moved.sigmas.len());
            moved.sigmas[j] += 0.5;
            let p3 = PairPoint::from_normal_form(moved.build(&phases)?);
            let d = moment_general(&p1)?.distance(&moment_general(&p3)?);
            if same_fibre(&p1, &p3)? || d < sep {
                return Ok(Some(format!("distinct σ: distance {d:e}")));
            }
            Ok(None)
        })();
        match res {
            Ok(None) => {}
            Ok(Some(msg)) => failures.push(format!("instance {i}: {msg}")),
            Err(e) => failures.push(format!("instance {i}: {e}")),
        }
    }
    summarize("fibres", n, failures)
}

/// `Σ_m dim W_m = dim H⁰(X, 𝓛ᵏ)` and distinct labels, for `k = 1..=top`.
pub fn check_dimension_identity(model: JordanModel, top: u32) -> Check {
    let par = match model.parabolic() {
        Ok(p) => p,
        Err(e) => return Check::from_error("dimension-identity", &e),
    };
    let results: Vec<Result<(bool, bool)>> = (1..=top)
        .into_par_iter()
        .map(|k| decompose(&par, k).map(|t| (t.is_consistent(), t.is_multiplicity_free())))
        .collect();
    let mut failures = Vec::new();
    for (k, r) in (1..=top).zip(results) {
        match r {
            Ok((true, true)) => {}
            Ok((a, b)) => failures.push(format!("k = {k}: totals {a}, distinct labels {b}")),
            Err(e) => failures.push(format!("k = {k}: {e}")),
        }
    }
    summarize("dimension-identity", top as usize, failures)
}

/// Section-space ranks, kernel dimensions and the Okounkov pipeline.
pub fn check_okounkov(model: JordanModel, top: u32, pipeline_level: u32) -> Vec<Check> {
    let names = ["section-rank", "multiplicity-free", "okounkov-pipeline"];
    let triv = match Trivialization::new(model) {
        Ok(t) => t,
        Err(Error::UnsupportedModel(m)) => {
            return names
                .iter()
                .map(|n| Check::skip(*n, format!("not implemented for {m}")))
                .collect()
        }
        Err(e) => return names.iter().map(|n| Check::from_error(*n, &e)).collect(),
    };
    let mut rank_fail = Vec::new();
    let mut kernel_fail = Vec::new();
    let conv = build_section_space(&triv, 1).and_then(|s| resolve_convention(&triv, &s));
    let conv = match conv {
        Ok(c) => c.convention,
        Err(e) => return names.iter().map(|n| Check::from_error(*n, &e)).collect(),
    };
    let mut count = 0;
    for k in 1..=top {
        let space = match build_section_space(&triv, k) {
            Ok(s) => s,
            Err(e) => {
                rank_fail.push(format!("k = {k}: {e}"));
                continue;
            }
        };
        let points = integral_points(k, triv.parabolic.rank());
        count += points.len();
        let errs: Vec<String> = points
            .par_iter()
            .filter_map(|m| match highest_weight_vector(&triv, &space, m, conv) {
                Ok(v) if is_weight_pure(&triv, k, &v) => None,
                Ok(_) => Some(format!("k = {k}, m = {m:?}: not weight-pure")),
                Err(e) => Some(format!("k = {k}: {e}")),
            })
            .collect();
        kernel_fail.extend(errs);
    }
    let pipeline = match okounkov_pipeline(model, pipeline_level) {
        Ok(d) => Check::new(
            "okounkov-pipeline",
            true,
            format!(
                "{} generators, {} body vertices, levels {:?}",
                d.generators.len(),
                d.body_vertices.len(),
                d.levels_checked
            ),
        ),
        Err(e) => Check::from_error("okounkov-pipeline", &e),
    };
    vec![
        summarize("section-rank", top as usize, rank_fail),
        summarize("multiplicity-free", count, kernel_fail),
        pipeline,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains() {
        assert_eq!(chain_targets((1, 2), (2, 2), (2, 1)), vec![(1, 1)]);
        assert!(chain_targets((1, 1), (2, 2), (1, 1)).is_empty());
        assert_eq!(chain_targets((0, 1), (1, 2), (2, 2)), vec![(0, 2)]);
    }

    #[test]
    fn suites_pass_on_small_models() {
        let cfg = VerifyConfig {
            samples: 6,
            ..VerifyConfig::default()
        };
        for m in ["rect:1,1", "rect:2,2", "spin:4", "spin:5"] {
            let model = JordanModel::parse(m).unwrap();
            for s in Suite::ALL {
                let cfg = VerifyConfig {
                    k_max: Some(3),
                    section_budget: Some(2),
                    ..cfg
                };
                for chk in run_suite(model, s, &cfg) {
                    assert!(chk.passed(), "{m} {s}: {} {}", chk.name, chk.detail);
                }
            }
        }
    }

    #[test]
    fn zero_tolerance_fails_moment() {
        let cfg = VerifyConfig {
            samples: 4,
            tolerance: 0.0,
            ..VerifyConfig::default()
        };
        let checks = run_suite(JordanModel::Rect { p: 2, q: 2 }, Suite::Moment, &cfg);
        assert!(checks.iter().any(|c| !c.passed()));
    }
}
