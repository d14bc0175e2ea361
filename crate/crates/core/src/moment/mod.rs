//! The explicit moment map of the K-action, the Γ operator, the polytope
//! `Π_s` and fibre comparison. All numerics use the float backend.

mod formulas;
mod point;
mod polytope;

pub use formulas::{
    gamma_operator, moment_chart, moment_general, moment_normal_form, moment_spectral,
    MomentValue,
};
pub use point::{NormalForm, PairPoint};
pub use polytope::{
    moment_polytope, moment_to_weight, same_fibre, MomentWeight, FRAME_RESIDUAL_TOL,
    POLYTOPE_ROUNDING,
};
