//! Trivialized sections, the invlex valuation, highest weight vectors and the
//! Okounkov body of `𝓛` with respect to `N_L⁺`. Implemented for `rect` models.

mod highest;
mod pipeline;
mod poly;
mod sections;

pub use highest::{
    highest_weight_vector, is_weight_pure, resolve_convention, Convention, ConventionChoice,
};
pub use pipeline::{hull_vertices, okounkov_pipeline, OkounkovData};
pub use poly::{invlex_cmp, invlex_min, Exponent, ExponentPolynomial};
pub use sections::{build_section_space, ReducedBasis, SectionSpace, Trivialization};
