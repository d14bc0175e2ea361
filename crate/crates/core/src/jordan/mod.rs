//! Concrete Jordan-pair models and their operator calculus.

mod auto;
mod element;
pub mod genuine;
mod model;
mod ops;

pub use auto::Automorphism;
pub use element::Element;
pub use model::JordanModel;
pub use ops::{
    bergman, bergman_closed, cube, d_operator, generic_det, gram_matrix, inner_product,
    inner_product_closed, is_quasi_invertible, q_operator, quad, quasi_inverse, spin_form,
    trace_form, triple,
};
