//! Jordan-pair calculus, moment maps, branching and Okounkov bodies for
//! compact Hermitian symmetric spaces `X = G/Q = U/K`.
//!
//! Two scalar backends are available through [`Scalar`]: exact Gaussian
//! rationals ([`GaussRat`]) for identities and dimension counts, and
//! [`Complex64`](num_complex::Complex64) for moment-map numerics.

pub mod branching;
pub mod error;
pub mod exact;
pub mod jordan;
pub mod lie;
pub mod matrix;
pub mod moment;
pub mod okounkov;
pub mod random;
pub mod registry;
pub mod scalar;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use jordan::{Element, JordanModel};
pub use lie::{MarkedParabolic, Weight};
pub use matrix::Matrix;
pub use scalar::{GaussRat, Scalar};
