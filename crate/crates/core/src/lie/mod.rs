//! Root systems, marked parabolics and Weyl dimensions.

mod parabolic;
mod roots;
mod weight;
mod weyl;

pub use parabolic::{build_marked_parabolic, lex_cmp, MarkedParabolic};
pub use roots::{CartanType, PositiveSystem, Root, RootSystem};
pub use weight::Weight;
pub use weyl::{antidominant_representative, dominant_representative, weyl_dimension};
