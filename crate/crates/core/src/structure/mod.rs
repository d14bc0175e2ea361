//! Tripotents, Peirce decompositions, spectral data and rank.

mod frame;
mod spectral;
mod tripotent;

pub use frame::{frame_from_parabolic, gamma_table, rank_condition_check};
pub use spectral::{
    rank, spectral_decomposition, spectral_frame, SpectralData, SpectralFrame, MERGE_RTOL,
};
pub use tripotent::{
    is_tripotent, jordan_algebra_det, peirce_projections, Frame, Tripotent, TRIPOTENT_TOL,
};
