use thiserror::Error;

use crate::jordan::JordanModel;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("cannot parse model spec `{0}` (expected `rect:p,q` or `spin:n`)")]
    ModelSpec(String),

    #[error("unsupported model {0}")]
    UnsupportedModel(String),

    #[error("operands belong to different models ({0} vs {1})")]
    ModelMismatch(JordanModel, JordanModel),

    #[error("coordinate vector has length {got}, model expects {expected}")]
    Dimension { expected: usize, got: usize },

    #[error("frame index {j} exceeds rank {rank}")]
    FrameIndex { j: usize, rank: usize },

    #[error("pair is not quasi-invertible")]
    NotQuasiInvertible,

    #[error("element is not a tripotent")]
    NotTripotent,

    #[error("invalid root data: {0}")]
    RootData(String),

    #[error("marked node {node} is not Hermitian: root {root} has coefficient {coefficient}")]
    NonHermitianMarking {
        node: usize,
        root: String,
        coefficient: i64,
    },

    #[error("weight {0} is not dominant for the supplied positive system")]
    NotDominant(String),

    #[error("model {model} is incompatible with parabolic {parabolic}")]
    IncompatibleParabolic { model: String, parabolic: String },

    #[error("staircase violation: m = {m:?} for k = {k}")]
    Staircase { m: Vec<u32>, k: u32 },

    #[error("valuation of the zero polynomial")]
    ZeroPolynomial,

    #[error("empty exponent set")]
    EmptySet,

    #[error("section space rank {got} exceeds expected dimension {expected}")]
    RankOvershoot { expected: usize, got: usize },

    #[error("section space rank saturated at {got}, expected {expected}")]
    RankShortfall { expected: usize, got: usize },

    #[error("highest-weight kernel for m = {m:?} at k = {k} has dimension {dim}")]
    KernelDimension { m: Vec<u32>, k: u32, dim: usize },

    #[error("unsupported root for raising action: {0}")]
    UnsupportedRoot(String),

    #[error("no raising convention reproduces the level-1 weight list")]
    Convention,

    #[error("point carries no normal form")]
    MissingNormalForm,

    #[error("frame is not aligned with the moment value (residual {0:e})")]
    FrameMisaligned(f64),

    #[error("okounkov check `{check}` failed at m = {m:?}: {detail}")]
    Okounkov {
        check: &'static str,
        m: Vec<u32>,
        detail: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
