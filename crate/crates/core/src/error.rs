use crate::algebra::Algebra;

/// Errors reported by the library. Every operation that can reject its
/// input returns one of these; nothing panics on bad user data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("expected {expected} coordinates, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("weight is not dominant integral for the compact subalgebra: {0}")]
    NotKDominant(String),

    #[error("algebra mismatch: {0} vs {1}")]
    AlgebraMismatch(Algebra, Algebra),

    #[error("basic module index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("weight is not in the Schmid lattice: {0}")]
    NotSchmidShape(String),

    #[error("empty product chain")]
    EmptyChain,

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("no product construction available: {0}")]
    NotConstructible(String),

    #[error("coordinates are not all integers or all half-integers")]
    MixedParity,

    #[error("parameter has a repeated coordinate, so it is singular for the compact Weyl group")]
    NotRegularForK,

    #[error("parameter is not conjugate to the half-sum of positive roots")]
    NotRhoCharacter,

    #[error("diagram is not built from hooks: {0}")]
    NotHookBuildable(String),

    #[error("rank {got} exceeds the supported bound {max}")]
    RankTooLarge { got: usize, max: usize },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
