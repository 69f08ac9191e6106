use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("images do not form a bijection")]
    NotBijection,
    #[error("cannot parse permutation: {0}")]
    Parse(String),
    #[error("base pair must have distinct points")]
    DiagonalBasePair,
    #[error("subsets are not pairwise disjoint")]
    Overlap,
    #[error("identity is not in every constraint set")]
    IdentityNotMember,
    #[error("split called on an estimate of size at most one")]
    NothingToSplit,
}
