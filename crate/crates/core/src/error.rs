use thiserror::Error;

/// Errors raised by group, lattice, and Weyl operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("permutation degree must be at least 1")]
    ZeroDegree,

    #[error("image sequence of length {len} is not a bijection of 0..{len}")]
    NotABijection { len: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("element count cap {cap} exceeded while materializing a group")]
    ElementCapExceeded { cap: usize },

    #[error("group of order {order} exceeds the subgroup enumeration cap {cap}")]
    SubgroupCapExceeded { order: usize, cap: usize },

    #[error("element is not a member of the group")]
    NotAMember,

    #[error("given group is not a subgroup of the ambient group")]
    NotASubgroup,

    #[error("element set is not closed under the group operations")]
    NotAGroup,

    #[error("conjugator does not normalize the kernel factor")]
    ConjugatorDoesNotNormalize,

    #[error("expected {expected} conjugators, one per generator, found {found}")]
    ConjugatorCountMismatch { expected: usize, found: usize },

    #[error("multiplication table is not a Latin square")]
    NotALatinSquare,

    #[error("multiplication table has no two-sided identity")]
    NoIdentity,

    #[error("multiplication table is not associative")]
    NotAssociative,

    #[error("kernel rank {0} is not supported; expected 0, 1 or 2")]
    UnsupportedKernelRank(usize),

    #[error("generator images do not extend to a homomorphism")]
    HomNotWellDefined,

    #[error("generator images must match the generator count ({expected}), found {found}")]
    HomImageCountMismatch { expected: usize, found: usize },

    #[error("lattice rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("number of blown-up points must be between 0 and 6, got {0}")]
    BlowupRankOutOfRange(usize),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph has {0} vertices, which exceeds the supported maximum of 27")]
    GraphTooLarge(usize),

    #[error("sign vector has odd weight, which is not an element of type D")]
    OddSignWeight,

    #[error("partial line map has {0} intersection-preserving completions, expected exactly 1")]
    AmbiguousCompletion(usize),

    #[error("parameter must be an odd prime, got {0}")]
    NotAnOddPrime(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
