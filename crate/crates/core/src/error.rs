use thiserror::Error;

/// Engine-wide error type. Variants map one-to-one onto the failure modes of
/// the construction and decision operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("multiplication table is not commutative at ({0}, {1})")]
    NonCommutative(usize, usize),
    #[error("the zero ring (1 = 0) is rejected")]
    OneEqualsZero,
    #[error("modulus polynomial is reducible over F_{0}")]
    ReducibleModulus(u64),
    #[error("construction would have {size} elements, above the bound {bound}")]
    SizeBound { size: u128, bound: usize },
    #[error("malformed description: {0}")]
    MalformedDescription(String),
    #[error("quotient by the unit ideal is rejected")]
    ImproperIdeal,
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("ideal count exceeds the lattice bound {0}")]
    LatticeBound(usize),
    #[error("the family does not cover its target")]
    NotACover,
    #[error("intersection exponent {exponent} exceeds the bound {bound}")]
    BoundViolation { exponent: u32, bound: u32 },
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("engine bug: {0}")]
    EngineBug(String),
    #[error("module is not faithful")]
    NotFaithful,
    #[error("module has dimension < 2 over the residue field")]
    DimensionTooSmall,
    #[error("ideal is not maximal")]
    NotMaximal,
    #[error("relation is not homogeneous of admissible degree: {0}")]
    NonHomogeneousRelation(String),
    #[error("relation has a linear part: {0}")]
    LinearRelation(String),
    #[error("every nonzero element must be a unit; ring is not a field")]
    NotAField,
    #[error("the zero ideal is not supported by the residue scan")]
    ZeroIdealUnsupported,
    #[error("residue scan period {period} exceeds the cap {cap}")]
    ResidueBound { period: u128, cap: u128 },
    #[error("integer overflow in ideal arithmetic")]
    Overflow,
    #[error("generator {0} is beyond the supported factorization bound")]
    FactorBound(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
