use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is reducible over the base field")]
    Reducible(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("algebras are defined over different base fields")]
    MixedFields,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("{n} exceeds the factoring cap {cap}")]
    TooLarge { n: u64, cap: u64 },
    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded { what: String, size: u64, cap: u64 },
    #[error("element must be nonzero")]
    ZeroElement,
    #[error("element is not normal over the base field")]
    NotNormal,
    #[error("element does not satisfy tau(g)/g in K* for all tau")]
    NotInC,
    #[error("invalid group table: {0}")]
    BadTable(String),
    #[error("invalid algebra: {0}")]
    BadAlgebra(String),
    #[error("algebra {0} was not constructed as a group algebra")]
    NotGroupAlgebra(String),
    #[error("algebra {0} is not flagged simple")]
    NotSimple(String),
    #[error("search found no witness: {0}")]
    NotFound(String),
    #[error("claim failed: {claim} (witness: {witness})")]
    Falsified { claim: String, witness: String },
    #[error("catalog line {line}: {msg}")]
    Catalog { line: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
