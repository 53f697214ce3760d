use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "unsupported field size q = {0}: expected an odd prime <= 65536 or 2^e with 1 <= e <= 8"
    )]
    UnsupportedField(u64),
    #[error("division by zero in the field")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("target degree {target} is below the polynomial degree {degree}")]
    DegreeTooSmall { degree: u32, target: u32 },
    #[error("mismatched monomial orders")]
    OrderMismatch,
    #[error("coordinate {0} is zero; the parameterization is defined on units only")]
    ZeroCoordinate(usize),
    #[error("work estimate {needed} exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("binomial terms share variables; expected disjoint supports")]
    SupportsNotDisjoint,
    #[error("unsupported instance: {0}")]
    UnsupportedSpec(String),
    #[error("linear system stayed singular through degree {0}")]
    SingularSystem(u32),
    #[error("coefficient {0} is not an integer")]
    NonIntegerBeta(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("cycle length {0} is not odd and >= 3")]
    Oddity(u32),
    #[error("invalid cycle multiplicity {0}")]
    Multiplicity(u32),
    #[error("cross-check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
