use num_rational::BigRational;
use thiserror::Error;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("pole at q = 0: negative powers of q present")]
    PoleAtOrigin,
    #[error("pole at q = {0}: denominator vanishes")]
    Pole(BigRational),
    #[error("q-exponential argument has a nonzero constant term")]
    ConstantTerm,
    #[error("matrices violate X*Y = q^-1 * Y*X at q = {0}")]
    RelationViolated(BigRational),
    #[error("matrix dimensions do not match ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
