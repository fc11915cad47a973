use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

/// Failures of the exact series and matrix operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient x^{index} requested beyond truncation order {order}")]
    OutOfOrder { index: usize, order: usize },
    #[error("division by a series that is zero to its truncation order")]
    DivisionByZero,
    #[error("numerator valuation {numerator} is below denominator valuation {denominator}")]
    NonCancellingValuation { numerator: usize, denominator: usize },
    #[error("inner series of a composition must have zero constant term")]
    CompositionDomain,
    #[error("series reversion needs zero constant term and nonzero linear term")]
    ReversionDomain,
    #[error("derivative of an order-0 series carries no information")]
    EmptyDerivative,
    #[error("negative power of a series with zero constant term")]
    NegativePowerOfNonUnit,
    #[error("constant term has no exact rational root of degree {degree}")]
    IrrationalRoot { degree: u32 },
    #[error("fractional power of a series with zero constant term")]
    ZeroConstantTerm,
    #[error("exponent denominator must be positive")]
    ZeroExponentDenominator,
    #[error("exp needs a series with zero constant term")]
    ExpDomain,
    #[error("log needs a series with constant term 1")]
    LogDomain,
    #[error("{name} must have a nonzero constant term")]
    NotInF0 { name: &'static str },
    #[error("{name} must have zero constant term and nonzero linear term")]
    NotInF1 { name: &'static str },
    #[error("row {row} has {found} entries, expected {expected}")]
    MalformedTriangle { row: usize, found: usize, expected: usize },
    #[error("triangle is singular: zero diagonal entry in row {row}")]
    SingularTriangle { row: usize },
    #[error("need {needed} rows but only {available} are available")]
    InsufficientRows { needed: usize, available: usize },
    #[error("triangles of different sizes: {left} and {right} rows")]
    SizeMismatch { left: usize, right: usize },
    #[error("Z-sequence bracket has a nonzero constant term")]
    ZInconsistent,
}
