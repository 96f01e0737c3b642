use thiserror::Error;

/// Errors raised by the symbolic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live on different charts")]
    ChartMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate coordinate `{0}`")]
    DuplicateCoordinate(String),
    #[error("odd coordinate `{0}` must have base value 0")]
    OddBaseValue(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("parity mismatch: {0}")]
    ParityMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("form is not closed")]
    NotClosed,
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("base point precondition violated: {0}")]
    BasePoint(String),
    #[error("antiderivative requires a logarithm in `{0}`")]
    LogRequired(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not graded skew-symmetric: {0}")]
    NotSkew(String),
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
