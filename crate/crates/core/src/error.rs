use thiserror::Error;

/// Errors raised by the algebra kernel and the layers built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different rings: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },

    #[error("invalid variable set: {0}")]
    InvalidVariables(String),

    #[error("variable `{0}` is not present in the target ring")]
    UnknownVariable(String),

    #[error("expected {expected} images, got {found}")]
    ImageCountMismatch { expected: usize, found: usize },

    #[error("division is not exact: {0}")]
    InexactDivision(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("the unit ideal has no dimension")]
    UnitIdeal,

    #[error("zero argument: {0}")]
    ZeroArgument(String),

    #[error("polynomial is not in the ideal")]
    NotInIdeal,

    #[error("maps are not mutually inverse (coordinate {index}): {reason}")]
    NotMutuallyInverse { index: usize, reason: String },

    #[error("degenerate composition: coordinate {index} vanishes")]
    DegenerateComposition { index: usize },

    /// A hypothesis of the construction does not hold for the given data.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("elimination ideal is not principal: {0}")]
    NotHypersurface(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("no regular sequence found after {0} attempts")]
    NoRegularSequence(usize),

    #[error("saturation did not stabilize within {0} steps")]
    SaturationCap(usize),

    /// A computed identity that must hold failed; this indicates an inconsistency.
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
