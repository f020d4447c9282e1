use thiserror::Error;

/// Errors raised by the algebraic and geometric layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter lists differ: [{left}] vs [{right}]")]
    ParameterMismatch { left: String, right: String },
    #[error("no value supplied for parameter `{0}`")]
    MissingParameter(String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("dimension must be even and positive, got {0}")]
    OddDimension(usize),
    #[error("structure constants are not antisymmetric at ({i}, {j}, {k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("bracket of basis vector {0} with itself")]
    SelfBracket(usize),
    #[error("bracket ({0}, {1}) given twice")]
    DuplicateBracket(usize, usize),
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("metric is singular")]
    SingularMetric,
    #[error("inverse metric has non-polynomial entries")]
    NonPolynomialInverse,
    #[error("degenerate plane: pi1(x, y, y, x) vanishes")]
    DegeneratePlane,
    #[error("vector lies along a totally isotropic direction")]
    IsotropicDirection,
    #[error("expected parameters {expected}, found {found}")]
    WrongParameterSet { expected: String, found: String },
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
