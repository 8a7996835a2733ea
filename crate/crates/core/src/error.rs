use num_bigint::BigInt;
use thiserror::Error;

/// Domain errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be positive, got {0}")]
    NonPositive(String),
    #[error("gcd({h}, {k}) is not 1")]
    NotCoprime { h: BigInt, k: BigInt },
    #[error("{0} is not squarefree")]
    NotSquarefree(u64),
    #[error("determinant {det} does not equal scale {e}")]
    Determinant { det: BigInt, e: BigInt },
    #[error("scale must be positive, got {0}")]
    BadScale(BigInt),
    #[error("matrix {matrix} is not in {group}")]
    NotInGroup { matrix: String, group: String },
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("malformed input: {0}")]
    Shape(String),
    #[error("E^{0} is not the identity")]
    NotFiniteOrder(u32),
    #[error("word search gave up after {0} nodes")]
    BudgetExhausted(usize),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("no symbol value for generator {0:?} at this cusp")]
    MissingValue(String),
    #[error("series needs {need} terms but only {have} are available")]
    Convergence { need: usize, have: usize },
    #[error("point must lie in the upper half plane")]
    NotInUpperHalfPlane,
}

pub type Result<T> = std::result::Result<T, Error>;
