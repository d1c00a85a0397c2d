use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("matrix parse error at line {line}, column {column}: {message}")]
    MatrixText {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("empty input")]
    EmptyInput,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("adjacency matrix is not symmetric at ({i}, {j})")]
    Asymmetric { i: usize, j: usize },

    #[error("adjacency matrix has a nonzero diagonal entry at vertex {0}")]
    NonzeroDiagonal(usize),

    #[error("graph order {n} exceeds the limit of {max}")]
    OrderTooLarge { n: usize, max: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0} is not a prime")]
    NotPrime(String),

    #[error("{0} is not an odd prime")]
    NotOddPrime(String),

    #[error("polynomial moduli differ ({0} vs {1})")]
    ModulusMismatch(u64, u64),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial degree must be at least 1")]
    ConstantPolynomial,

    #[error("matrix is singular")]
    Singular,

    #[error("graph is not controllable (det W = 0)")]
    NotControllable,

    #[error("theta is zero")]
    ZeroTheta,

    #[error("graphs are not generalized cospectral")]
    NotCospectral,
}
