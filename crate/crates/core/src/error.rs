use thiserror::Error;

pub type Result<T, E = MemsError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum MemsError {
    #[error("amplitude vector has length {got}, but dims {dims:?} require {expected}")]
    DimensionMismatch {
        dims: Vec<usize>,
        expected: usize,
        got: usize,
    },

    #[error("state norm {0:e} is below 1e-12")]
    ZeroNorm(f64),

    #[error("invalid dimension list {0:?}: every site needs dimension >= 2")]
    InvalidDims(Vec<usize>),

    #[error("subset size {k} out of range for {n} sites")]
    InvalidSize { n: usize, k: usize },

    #[error("digit {digit} at site {site} exceeds dimension {dim}")]
    DigitOutOfRange { site: usize, digit: usize, dim: usize },

    #[error("invalid subset {indices:?} for {n_sites} sites")]
    SubsetInvalid { indices: Vec<usize>, n_sites: usize },

    #[error("matrix is not positive semidefinite (eigenvalue {0:e})")]
    NotPsd(f64),

    #[error("density matrix trace {0} differs from 1")]
    NotNormalized(f64),

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("size out of range: {0}")]
    SizeOutOfRange(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid ensemble weights: {0}")]
    WeightInvalid(String),

    #[error("invalid search configuration: {0}")]
    ConfigInvalid(String),

    #[error("parse error in {context}: {message}")]
    Parse { context: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
