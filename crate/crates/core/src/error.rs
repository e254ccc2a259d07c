use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point {point} lies outside {dims}")]
    OutOfBounds { point: String, dims: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("lattice has {cells} cells, cap is {cap}")]
    CellCap { cells: u128, cap: u64 },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
