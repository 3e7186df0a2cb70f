use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("group of order {order} exceeds the exhaustive-summation cap {cap}")]
    GroupTooLarge { order: u64, cap: u64 },

    #[error("operator of {rows}x{cols} = {elems} elements exceeds the dense cap {cap}")]
    DenseCapExceeded {
        rows: usize,
        cols: usize,
        elems: u64,
        cap: u64,
    },

    #[error("enumeration of {count} matchings exceeds the cap for n = {n}")]
    TooManyMatchings { n: usize, count: u64 },

    #[error("power iteration did not converge after {iters} iterations; best value {best}, last relative change {delta}")]
    NoConvergence { iters: usize, best: f64, delta: f64 },

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
