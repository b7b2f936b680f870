use std::path::PathBuf;

/// Errors returned by the search, oracle, generator and ingestion APIs.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("a sorted list needs at least two entries, got {0}")]
    ListTooShort(usize),

    #[error("list entry {index} is not a finite number")]
    NonFinite { index: usize },

    #[error("list is not sorted: entry {index} is smaller than entry {}", index - 1)]
    Unsorted { index: usize },

    #[error("target {z} lies outside the key range [{lo}, {hi}]")]
    TargetOutOfRange { z: f64, lo: f64, hi: f64 },

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("{what} refuses n = {n}; the exhaustive budget is {limit}")]
    OverBudget {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("{}:{line}: {msg}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("{}: no records", .0.display())]
    Empty(PathBuf),

    #[error("{0}")]
    OutOfRange(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
