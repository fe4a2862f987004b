use thiserror::Error;

use crate::closures::SearchStats;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A configured resource limit was hit. Closures never return partial
    /// answers; the search statistics up to the abort are attached instead.
    #[error("budget exceeded: {resource} (limit {limit})")]
    Budget {
        resource: &'static str,
        limit: u64,
        partial: Option<SearchStats>,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }

    pub(crate) fn budget(resource: &'static str, limit: u64) -> Self {
        Error::Budget {
            resource,
            limit,
            partial: None,
        }
    }
}

pub(crate) fn check_degree(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DegreeMismatch { expected, found })
    }
}
