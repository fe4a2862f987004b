//! Resource limits and the parallel/sequential execution switch.
//!
//! Every parallel code path in the crate goes through [`Exec::map`], which
//! preserves input order, so results never depend on the schedule. Without
//! the `parallel` feature `Exec::Parallel` silently runs sequentially.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_ELEMENTS: usize = 10_000_000;
pub const DEFAULT_MAX_DEGREE: usize = 4096;
pub const DEFAULT_MAX_OBJECTS: usize = 1 << 24;
pub const DEFAULT_SUBSET_DEGREE: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.into_par_iter().map(f).collect()
            }
            _ => items.into_iter().map(f).collect(),
        }
    }

    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

#[derive(Clone, Debug)]
pub struct Budget {
    /// Largest element set any enumeration may produce.
    pub max_elements: usize,
    /// Largest point count for product-action constructions.
    pub max_degree: usize,
    /// Largest object space (encoded tuples or partition label vectors).
    pub max_objects: usize,
    /// Largest degree for power-set enumeration.
    pub max_subset_degree: usize,
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_elements: DEFAULT_MAX_ELEMENTS,
            max_degree: DEFAULT_MAX_DEGREE,
            max_objects: DEFAULT_MAX_OBJECTS,
            max_subset_degree: DEFAULT_SUBSET_DEGREE,
            deadline: None,
        }
    }
}

impl Budget {
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub(crate) fn check_elements(&self, count: usize) -> Result<()> {
        if count > self.max_elements {
            Err(Error::budget("group elements", self.max_elements as u64))
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_objects(&self, count: u128) -> Result<()> {
        if count > self.max_objects as u128 {
            Err(Error::budget("object space", self.max_objects as u64))
        } else {
            Ok(())
        }
    }

    pub(crate) fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// Everything a closure computation needs besides its input group.
#[derive(Clone, Debug, Default)]
pub struct Config {
    pub budget: Budget,
    pub exec: Exec,
    /// Directory for the on-disk closure cache; disabled when `None`.
    pub cache_dir: Option<PathBuf>,
}

impl Config {
    pub fn sequential() -> Self {
        Config {
            exec: Exec::Sequential,
            ..Config::default()
        }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }
}
