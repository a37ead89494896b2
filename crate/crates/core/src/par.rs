//! Execution strategy for the data-parallel loops (relation sweeps, level-tree
//! filtering, boundary assembly).
//!
//! With the `parallel` feature disabled every strategy runs sequentially, so
//! results never depend on the feature set.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when this build can actually run work on the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Order-preserving map over a slice.
#[cfg(feature = "parallel")]
pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        Exec::Parallel => items.par_iter().map(f).collect(),
        Exec::Sequential => items.iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(_exec: Exec, items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Order-preserving flat map over a slice.
#[cfg(feature = "parallel")]
pub fn flat_map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Vec<R> + Sync + Send,
{
    match exec {
        Exec::Parallel => items.par_iter().flat_map_iter(f).collect(),
        Exec::Sequential => items.iter().flat_map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn flat_map<T, R, F>(_exec: Exec, items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> Vec<R>,
{
    items.iter().flat_map(f).collect()
}
