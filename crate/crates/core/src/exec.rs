//! Execution strategy for the data-parallel loops (exhaustive scans,
//! brute-force filters, Monte Carlo batches).
//!
//! Every loop goes through [`Execution::map_indexed`], which always returns
//! results in index order. Reductions happen sequentially afterwards, so the
//! output of any operation is identical under both strategies.

/// How index-parallel work is scheduled.
///
/// The default is `Parallel` when the `parallel` feature is enabled and
/// `Sequential` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Execution {
    /// Plain iterator on the calling thread.
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    /// Rayon work stealing over the global thread pool.
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Execution {
    /// Evaluates `f(0), f(1), …, f(len - 1)` and returns the results in order.
    pub fn map_indexed<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            Execution::Sequential => (0..len).map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..len).into_par_iter().map(f).collect()
            }
        }
    }
}
