//! Execution strategy for data-parallel loops.
//!
//! Every parallel loop in the crate goes through [`map_ordered`] or
//! [`chunked_sum`]. Both produce results in input order and combine partial
//! results in a fixed order, so the output does not depend on the thread
//! count or on whether the `parallel` feature is enabled.

/// How a data-parallel loop is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Uses the rayon pool when the `parallel` feature is enabled, otherwise
    /// falls back to sequential execution.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// True when loops will actually fan out to worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Maps `f` over `items`, returning results in input order.
pub fn map_ordered<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(&f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Chunk length used by [`chunked_sum`].
pub const SUM_CHUNK: usize = 4096;

/// Sums `term(i)` for `i` in `range`.
///
/// The range is cut into chunks of [`SUM_CHUNK`] indices. Each chunk is summed
/// left to right, then the chunk totals are added left to right. Sequential
/// and parallel execution therefore give bit-identical results.
pub fn chunked_sum<F>(range: std::ops::Range<usize>, exec: Execution, term: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    let start = range.start;
    let len = range.end.saturating_sub(start);
    let n_chunks = len.div_ceil(SUM_CHUNK);
    let chunk_total = |c: usize| {
        let lo = start + c * SUM_CHUNK;
        let hi = (lo + SUM_CHUNK).min(range.end);
        (lo..hi).map(&term).sum::<f64>()
    };
    let chunks: Vec<usize> = (0..n_chunks).collect();
    map_ordered(&chunks, exec, |&c| chunk_total(c))
        .into_iter()
        .fold(0.0, |acc, x| acc + x)
}
