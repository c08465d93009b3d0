//! Sequential and data-parallel execution of independent work items.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] runs on
//! the rayon global pool; without it every call degrades to the sequential
//! path. Results always come back in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this build can actually run work in parallel.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// Order-preserving map over a slice.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Order-preserving filter-map over `0..count`.
    pub fn filter_map_range<R, F>(self, count: u64, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64) -> Option<R> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..count).into_par_iter().filter_map(f).collect(),
            _ => (0..count).filter_map(f).collect(),
        }
    }

    /// Filter-map over an arbitrary sequential iterator, returning results
    /// tagged with their position in the iterator and sorted by it.
    pub fn filter_map_iter<I, R, F>(self, items: I, f: F) -> Vec<(u64, R)>
    where
        I: Iterator + Send,
        I::Item: Send,
        R: Send,
        F: Fn(u64, I::Item) -> Option<R> + Sync + Send,
    {
        let tagged = items.enumerate().map(|(i, x)| (i as u64, x));
        let mut out: Vec<(u64, R)> = match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => tagged
                .par_bridge()
                .filter_map(|(i, x)| f(i, x).map(|r| (i, r)))
                .collect(),
            _ => tagged
                .filter_map(|(i, x)| f(i, x).map(|r| (i, r)))
                .collect(),
        };
        out.sort_by_key(|(i, _)| *i);
        out
    }
}
