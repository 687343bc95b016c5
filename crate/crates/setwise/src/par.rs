//! Execution-strategy helpers: the same data-parallel loops run on a rayon
//! pool (default `parallel` feature) or sequentially (fallback, or on
//! request, e.g. for benchmarking one against the other).

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a data-parallel loop should execute.
///
/// `Parallel` falls back to sequential execution when the crate is built
/// without the `parallel` feature, so callers can request it
/// unconditionally.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    Parallel,
}

impl Parallelism {
    /// The default strategy for this build: parallel when the feature is
    /// compiled in, sequential otherwise.
    pub fn auto() -> Self {
        if cfg!(feature = "parallel") {
            Parallelism::Parallel
        } else {
            Parallelism::Sequential
        }
    }
}

/// Map `f` over `items`, preserving order, with the requested strategy.
pub fn map_collect<T, U, F>(items: &[T], strategy: Parallelism, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match strategy {
        Parallelism::Sequential => items.iter().map(f).collect(),
        Parallelism::Parallel => {
            #[cfg(feature = "parallel")]
            {
                items.par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.iter().map(f).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_preserve_order() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = map_collect(&items, Parallelism::Sequential, |x| x * x);
        let par = map_collect(&items, Parallelism::Parallel, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[999], 999 * 999);
    }
}
