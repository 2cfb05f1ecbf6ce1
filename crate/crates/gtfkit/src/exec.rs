//! Execution strategy for embarrassingly parallel sweeps.
//!
//! Verification suites and benchmarks map a pure function over a slice
//! of prepared inputs. With the `parallel` feature (on by default) the
//! map runs on the rayon thread pool; without it, or when
//! [`ExecMode::Sequential`] is chosen at run time, it runs in order on
//! the calling thread. Results are returned in input order either way,
//! so reports are byte-for-byte identical across modes.

/// How batch computations are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    /// Use the rayon thread pool when the `parallel` feature is enabled;
    /// falls back to sequential execution when it is not.
    #[default]
    Parallel,
    /// Run on the calling thread, one item at a time.
    Sequential,
}

impl std::fmt::Display for ExecMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ExecMode::Parallel => "parallel",
            ExecMode::Sequential => "sequential",
        })
    }
}

/// Maps `f` over `items`, preserving order.
#[cfg(feature = "parallel")]
pub fn map_mode<T, U, F>(mode: ExecMode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    match mode {
        ExecMode::Parallel => items.par_iter().map(f).collect(),
        ExecMode::Sequential => items.iter().map(f).collect(),
    }
}

/// Maps `f` over `items`, preserving order.
#[cfg(not(feature = "parallel"))]
pub fn map_mode<T, U, F>(_mode: ExecMode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_preserve_order() {
        let items: Vec<u64> = (0..257).collect();
        let square = |v: &u64| v * v;
        let par = map_mode(ExecMode::Parallel, &items, square);
        let seq = map_mode(ExecMode::Sequential, &items, square);
        assert_eq!(par, seq);
        assert_eq!(par[16], 256);
    }
}
