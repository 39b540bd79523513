//! Order-preserving map over independent work items, on the rayon pool or sequentially.

/// Where to run a batch of independent work items.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    /// Use the rayon thread pool when the `parallel` feature is enabled.
    #[default]
    Parallel,
    Sequential,
}

/// `items.map(f).collect()`, keeping input order.
pub fn map_ordered<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}
