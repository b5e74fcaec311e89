//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature these fan out over the current rayon pool;
//! without it they are plain iterator loops. Results always come back in
//! input order, so callers see identical output either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// First `Some` in input order.
#[cfg(feature = "parallel")]
pub(crate) fn find_map_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    items.par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn find_map_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
    F: Fn(&T) -> Option<R>,
{
    items.iter().find_map(f)
}

/// Number of worker threads the helpers above will use.
pub fn current_num_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}
