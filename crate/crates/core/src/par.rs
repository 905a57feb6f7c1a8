//! Data-parallel helpers with a sequential fallback.
//!
//! All helpers preserve input order in their output, so reductions performed
//! afterwards are deterministic regardless of scheduling or thread count.

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "SPINNET_THREADS";

/// Thread cap requested through `SPINNET_THREADS`, if set to a positive
/// integer.
pub fn requested_threads() -> Option<usize> {
    std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()).filter(|&n| n > 0)
}

/// Maps `f` over `items`, in parallel when the `parallel` feature is on.
#[cfg(feature = "parallel")]
pub fn map_ordered<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_ordered<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.iter().map(f).collect()
}

/// Sequential reference implementation of [`map_ordered`].
pub fn map_sequential<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Runs `op` inside a pool limited to `SPINNET_THREADS` workers when that
/// variable is set, and on the global pool otherwise.
#[cfg(feature = "parallel")]
pub fn with_thread_cap<R: Send>(op: impl FnOnce() -> R + Send) -> R {
    match requested_threads() {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(op),
            Err(_) => op(),
        },
        None => op(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_thread_cap<R: Send>(op: impl FnOnce() -> R + Send) -> R {
    op()
}

/// `true` when compiled with rayon support.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
