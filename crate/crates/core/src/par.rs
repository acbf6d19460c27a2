//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) the helpers fan out over rayon's
//! pool; without it, or inside [`sequential`], they run on the calling thread.
//! Every helper returns results in index order, so output never depends on
//! scheduling.

use std::cell::Cell;
use std::ops::Range;

thread_local! {
    static FORCE_SEQUENTIAL: Cell<bool> = const { Cell::new(false) };
}

/// Runs `f` with every helper pinned to the calling thread.
pub fn sequential<R>(f: impl FnOnce() -> R) -> R {
    struct Reset(bool);
    impl Drop for Reset {
        fn drop(&mut self) {
            FORCE_SEQUENTIAL.with(|c| c.set(self.0));
        }
    }
    let _reset = Reset(FORCE_SEQUENTIAL.with(|c| c.replace(true)));
    f()
}

/// Runs `f` on a pool capped at `jobs` workers; `jobs == 1` is [`sequential`].
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    if jobs <= 1 {
        return sequential(f);
    }
    #[cfg(feature = "parallel")]
    {
        match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(f),
            Err(err) => {
                log::warn!("could not build a {jobs}-thread pool ({err}); using the global pool");
                f()
            }
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        f()
    }
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel") && !FORCE_SEQUENTIAL.with(Cell::get)
}

// Below this many items the fork/join overhead dominates.
#[cfg(feature = "parallel")]
const MIN_PARALLEL: usize = 256;

#[cfg(feature = "parallel")]
fn go_parallel(len: usize) -> bool {
    len >= MIN_PARALLEL && is_parallel()
}

/// Indices in `range` satisfying `pred`, ascending.
pub fn filter_range<F>(range: Range<usize>, pred: F) -> Vec<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if go_parallel(range.len()) {
        use rayon::prelude::*;
        return range.into_par_iter().filter(|&i| pred(i)).collect();
    }
    range.filter(|&i| pred(i)).collect()
}

/// Smallest index in `range` for which `f` yields a value.
pub fn find_first<T, F>(range: Range<usize>, f: F) -> Option<(usize, T)>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if go_parallel(range.len()) {
        use rayon::prelude::*;
        return range
            .into_par_iter()
            .filter_map(|i| f(i).map(|t| (i, t)))
            .find_first(|_| true);
    }
    range.into_iter().find_map(|i| f(i).map(|t| (i, t)))
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if items.len() > 1 && is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

/// Maps `f` over `range`, preserving order.
pub fn map_range<R, F>(range: Range<usize>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if range.len() > 1 && is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().map(f).collect();
    }
    range.map(f).collect()
}
