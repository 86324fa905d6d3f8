//! Data-parallel helpers with a sequential fallback.
//!
//! With the default `parallel` feature the reductions below fan out over
//! rayon; without it they run as plain folds. Every reduction used in the
//! kernel combines with an exactly commutative and associative operation,
//! so both paths produce identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Whether the parallel path is compiled in.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}

/// Map indices `0..n` and reduce with `combine` starting from `identity`.
#[cfg(feature = "parallel")]
pub fn map_reduce<T, M, C, I>(n: usize, map: M, identity: I, combine: C) -> T
where
    T: Send,
    M: Fn(usize) -> T + Sync + Send,
    C: Fn(T, T) -> T + Sync + Send,
    I: Fn() -> T + Sync + Send,
{
    (0..n)
        .into_par_iter()
        .map(&map)
        .reduce(&identity, &combine)
}

#[cfg(not(feature = "parallel"))]
pub fn map_reduce<T, M, C, I>(n: usize, map: M, identity: I, combine: C) -> T
where
    T: Send,
    M: Fn(usize) -> T + Sync + Send,
    C: Fn(T, T) -> T + Sync + Send,
    I: Fn() -> T + Sync + Send,
{
    (0..n).map(map).fold(identity(), combine)
}

/// Sequential variant, kept available for cross-checks and benches.
pub fn map_reduce_seq<T, M, C, I>(n: usize, map: M, identity: I, combine: C) -> T
where
    M: Fn(usize) -> T,
    C: Fn(T, T) -> T,
    I: Fn() -> T,
{
    (0..n).map(map).fold(identity(), combine)
}

/// Map indices `0..n`, keeping the Some results.
#[cfg(feature = "parallel")]
pub fn filter_map_collect<T, M>(n: usize, map: M) -> Vec<T>
where
    T: Send,
    M: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..n).into_par_iter().filter_map(&map).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn filter_map_collect<T, M>(n: usize, map: M) -> Vec<T>
where
    T: Send,
    M: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..n).filter_map(map).collect()
}

/// First index in `0..n` whose map result is Some, by index order.
/// The parallel path still returns the least index.
#[cfg(feature = "parallel")]
pub fn find_first<T, M>(n: usize, map: M) -> Option<(usize, T)>
where
    T: Send,
    M: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..n)
        .into_par_iter()
        .find_map_first(|i| map(i).map(|t| (i, t)))
}

#[cfg(not(feature = "parallel"))]
pub fn find_first<T, M>(n: usize, map: M) -> Option<(usize, T)>
where
    T: Send,
    M: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..n).find_map(|i| map(i).map(|t| (i, t)))
}
