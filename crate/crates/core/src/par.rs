//! Data-parallel helpers. With the `parallel` feature (default) these fan
//! out over rayon; without it they fall back to plain sequential loops, so
//! the engine builds on targets without a thread pool.

#[cfg(feature = "parallel")]
pub(crate) fn find_map_range<E: Send>(
    n: usize,
    f: impl Fn(usize) -> Option<E> + Sync + Send,
) -> Option<E> {
    use rayon::prelude::*;
    (0..n).into_par_iter().find_map_first(|i| f(i))
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn find_map_range<E>(n: usize, f: impl Fn(usize) -> Option<E>) -> Option<E> {
    (0..n).find_map(f)
}

/// Order-preserving indexed map over `0..n`.
#[cfg(feature = "parallel")]
pub(crate) fn map_range<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<T>(n: usize, f: impl Fn(usize) -> T) -> Vec<T> {
    (0..n).map(f).collect()
}
