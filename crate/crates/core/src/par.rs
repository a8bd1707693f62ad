//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature these run on rayon; without it they are plain
//! iterator loops. Every reduction used by the crate is associative and
//! commutative, so results never depend on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Folds `map(i)` over `range` with `reduce`.
#[cfg(feature = "parallel")]
pub fn map_reduce<R, M, F>(range: std::ops::Range<usize>, identity: R, map: M, reduce: F) -> R
where
    R: Send + Clone + Sync,
    M: Fn(usize) -> R + Sync + Send,
    F: Fn(R, R) -> R + Sync + Send,
{
    range
        .into_par_iter()
        .map(map)
        .reduce(|| identity.clone(), &reduce)
}

#[cfg(not(feature = "parallel"))]
pub fn map_reduce<R, M, F>(range: std::ops::Range<usize>, identity: R, map: M, reduce: F) -> R
where
    R: Send + Clone + Sync,
    M: Fn(usize) -> R + Sync + Send,
    F: Fn(R, R) -> R + Sync + Send,
{
    range.map(map).fold(identity, reduce)
}

/// `items.iter().map(f).collect()`, order preserved.
#[cfg(feature = "parallel")]
pub fn map_collect<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

/// Runs `f` on a pool of `workers` threads (`None` or 0: the global pool).
/// Without the `parallel` feature the hint is ignored.
#[cfg(feature = "parallel")]
pub fn with_workers<R: Send>(workers: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match workers.filter(|&w| w > 0) {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map(|pool| pool.install(f))
            .unwrap_or_else(|_| panic!("failed to start a pool of {w} threads")),
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_workers<R: Send>(_workers: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    f()
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_matches_sequential() {
        let total = map_reduce(0..1000, 0u64, |i| i as u64 * 3, |a, b| a + b);
        assert_eq!(total, (0..1000u64).map(|i| i * 3).sum::<u64>());
        let v = map_collect(&[1, 2, 3], |x| x * 2);
        assert_eq!(v, vec![2, 4, 6]);
        let w = with_workers(Some(2), || map_reduce(0..10, 0, |i| i, |a, b| a.max(b)));
        assert_eq!(w, 9);
    }
}
