//! Batch execution helper for the verification sweeps.
//!
//! With the `parallel` feature (default) batches run on rayon; without it
//! they run sequentially. [`map_batch_seq`] is always sequential and exists
//! so benchmarks can compare both paths in one build. Results come back in
//! input order either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every item, in parallel when the `parallel` feature is on.
#[cfg(feature = "parallel")]
pub fn map_batch<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

/// Applies `f` to every item, in parallel when the `parallel` feature is on.
#[cfg(not(feature = "parallel"))]
pub fn map_batch<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_batch_seq(items, f)
}

/// Sequential fallback, available regardless of features.
pub fn map_batch_seq<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn batch_order_is_input_order() {
        let items: Vec<u64> = (0..64).collect();
        let doubled = map_batch(&items, |x| x * 2);
        let doubled_seq = map_batch_seq(&items, |x| x * 2);
        assert_eq!(doubled, doubled_seq);
        assert!(doubled.windows(2).all(|w| w[0] < w[1]));
    }
}
