//! Data-parallel helpers. With the `parallel` feature these run on the rayon
//! pool; without it they degrade to plain iterators with identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps every item, preserving order.
pub(crate) fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Keeps the items satisfying `f`, preserving order.
pub(crate) fn filter<T, F>(items: Vec<T>, f: F) -> Vec<T>
where
    T: Send + Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().filter(|x| f(x)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().filter(|x| f(x)).collect()
    }
}

/// Maps `start..end` through `f` and concatenates the outputs in order.
pub(crate) fn flat_map_range<U, F>(start: u64, end: u64, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(u64) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (start..end).into_par_iter().filter_map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (start..end).filter_map(f).collect()
    }
}

/// Like [`map`] but stops at the first error.
pub(crate) fn try_map<T, U, E, F>(items: &[T], f: F) -> Result<Vec<U>, E>
where
    T: Sync,
    U: Send,
    E: Send,
    F: Fn(&T) -> Result<U, E> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

pub(crate) fn sort_by<T, F>(items: &mut [T], f: F)
where
    T: Send,
    F: Fn(&T, &T) -> std::cmp::Ordering + Sync,
{
    #[cfg(feature = "parallel")]
    {
        items.par_sort_unstable_by(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.sort_unstable_by(f)
    }
}
