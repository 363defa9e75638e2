//! Execution strategy for the data-parallel sweeps.
//!
//! Every exhaustive check in this crate is a map over an index range or a
//! slice whose items are independent. [`Exec`] selects between a rayon-backed
//! parallel map and a plain sequential loop. Without the `parallel` feature
//! both variants run sequentially, so results never depend on the choice:
//! outputs are always collected in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether this strategy actually fans out in the current build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    pub fn map_range<R, F>(self, range: std::ops::Range<usize>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().map(f).collect();
        }
        range.map(f).collect()
    }

    /// Sum of `f` over the range.
    pub fn sum_range<F>(self, range: std::ops::Range<usize>, f: F) -> u64
    where
        F: Fn(usize) -> u64 + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().map(f).sum();
        }
        range.map(f).sum()
    }

    /// Items for which `f` returns `Some`, in input order.
    pub fn filter_map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().filter_map(f).collect();
        }
        items.iter().filter_map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_and_keep_order() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = Exec::Sequential.map(&items, |x| x * x);
        let par = Exec::Parallel.map(&items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(
            Exec::Sequential.sum_range(0..100, |i| i as u64),
            Exec::Parallel.sum_range(0..100, |i| i as u64)
        );
        let odd = Exec::Parallel.filter_map(&items, |&x| (x % 2 == 1).then_some(x));
        assert_eq!(odd.len(), 500);
        assert!(odd.windows(2).all(|w| w[0] < w[1]));
    }
}
