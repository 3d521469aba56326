//! Execution strategy for the enumeration-heavy loops.
//!
//! With the `parallel` feature (default) [`Exec::Parallel`] runs on the rayon
//! pool; without it every strategy runs sequentially. Reductions are
//! order-preserving in both modes, so results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn map_collect<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Folds chunks of `items` into accumulators and combines them with
    /// `reduce`, which must be associative with `identity` as unit.
    pub fn fold_reduce<T, R, I, F, G>(self, items: &[T], identity: I, fold: F, reduce: G) -> R
    where
        T: Sync,
        R: Send,
        I: Fn() -> R + Sync + Send,
        F: Fn(R, &T) -> R + Sync + Send,
        G: Fn(R, R) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items
                .par_iter()
                .fold(&identity, &fold)
                .reduce(&identity, &reduce),
            _ => {
                let _ = &reduce;
                items.iter().fold(identity(), fold)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let items: Vec<u64> = (1..=1000).collect();
        for exec in [Exec::Sequential, Exec::Parallel] {
            let squares = exec.map_collect(&items, |x| x * x);
            assert_eq!(squares[9], 100);
            let sum = exec.fold_reduce(&items, || 0u64, |acc, x| acc + x, |a, b| a + b);
            assert_eq!(sum, 500_500);
            let concat = exec.fold_reduce(
                &items,
                Vec::new,
                |mut acc, &x| {
                    acc.push(x);
                    acc
                },
                |mut a, b| {
                    a.extend(b);
                    a
                },
            );
            assert_eq!(concat, items);
        }
    }
}
