//! Execution policy for the data-parallel loops (grid sweeps, root scans).
//!
//! With the `parallel` feature the `Parallel` policy fans out over rayon's
//! global pool; without it every policy runs sequentially. Results are always
//! collected in index order, so both policies return identical vectors.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    pub fn map_indexed<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..len).into_par_iter().map(f).collect()
            }
            _ => (0..len).map(f).collect(),
        }
    }
}

/// `steps` uniformly spaced points from `start` to `end` inclusive.
pub(crate) fn linspace_point(start: f64, end: f64, steps: usize, i: usize) -> f64 {
    if i + 1 == steps {
        end
    } else {
        start + (end - start) * (i as f64) / ((steps - 1) as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn policies_agree() {
        let f = |i: usize| (i as f64).sin();
        assert_eq!(
            Execution::Sequential.map_indexed(1000, f),
            Execution::Parallel.map_indexed(1000, f)
        );
    }

    #[test]
    fn linspace_hits_endpoints() {
        assert_eq!(linspace_point(0.1, 0.7, 7, 0), 0.1);
        assert_eq!(linspace_point(0.1, 0.7, 7, 6), 0.7);
    }
}
