//! Execution strategy for the data-parallel loops: permutation sums and
//! batch sweeps. With the `parallel` feature disabled every strategy runs
//! sequentially.

use num_complex::Complex64 as C64;

/// How an index-parallel map is executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

/// Maps `f` over `0..len` and collects results in index order.
pub fn map_indices<T, F>(len: usize, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..len).into_par_iter().map(f).collect()
        }
        _ => (0..len).map(f).collect(),
    }
}

/// Maps `f` over a slice, preserving order.
pub fn map_slice<S, T, F>(items: &[S], exec: Execution, f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    map_indices(items.len(), exec, |i| f(&items[i]))
}

/// Neumaier-compensated sum of real parts and imaginary parts separately.
pub fn compensated_sum<I: IntoIterator<Item = C64>>(terms: I) -> C64 {
    let (mut re, mut im) = (Neumaier::default(), Neumaier::default());
    for t in terms {
        re.add(t.re);
        im.add(t.im);
    }
    C64::new(re.value(), im.value())
}

#[derive(Default)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}
