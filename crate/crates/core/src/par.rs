//! Index-ordered map over `0..count`, spread across a rayon pool when the
//! `parallel` feature is on and run inline otherwise.

pub(crate) fn map_sequential<T, F>(count: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..count).map(f).collect()
}

/// `threads == 0` uses the global pool; `threads == 1` runs inline.
#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<T, F>(count: usize, threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;

    match threads {
        0 => (0..count).into_par_iter().map(f).collect(),
        1 => map_sequential(count, f),
        t => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("failed to build rayon pool")
            .install(|| (0..count).into_par_iter().map(f).collect()),
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<T, F>(count: usize, _threads: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    map_sequential(count, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_by_index() {
        for threads in [0, 1, 3] {
            let out = map_indexed(100, threads, |i| i * i);
            assert_eq!(out, (0..100).map(|i| i * i).collect::<Vec<_>>());
        }
    }
}
