//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (the default) the bulk operations in this
//! crate fan out over rayon; without it they run as plain loops. The runtime
//! switch exists so benchmarks can compare both code paths in one build.

use std::sync::atomic::{AtomicBool, Ordering};

static PARALLEL_ENABLED: AtomicBool = AtomicBool::new(true);

/// Globally enable or disable the rayon code paths. Only meaningful when the
/// `parallel` feature is compiled in; intended for benchmarks and for the
/// `--threads 1` CLI switch, not for toggling mid-computation.
pub fn set_parallel_enabled(enabled: bool) {
    PARALLEL_ENABLED.store(enabled, Ordering::SeqCst);
}

pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && PARALLEL_ENABLED.load(Ordering::SeqCst)
}

/// Map over items, in parallel when available.
pub fn map_collect<I, O, G>(items: Vec<I>, f: G) -> Vec<O>
where
    I: Send,
    O: Send,
    G: Fn(I) -> O + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if parallel_enabled() {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
    }
    items.into_iter().map(f).collect()
}

/// First item (by index order) for which `f` returns `Some`.
pub fn find_map_first<I, O, G>(items: Vec<I>, f: G) -> Option<O>
where
    I: Send,
    O: Send,
    G: Fn(I) -> Option<O> + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if parallel_enabled() {
            use rayon::prelude::*;
            return items.into_par_iter().find_map_first(f);
        }
    }
    items.into_iter().find_map(f)
}

/// Do all items satisfy the predicate?
pub fn all<I, G>(items: Vec<I>, f: G) -> bool
where
    I: Send,
    G: Fn(I) -> bool + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if parallel_enabled() {
            use rayon::prelude::*;
            return items.into_par_iter().all(f);
        }
    }
    items.into_iter().all(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_matches_sequential() {
        let v: Vec<u64> = (0..100).collect();
        let seq: Vec<u64> = v.iter().map(|x| x * x).collect();
        assert_eq!(map_collect(v, |x| x * x), seq);
    }

    #[test]
    fn find_map_first_is_deterministic() {
        let v: Vec<u64> = (0..1000).collect();
        let hit = find_map_first(v, |x| if x % 7 == 3 { Some(x) } else { None });
        assert_eq!(hit, Some(3));
    }
}
