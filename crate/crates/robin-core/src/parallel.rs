//! Deterministic fan-out over independent work items.
//!
//! Root searches over disjoint cells and per-branch solves are independent;
//! results are collected by input index so the output order never depends on
//! scheduling. The worker count is capped by the `ROBIN_SPEC_THREADS`
//! environment variable.

/// Worker threads to use: `min(available_parallelism, ROBIN_SPEC_THREADS)`,
/// at least 1. Unset or unparsable `ROBIN_SPEC_THREADS` means no cap.
pub fn worker_count() -> usize {
    let hw = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let cap = std::env::var("ROBIN_SPEC_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(usize::MAX);
    hw.min(cap).max(1)
}

/// Apply `f` to every item, preserving input order in the output.
///
/// Spawns scoped workers over contiguous chunks when more than one worker is
/// available; the result vector is identical either way.
pub fn map_ordered<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync,
{
    let workers = worker_count();
    if workers <= 1 || items.len() <= 1 {
        return items.into_iter().map(f).collect();
    }
    let n = items.len();
    let chunk = n.div_ceil(workers);
    let mut slots: Vec<Option<R>> = (0..n).map(|_| None).collect();
    let mut item_chunks: Vec<Vec<T>> = Vec::new();
    {
        let mut it = items.into_iter();
        loop {
            let c: Vec<T> = it.by_ref().take(chunk).collect();
            if c.is_empty() {
                break;
            }
            item_chunks.push(c);
        }
    }
    std::thread::scope(|scope| {
        let mut rest = slots.as_mut_slice();
        let mut handles = Vec::new();
        for c in item_chunks {
            let (head, tail) = rest.split_at_mut(c.len());
            rest = tail;
            let fr = &f;
            handles.push(scope.spawn(move || {
                for (slot, item) in head.iter_mut().zip(c) {
                    *slot = Some(fr(item));
                }
            }));
        }
        for h in handles {
            h.join().expect("worker panicked");
        }
    });
    slots.into_iter().map(|s| s.expect("all slots filled")).collect()
}
