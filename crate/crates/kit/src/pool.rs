//! A small worker pool whose results reach the caller in input order.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::thread;

/// Worker count from `SNARKKIT_WORKERS`, else the available parallelism.
pub fn worker_count() -> usize {
    std::env::var("SNARKKIT_WORKERS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&k| k > 0)
        .unwrap_or_else(|| thread::available_parallelism().map_or(1, |k| k.get()))
}

/// Applies `work` to every item on `workers` threads and hands the results
/// to `sink` in item order. Workers pull items from a shared counter and
/// share nothing else.
pub fn run_ordered<T, R, W, S>(items: &[T], workers: usize, work: W, mut sink: S)
where
    T: Sync,
    R: Send,
    W: Fn(&T) -> R + Sync,
    S: FnMut(usize, R),
{
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel();
    thread::scope(|s| {
        for _ in 0..workers.max(1).min(items.len().max(1)) {
            let tx = tx.clone();
            let (next, work) = (&next, &work);
            s.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(item) = items.get(i) else { break };
                if tx.send((i, work(item))).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        let mut pending = BTreeMap::new();
        let mut emitted = 0;
        for (i, r) in rx {
            pending.insert(i, r);
            while let Some(r) = pending.remove(&emitted) {
                sink(emitted, r);
                emitted += 1;
            }
        }
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..200).collect();
        let mut seen = Vec::new();
        run_ordered(&items, 7, |&x| x * x, |i, r| seen.push((i, r)));
        assert_eq!(seen, items.iter().map(|&x| (x as usize, x * x)).collect::<Vec<_>>());
    }
}
