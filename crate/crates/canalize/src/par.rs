//! Range-partitioned worker pool for the exhaustive sweeps.
//!
//! Workers receive contiguous index ranges and their results are merged in
//! partition order, so aggregate results do not depend on the job count or
//! on scheduling.

/// Split `0..total` into at most `jobs` contiguous ranges.
pub(crate) fn partition(total: u64, jobs: usize) -> Vec<(u64, u64)> {
    let jobs = jobs.max(1) as u64;
    let jobs = jobs.min(total.max(1));
    let base = total / jobs;
    let extra = total % jobs;
    let mut ranges = Vec::with_capacity(jobs as usize);
    let mut start = 0;
    for j in 0..jobs {
        let len = base + u64::from(j < extra);
        ranges.push((start, start + len));
        start += len;
    }
    ranges
}

/// Run `worker` over a partition of `0..total` and return the per-range
/// results in range order.
pub(crate) fn run_partitioned<T, F>(total: u64, jobs: usize, worker: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, u64) -> T + Sync,
{
    let ranges = partition(total, jobs);
    if ranges.len() == 1 {
        let (lo, hi) = ranges[0];
        return vec![worker(lo, hi)];
    }
    let worker = &worker;
    std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| scope.spawn(move || worker(lo, hi)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_cover_range_exactly() {
        for total in [0u64, 1, 7, 64, 65] {
            for jobs in [1usize, 2, 4, 100] {
                let ranges = partition(total, jobs);
                let mut expect = 0;
                for (lo, hi) in &ranges {
                    assert_eq!(*lo, expect);
                    assert!(hi >= lo);
                    expect = *hi;
                }
                assert_eq!(expect, total);
            }
        }
    }

    #[test]
    fn results_arrive_in_range_order() {
        let sums = run_partitioned(100, 7, |lo, hi| (lo..hi).sum::<u64>());
        assert_eq!(sums.iter().sum::<u64>(), 4950);
        let firsts = run_partitioned(100, 7, |lo, _| lo);
        let mut sorted = firsts.clone();
        sorted.sort_unstable();
        assert_eq!(firsts, sorted);
    }
}
