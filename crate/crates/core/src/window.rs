//! Minimum-variance contiguous window over sorted reals.
//!
//! Sorting a cluster's projection onto one axis and sliding a window of fixed
//! width over it finds the subset of that width with the smallest 1-means
//! cost: an optimal subset of a fixed size is always contiguous in sorted
//! order. Prefix sums of the values and their squares make every window
//! O(1), so the whole search is dominated by the sort.

use crate::cost::one_means_cost;
use crate::error::{ClusterError, Result};
use crate::types::ErrorRate;

/// Relative slack under which two window costs are treated as tied.
///
/// Costs are compared against the windows' sums of squares around the pivot,
/// which bounds the round-off of the prefix-sum evaluation. Both this module
/// and the brute-force oracle use the same rule, so equal-cost windows
/// resolve to the same (earliest) start regardless of arithmetic path.
pub const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowResult {
    /// First index of the window in the ascending sort.
    pub start: usize,
    pub width: usize,
    pub mean: f64,
    /// 1-means cost of the window around its own mean.
    pub cost: f64,
}

/// Number of points kept per cluster: `m - floor(alpha * m)`, which equals
/// `ceil((1 - alpha) * m)`.
pub fn window_width(cluster_size: usize, alpha: ErrorRate) -> usize {
    let dropped = (alpha.value() * cluster_size as f64).floor() as usize;
    cluster_size - dropped.min(cluster_size.saturating_sub(1))
}

/// Whether a candidate with (`cost`, `sq`) strictly beats the incumbent.
#[inline]
pub fn improves(cost: f64, sq: f64, best_cost: f64, best_sq: f64) -> bool {
    cost < best_cost - TIE_TOLERANCE * sq.max(best_sq)
}

/// Sorts `values` ascending and returns the cheapest window of `width`
/// consecutive values. Ties resolve to the smallest start.
pub fn best_window(values: &[f64], width: usize) -> Result<WindowResult> {
    check_width(values.len(), width)?;
    if width == values.len() {
        // single window: keep the caller's summation order for the mean
        let mean = values.iter().sum::<f64>() / width as f64;
        let cost = values.iter().map(|v| (v - mean) * (v - mean)).sum();
        return Ok(WindowResult { start: 0, width, mean, cost });
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    best_window_sorted(&sorted, width)
}

/// As [`best_window`] for input that is already sorted ascending.
pub fn best_window_sorted(sorted: &[f64], width: usize) -> Result<WindowResult> {
    let n = sorted.len();
    check_width(n, width)?;
    debug_assert!(sorted.windows(2).all(|w| w[0] <= w[1]));

    // Accumulate around a central value to limit cancellation in sumsq - sum^2/w.
    let pivot = sorted[n / 2];
    let mut sums = Vec::with_capacity(n + 1);
    let mut sqs = Vec::with_capacity(n + 1);
    let (mut s, mut q) = (0.0, 0.0);
    sums.push(s);
    sqs.push(q);
    for &v in sorted {
        let c = v - pivot;
        s += c;
        q += c * c;
        sums.push(s);
        sqs.push(q);
    }

    let mut best = (0, f64::INFINITY, f64::INFINITY);
    for start in 0..=n - width {
        let end = start + width;
        let sq = sqs[end] - sqs[start];
        let cost = one_means_cost(width, sums[end] - sums[start], sq);
        if start == 0 || improves(cost, sq, best.1, best.2) {
            best = (start, cost, sq);
        }
    }

    // Prefix sums pick the window; its mean and cost are recomputed directly.
    let start = best.0;
    let window = &sorted[start..start + width];
    let mean = window.iter().sum::<f64>() / width as f64;
    let cost = window.iter().map(|v| (v - mean) * (v - mean)).sum();
    Ok(WindowResult { start, width, mean, cost })
}

fn check_width(len: usize, width: usize) -> Result<()> {
    if width == 0 || width > len {
        return Err(ClusterError::Width { width, len });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rate(a: f64) -> ErrorRate {
        ErrorRate::new(a).unwrap()
    }

    #[test]
    fn outlier_is_excluded() {
        let r = best_window(&[0.0, 1.0, 2.0, 100.0], 3).unwrap();
        assert_eq!(r.start, 0);
        assert_eq!(r.mean, 1.0);
        assert!((r.cost - 2.0).abs() < 1e-12);
    }

    #[test]
    fn full_width_is_whole_set() {
        let r = best_window(&[5.0, -3.0, 9.0], 3).unwrap();
        assert_eq!(r.start, 0);
        assert!((r.mean - 11.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn zero_cost_tie_resolves_to_first() {
        let r = best_window(&[0.0, 0.0, 0.0, 50.0], 2).unwrap();
        assert_eq!((r.start, r.mean, r.cost), (0, 0.0, 0.0));
    }

    #[test]
    fn width_one_picks_smallest_value() {
        let r = best_window(&[4.0, -2.5, 7.0, 0.1], 1).unwrap();
        assert_eq!((r.start, r.mean, r.cost), (0, -2.5, 0.0));
    }

    #[test]
    fn width_out_of_range() {
        assert_eq!(best_window(&[1.0, 2.0], 0), Err(ClusterError::Width { width: 0, len: 2 }));
        assert_eq!(best_window(&[1.0, 2.0], 3), Err(ClusterError::Width { width: 3, len: 2 }));
        assert!(best_window(&[], 1).is_err());
    }

    #[test]
    fn width_rounding() {
        assert_eq!(window_width(10, rate(0.2)), 8);
        assert_eq!(window_width(7, rate(1.0 / 7.0)), 6);
        assert_eq!(window_width(5, rate(0.3)), 4);
        assert_eq!(window_width(1, rate(0.49)), 1);
        for m in 1..200 {
            for a in [0.0, 0.05, 0.1, 0.25, 0.3, 0.45, 0.499] {
                let w = window_width(m, rate(a));
                assert!(w >= 1 && w <= m);
                assert!(w as f64 >= (1.0 - a) * m as f64 - 1e-9);
            }
        }
    }

    #[test]
    fn large_offset_keeps_precision() {
        let base = 1e9;
        let vals: Vec<f64> = [0.0, 1.0, 2.0, 100.0].iter().map(|v| v + base).collect();
        let r = best_window(&vals, 3).unwrap();
        assert_eq!(r.start, 0);
        assert!((r.cost - 2.0).abs() < 1e-6);
        assert!((r.mean - (base + 1.0)).abs() < 1e-6);
    }
}
