//! Brute-force references for the test suites.
//!
//! These recompute every quantity directly (no prefix sums, no iteration) so
//! that agreement with the fast paths is evidence rather than tautology.

use crate::error::{ClusterError, Result};
use crate::window::TIE_TOLERANCE;

/// Largest input accepted by [`brute_subset_window`].
pub const MAX_SUBSET_N: usize = 12;
/// Largest input accepted by [`brute_window`].
pub const MAX_WINDOW_N: usize = 10_000;

fn direct_cost(values: &[f64]) -> f64 {
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    values.iter().map(|v| (v - mean).powi(2)).sum()
}

fn sorted(values: &[f64]) -> Vec<f64> {
    let mut s = values.to_vec();
    s.sort_by(f64::total_cmp);
    s
}

/// Cheapest contiguous window of `w` sorted values by direct evaluation of
/// every window; returns `(cost, start)` with the same tie rule as the fast
/// search.
pub fn brute_window(values: &[f64], w: usize) -> Result<(f64, usize)> {
    let n = values.len();
    if w == 0 || w > n || n > MAX_WINDOW_N {
        return Err(ClusterError::Width { width: w, len: n });
    }
    let s = sorted(values);
    let pivot = s[n / 2];
    let mut best = (f64::INFINITY, 0, f64::INFINITY);
    for start in 0..=n - w {
        let window = &s[start..start + w];
        let cost = direct_cost(window);
        let sq: f64 = window.iter().map(|v| (v - pivot).powi(2)).sum();
        if start == 0 || cost < best.0 - TIE_TOLERANCE * sq.max(best.2) {
            best = (cost, start, sq);
        }
    }
    Ok((best.0, best.1))
}

/// Minimum 1-means cost over all `C(n, w)` subsets of size `w`.
pub fn brute_subset_window(values: &[f64], w: usize) -> Result<f64> {
    let n = values.len();
    if n > MAX_SUBSET_N {
        return Err(ClusterError::Domain(format!("subset enumeration refuses n={n} > {MAX_SUBSET_N}")));
    }
    if w == 0 || w > n {
        return Err(ClusterError::Width { width: w, len: n });
    }
    let mut best = f64::INFINITY;
    let mut subset = Vec::with_capacity(w);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != w {
            continue;
        }
        subset.clear();
        subset.extend((0..n).filter(|i| mask >> i & 1 == 1).map(|i| values[i]));
        best = best.min(direct_cost(&subset));
    }
    Ok(best)
}

/// 1-D median: the middle element, or the midpoint of the middle pair.
pub fn brute_median_1d(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(ClusterError::EmptyInput);
    }
    let s = sorted(values);
    let n = s.len();
    Ok(if n % 2 == 1 { s[n / 2] } else { 0.5 * (s[n / 2 - 1] + s[n / 2]) })
}

/// `sum |v - c|`.
pub fn abs_cost_1d(values: &[f64], c: f64) -> f64 {
    values.iter().map(|v| (v - c).abs()).sum()
}
