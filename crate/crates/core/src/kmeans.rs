//! Deterministic learning-augmented k-means.

use rayon::prelude::*;

use crate::error::{ClusterError, Result};
use crate::types::{CenterSet, Dataset, ErrorRate, Labeling};
use crate::window::{best_window, window_width};

/// Centers from a predicted labeling with error rate `alpha`.
///
/// Each coordinate of center `i` is the mean of the cheapest window of
/// `window_width(m_i, alpha)` consecutive values in the sorted projection of
/// predicted cluster `i` onto that axis. The `k * d` window searches are
/// independent and run in parallel; the output does not depend on the
/// thread count.
pub fn la_kmeans(data: &Dataset, labels: &Labeling, alpha: ErrorRate) -> Result<CenterSet> {
    labels.validate_for(data)?;
    let (k, d) = (labels.k(), data.dim());
    let members = labels.members();

    let coords = (0..k * d)
        .into_par_iter()
        .map(|task| {
            let (i, j) = (task / d, task % d);
            let projection: Vec<f64> = members[i].iter().map(|&p| data.row(p)[j]).collect();
            best_window(&projection, window_width(projection.len(), alpha)).map(|w| w.mean)
        })
        .collect::<Result<Vec<f64>>>()?;

    CenterSet::new(coords, k, d)
}

/// Approximation factor `1 + alpha/(1-alpha) + 4 alpha/((1-2 alpha)(1-alpha))`
/// guaranteed by [`la_kmeans`].
pub fn factor_kmeans(alpha: f64) -> Result<f64> {
    let a = ErrorRate::new(alpha).map_err(|_| ClusterError::Domain(format!("factor undefined for alpha={alpha}")))?;
    let a = a.value();
    Ok(1.0 + a / (1.0 - a) + 4.0 * a / ((1.0 - 2.0 * a) * (1.0 - a)))
}
