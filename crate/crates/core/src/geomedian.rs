//! Geometric median by Weiszfeld iteration.
//!
//! Starts at the coordinate-wise mean and repeats the inverse-distance
//! weighted average step. When the iterate lands on a data point the plain
//! step is undefined, so the Vardi-Zhang modified step is used instead; it
//! also detects when that data point is itself the median.

use serde::{Deserialize, Serialize};

use crate::cost::{dist, sq_dist};
use crate::error::{ClusterError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MedianConfig {
    /// Stop once an iteration improves the cost by less than this fraction.
    pub tol: f64,
    pub max_iter: usize,
    /// Distances below `singularity_eps * scale` count as coincident, where
    /// `scale` is the average distance to the initial mean.
    pub singularity_eps: f64,
}

impl Default for MedianConfig {
    fn default() -> Self {
        Self { tol: 1e-9, max_iter: 1000, singularity_eps: 1e-12 }
    }
}

impl MedianConfig {
    fn validate(&self) -> Result<()> {
        if self.tol.is_nan()
            || self.tol <= 0.0
            || self.max_iter == 0
            || self.singularity_eps.is_nan()
            || self.singularity_eps < 0.0
        {
            return Err(ClusterError::Domain(format!("invalid median config {self:?}")));
        }
        Ok(())
    }
}

/// Result of a traced run; `costs[0]` is the cost at the initial mean.
#[derive(Debug, Clone, PartialEq)]
pub struct MedianTrace {
    pub median: Vec<f64>,
    pub costs: Vec<f64>,
}

fn median_cost(points: &[&[f64]], y: &[f64]) -> f64 {
    points.iter().map(|p| dist(p, y)).sum()
}

/// Geometric median of `points` (all of equal dimension).
pub fn geometric_median<P: AsRef<[f64]>>(points: &[P], config: &MedianConfig) -> Result<Vec<f64>> {
    let refs: Vec<&[f64]> = points.iter().map(AsRef::as_ref).collect();
    weiszfeld(&refs, config, false).map(|t| t.median)
}

/// As [`geometric_median`], also returning the cost after every iteration.
pub fn geometric_median_traced<P: AsRef<[f64]>>(points: &[P], config: &MedianConfig) -> Result<MedianTrace> {
    let refs: Vec<&[f64]> = points.iter().map(AsRef::as_ref).collect();
    weiszfeld(&refs, config, true)
}

pub(crate) fn weiszfeld(points: &[&[f64]], config: &MedianConfig, trace: bool) -> Result<MedianTrace> {
    config.validate()?;
    let first = points.first().ok_or(ClusterError::EmptyInput)?;
    let d = first.len();
    if points.iter().any(|p| p.len() != d) {
        return Err(ClusterError::Shape("points of differing dimension".into()));
    }
    let n = points.len();
    if n == 1 {
        return Ok(MedianTrace { median: first.to_vec(), costs: vec![0.0] });
    }

    let mut y = vec![0.0; d];
    for p in points {
        y.iter_mut().zip(p.iter()).for_each(|(a, v)| *a += v);
    }
    y.iter_mut().for_each(|a| *a /= n as f64);

    let mut cost = median_cost(points, &y);
    let mut costs = if trace { vec![cost] } else { Vec::new() };
    let scale = cost / n as f64;
    if scale == 0.0 {
        return Ok(MedianTrace { median: y, costs });
    }
    let eps = config.singularity_eps * scale;

    let mut weighted = vec![0.0; d];
    let mut pull = vec![0.0; d];
    let mut next = vec![0.0; d];
    for _ in 0..config.max_iter {
        weighted.iter_mut().for_each(|v| *v = 0.0);
        pull.iter_mut().for_each(|v| *v = 0.0);
        let mut total_weight = 0.0;
        let mut coincident = 0usize;
        for p in points {
            let r = dist(p, &y);
            if r <= eps {
                coincident += 1;
                continue;
            }
            let w = 1.0 / r;
            total_weight += w;
            for c in 0..d {
                weighted[c] += w * p[c];
                pull[c] += w * (p[c] - y[c]);
            }
        }
        if total_weight == 0.0 {
            break;
        }

        if coincident == 0 {
            for c in 0..d {
                next[c] = weighted[c] / total_weight;
            }
        } else {
            // Vardi-Zhang: the data point at y is optimal when the pull of the
            // remaining points does not exceed its multiplicity.
            let r = pull.iter().map(|v| v * v).sum::<f64>().sqrt();
            let eta = coincident as f64;
            if r <= eta {
                break;
            }
            let keep = eta / r;
            for c in 0..d {
                next[c] = (1.0 - keep) * weighted[c] / total_weight + keep * y[c];
            }
        }

        let next_cost = median_cost(points, &next);
        if next_cost.is_nan() || next_cost > cost {
            break;
        }
        let improvement = cost - next_cost;
        std::mem::swap(&mut y, &mut next);
        cost = next_cost;
        if trace {
            costs.push(cost);
        }
        if improvement < config.tol * cost {
            break;
        }
    }

    // Convergence onto a data point is only linear; snap when the nearest
    // data point is already at least as good.
    let nearest = points.iter().min_by(|a, b| sq_dist(a, &y).total_cmp(&sq_dist(b, &y))).expect("nonempty");
    let snapped = median_cost(points, nearest);
    if snapped < cost {
        y = nearest.to_vec();
        if trace {
            costs.push(snapped);
        }
    }
    Ok(MedianTrace { median: y, costs })
}
