//! Distance and cost kernels.

use serde::{Deserialize, Serialize};

use crate::error::{ClusterError, Result};
use crate::types::{CenterSet, Dataset};

/// Which clustering objective a routine optimizes or is scored under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    /// Sum of squared Euclidean distances.
    Means,
    /// Sum of Euclidean distances.
    Medians,
}

impl Objective {
    /// Point-to-center contribution under this objective.
    #[inline]
    pub fn point_cost(self, a: &[f64], b: &[f64]) -> f64 {
        match self {
            Objective::Means => sq_dist(a, b),
            Objective::Medians => dist(a, b),
        }
    }

    pub fn cost(self, data: &Dataset, centers: &CenterSet) -> Result<f64> {
        match self {
            Objective::Means => cost_kmeans(data, centers),
            Objective::Medians => cost_kmedians(data, centers),
        }
    }
}

impl std::fmt::Display for Objective {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Objective::Means => "means",
            Objective::Medians => "medians",
        })
    }
}

impl std::str::FromStr for Objective {
    type Err = ClusterError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "means" => Ok(Objective::Means),
            "medians" => Ok(Objective::Medians),
            other => Err(ClusterError::Domain(format!("unknown objective '{other}'"))),
        }
    }
}

#[inline]
pub fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

#[inline]
pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    sq_dist(a, b).sqrt()
}

fn check_dims(data: &Dataset, centers: &CenterSet) -> Result<()> {
    if data.dim() != centers.dim() {
        return Err(ClusterError::Shape(format!(
            "points have dimension {}, centers have dimension {}",
            data.dim(),
            centers.dim()
        )));
    }
    Ok(())
}

/// Index of the nearest center under `objective` and the point's cost.
/// Ties go to the lowest center index.
#[inline]
pub fn nearest(point: &[f64], centers: &CenterSet, objective: Objective) -> (usize, f64) {
    let mut best = (0, f64::INFINITY);
    for (i, c) in centers.centers().enumerate() {
        let v = objective.point_cost(point, c);
        if v < best.1 {
            best = (i, v);
        }
    }
    best
}

fn min_assign_cost(data: &Dataset, centers: &CenterSet, objective: Objective) -> Result<f64> {
    check_dims(data, centers)?;
    Ok(data.rows().map(|p| nearest(p, centers, objective).1).sum())
}

/// `sum_p min_i ||p - c_i||^2`.
pub fn cost_kmeans(data: &Dataset, centers: &CenterSet) -> Result<f64> {
    min_assign_cost(data, centers, Objective::Means)
}

/// `sum_p min_i ||p - c_i||`.
pub fn cost_kmedians(data: &Dataset, centers: &CenterSet) -> Result<f64> {
    min_assign_cost(data, centers, Objective::Medians)
}

/// Coordinate-wise mean of the rows at `subset`.
pub fn cluster_mean(data: &Dataset, subset: &[usize]) -> Result<Vec<f64>> {
    if subset.is_empty() {
        return Err(ClusterError::EmptyInput);
    }
    let mut mean = vec![0.0; data.dim()];
    for &i in subset {
        if i >= data.len() {
            return Err(ClusterError::Shape(format!("row index {i} out of range for {} rows", data.len())));
        }
        for (acc, v) in mean.iter_mut().zip(data.row(i)) {
            *acc += v;
        }
    }
    let n = subset.len() as f64;
    mean.iter_mut().for_each(|v| *v /= n);
    Ok(mean)
}

/// 1-means cost of `len` reals from their sum and sum of squares:
/// `sumsq - sum^2 / len`, clamped at zero.
#[inline]
pub fn one_means_cost(len: usize, sum: f64, sumsq: f64) -> f64 {
    debug_assert!(len > 0);
    (sumsq - sum * sum / len as f64).max(0.0)
}
