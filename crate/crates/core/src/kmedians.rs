//! Randomized learning-augmented k-medians.
//!
//! For every predicted cluster, each round samples an anchor point uniformly,
//! discards the `ceil(alpha * m_i)` members farthest from it, and takes the
//! geometric median of the rest. The candidate whose clipped set is cheapest
//! around its own median wins.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cost::{dist, sq_dist};
use crate::error::{ClusterError, Result};
use crate::geomedian::{weiszfeld, MedianConfig};
use crate::rng::substream;
use crate::types::{CenterSet, Dataset, ErrorRate, Labeling};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KMediansConfig {
    pub alpha: ErrorRate,
    /// Failure probability used to size the number of rounds.
    pub delta: f64,
    /// Fixed round count; `None` derives it from `alpha`, `k` and `delta`.
    pub rounds_override: Option<usize>,
    pub seed: u64,
    pub median: MedianConfig,
}

impl KMediansConfig {
    pub fn new(alpha: ErrorRate, seed: u64) -> Self {
        Self { alpha, delta: 0.1, rounds_override: None, seed, median: MedianConfig::default() }
    }

    pub fn with_rounds(mut self, rounds: usize) -> Self {
        self.rounds_override = Some(rounds);
        self
    }

    pub fn with_delta(mut self, delta: f64) -> Self {
        self.delta = delta;
        self
    }

    pub fn rounds_for(&self, k: usize) -> Result<usize> {
        match self.rounds_override {
            Some(0) => Err(ClusterError::Domain("rounds must be positive".into())),
            Some(r) => Ok(r),
            None => rounds(self.alpha, k, self.delta),
        }
    }
}

/// `ceil(2 / (1 - 2 alpha) * ln(2k / delta))`, at least 1.
pub fn rounds(alpha: ErrorRate, k: usize, delta: f64) -> Result<usize> {
    if k == 0 {
        return Err(ClusterError::Domain("k must be at least 1".into()));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(ClusterError::Domain(format!("delta {delta} must lie in (0, 1)")));
    }
    let r = 2.0 / (1.0 - 2.0 * alpha.value()) * (2.0 * k as f64 / delta).ln();
    Ok((r.ceil() as usize).max(1))
}

/// Number of points clipped per round: `ceil(alpha * m_i)`, capped at `m_i - 1`.
pub fn clip_count(cluster_size: usize, alpha: ErrorRate) -> usize {
    let c = (alpha.value() * cluster_size as f64).ceil() as usize;
    c.min(cluster_size.saturating_sub(1))
}

/// One round's outcome for a cluster.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    /// Index into the dataset of the sampled anchor.
    pub anchor: usize,
    pub median: Vec<f64>,
    /// Cost of the clipped set around `median`.
    pub cost: f64,
    pub survivors: usize,
}

/// Keeps the members nearest to `anchor`, dropping `clip` of them. Among
/// equidistant points the larger index is dropped first.
pub fn clip_members(data: &Dataset, members: &[usize], anchor: usize, clip: usize) -> Vec<usize> {
    let x = data.row(anchor);
    let mut ranked: Vec<(f64, usize)> = members.iter().map(|&p| (sq_dist(data.row(p), x), p)).collect();
    ranked.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    ranked.truncate(members.len() - clip);
    ranked.into_iter().map(|(_, p)| p).collect()
}

/// Runs a single round with the given anchor.
pub fn candidate_for_anchor(
    data: &Dataset,
    members: &[usize],
    anchor: usize,
    alpha: ErrorRate,
    median: &MedianConfig,
) -> Result<Candidate> {
    let survivors = clip_members(data, members, anchor, clip_count(members.len(), alpha));
    let points: Vec<&[f64]> = survivors.iter().map(|&p| data.row(p)).collect();
    let center = weiszfeld(&points, median, false)?.median;
    let cost = points.iter().map(|p| dist(p, &center)).sum();
    Ok(Candidate { anchor, median: center, cost, survivors: survivors.len() })
}

/// Anchor drawn in `round` for `cluster`: uniform over `members`, from a
/// substream that depends only on `(seed, cluster, round)`.
pub fn anchor_for(seed: u64, cluster: usize, round: usize, members: &[usize]) -> usize {
    let mut rng = substream(seed, cluster as u64, round as u64);
    members[rng.random_range(0..members.len())]
}

/// All candidates for cluster `cluster`, in round order.
pub fn cluster_candidates(
    data: &Dataset,
    members: &[usize],
    cluster: usize,
    rounds: usize,
    config: &KMediansConfig,
) -> Result<Vec<Candidate>> {
    if members.is_empty() {
        return Err(ClusterError::EmptyCluster { cluster });
    }
    (0..rounds)
        .into_par_iter()
        .map(|round| {
            let anchor = anchor_for(config.seed, cluster, round, members);
            candidate_for_anchor(data, members, anchor, config.alpha, &config.median)
        })
        .collect()
}

/// Centers from a predicted labeling with error rate `config.alpha`.
pub fn la_kmedians(data: &Dataset, labels: &Labeling, config: &KMediansConfig) -> Result<CenterSet> {
    labels.validate_for(data)?;
    let k = labels.k();
    let rounds = config.rounds_for(k)?;
    let members = labels.members();

    let centers = members
        .par_iter()
        .enumerate()
        .map(|(i, m)| {
            let candidates = cluster_candidates(data, m, i, rounds, config)?;
            let best = candidates
                .into_iter()
                .reduce(|best, c| if c.cost < best.cost { c } else { best })
                .expect("at least one round");
            Ok(best.median)
        })
        .collect::<Result<Vec<_>>>()?;

    CenterSet::new(centers.concat(), k, data.dim())
}

/// `1 + alpha * (7 + 10 alpha - 10 alpha^2) / ((1 - alpha)(1 - 2 alpha))`,
/// the approximation factor of [`la_kmedians`] (with probability `1 - delta`).
pub fn factor_kmedians(alpha: f64) -> Result<f64> {
    let a = ErrorRate::new(alpha).map_err(|_| ClusterError::Domain(format!("factor undefined for alpha={alpha}")))?;
    let a = a.value();
    Ok(1.0 + a * (7.0 + 10.0 * a - 10.0 * a * a) / ((1.0 - a) * (1.0 - 2.0 * a)))
}
