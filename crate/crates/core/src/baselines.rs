//! Comparison methods and predictor constructors: k-means++ seeding, Lloyd
//! iterations, alternating k-medoids, naive per-label centers and the
//! random-sampling baseline.

use rand::seq::index::sample;
use rand::Rng;

use crate::cost::{cluster_mean, dist, nearest, sq_dist, Objective};
use crate::error::{ClusterError, Result};
use crate::geomedian::{weiszfeld, MedianConfig};
use crate::rng::{seeded, substream};
use crate::types::{CenterSet, Dataset, Labeling};

pub const LLOYD_MAX_ITER: usize = 300;
pub const KMEDOIDS_MAX_ITER: usize = 100;
pub const DEFAULT_TOL: f64 = 1e-9;

/// Output of an iterative baseline, with the cost after every assignment.
#[derive(Debug, Clone, PartialEq)]
pub struct Fitted {
    pub centers: CenterSet,
    pub labels: Labeling,
    pub costs: Vec<f64>,
}

fn check_k(data: &Dataset, k: usize) -> Result<()> {
    if k == 0 || k > data.len() {
        return Err(ClusterError::Domain(format!("k={k} must lie in 1..={}", data.len())));
    }
    Ok(())
}

/// Row indices chosen by D^2 sampling.
pub fn kmeanspp_indices(data: &Dataset, k: usize, seed: u64) -> Result<Vec<usize>> {
    check_k(data, k)?;
    let mut rng = seeded(seed);
    let m = data.len();
    let mut chosen = vec![rng.random_range(0..m)];
    let mut weights: Vec<f64> = data.rows().map(|p| sq_dist(p, data.row(chosen[0]))).collect();
    while chosen.len() < k {
        let total: f64 = weights.iter().sum();
        let next = if total > 0.0 {
            let target = rng.random::<f64>() * total;
            let mut acc = 0.0;
            let mut pick = None;
            for (i, &w) in weights.iter().enumerate() {
                acc += w;
                if w > 0.0 && acc >= target {
                    pick = Some(i);
                    break;
                }
            }
            // round-off can leave target just above the final sum
            pick.unwrap_or_else(|| weights.iter().rposition(|&w| w > 0.0).expect("positive total"))
        } else {
            // every remaining point duplicates a chosen one
            let free: Vec<usize> = (0..m).filter(|i| !chosen.contains(i)).collect();
            free[rng.random_range(0..free.len())]
        };
        chosen.push(next);
        for (w, p) in weights.iter_mut().zip(data.rows()) {
            *w = w.min(sq_dist(p, data.row(next)));
        }
    }
    Ok(chosen)
}

/// k-means++ seeding.
pub fn kmeanspp_init(data: &Dataset, k: usize, seed: u64) -> Result<CenterSet> {
    let idx = kmeanspp_indices(data, k, seed)?;
    let rows: Vec<&[f64]> = idx.iter().map(|&i| data.row(i)).collect();
    CenterSet::from_rows(&rows)
}

fn assign(data: &Dataset, centers: &CenterSet, objective: Objective) -> (Vec<usize>, f64) {
    let mut cost = 0.0;
    let labels = data
        .rows()
        .map(|p| {
            let (i, c) = nearest(p, centers, objective);
            cost += c;
            i
        })
        .collect();
    (labels, cost)
}

/// Lloyd iterations from `init`. Empty clusters are re-seeded with the point
/// farthest from its assigned center.
pub fn lloyd(data: &Dataset, init: &CenterSet, max_iter: usize, tol: f64) -> Result<Fitted> {
    if init.dim() != data.dim() {
        return Err(ClusterError::Shape(format!(
            "centers have dimension {}, points have dimension {}",
            init.dim(),
            data.dim()
        )));
    }
    let (k, d) = (init.k(), data.dim());
    let mut centers = init.clone();
    let (mut labels, mut cost) = assign(data, &centers, Objective::Means);
    let mut costs = vec![cost];

    for _ in 0..max_iter {
        let mut sums = vec![0.0; k * d];
        let mut counts = vec![0usize; k];
        for (p, &l) in data.rows().zip(&labels) {
            counts[l] += 1;
            for (s, v) in sums[l * d..(l + 1) * d].iter_mut().zip(p) {
                *s += v;
            }
        }
        let mut taken = Vec::new();
        for c in 0..k {
            if counts[c] == 0 {
                let far = (0..data.len())
                    .filter(|i| !taken.contains(i))
                    .max_by(|&a, &b| {
                        let da = sq_dist(data.row(a), centers.center(labels[a]));
                        let db = sq_dist(data.row(b), centers.center(labels[b]));
                        da.total_cmp(&db).then(b.cmp(&a))
                    })
                    .expect("k <= m");
                taken.push(far);
                sums[c * d..(c + 1) * d].copy_from_slice(data.row(far));
                counts[c] = 1;
            } else {
                let n = counts[c] as f64;
                sums[c * d..(c + 1) * d].iter_mut().for_each(|s| *s /= n);
            }
        }
        let updated = CenterSet::new(sums, k, d)?;
        let (next_labels, next_cost) = assign(data, &updated, Objective::Means);
        // A re-seed can raise the cost; only accept non-increasing steps.
        if next_cost > cost {
            break;
        }
        let unchanged = next_labels == labels;
        let improvement = cost - next_cost;
        centers = updated;
        labels = next_labels;
        cost = next_cost;
        costs.push(cost);
        if unchanged || improvement <= tol * cost {
            break;
        }
    }

    Ok(Fitted { centers, labels: Labeling::new(labels, k)?, costs })
}

/// Index of the member with the smallest summed distance to the others.
fn medoid_of(data: &Dataset, members: &[usize]) -> usize {
    let mut best = (members[0], f64::INFINITY);
    for &c in members {
        let s: f64 = members.iter().map(|&p| dist(data.row(p), data.row(c))).sum();
        if s < best.1 {
            best = (c, s);
        }
    }
    best.0
}

/// Alternating k-medoids seeded by D^2 sampling.
pub fn kmedoids_alternating(data: &Dataset, k: usize, seed: u64, max_iter: usize) -> Result<Fitted> {
    let mut medoids = kmeanspp_indices(data, k, seed)?;
    let rows = |meds: &[usize]| {
        let rows: Vec<&[f64]> = meds.iter().map(|&i| data.row(i)).collect();
        CenterSet::from_rows(&rows)
    };
    let mut centers = rows(&medoids)?;
    let (mut labels, mut cost) = assign(data, &centers, Objective::Medians);
    let mut costs = vec![cost];

    for _ in 0..max_iter {
        let mut members = vec![Vec::new(); k];
        for (i, &l) in labels.iter().enumerate() {
            members[l].push(i);
        }
        let mut changed = false;
        for (c, m) in members.iter().enumerate() {
            if m.is_empty() {
                continue;
            }
            let best = medoid_of(data, m);
            if best != medoids[c] {
                medoids[c] = best;
                changed = true;
            }
        }
        if !changed {
            break;
        }
        centers = rows(&medoids)?;
        let (next_labels, next_cost) = assign(data, &centers, Objective::Medians);
        labels = next_labels;
        cost = next_cost;
        costs.push(cost);
    }

    Ok(Fitted { centers, labels: Labeling::new(labels, k)?, costs })
}

fn center_of(data: &Dataset, members: &[usize], objective: Objective, median: &MedianConfig) -> Result<Vec<f64>> {
    match objective {
        Objective::Means => cluster_mean(data, members),
        Objective::Medians => {
            let points: Vec<&[f64]> = members.iter().map(|&p| data.row(p)).collect();
            Ok(weiszfeld(&points, median, false)?.median)
        }
    }
}

/// Mean or geometric median of each predicted cluster.
pub fn predictor_naive(data: &Dataset, labels: &Labeling, objective: Objective) -> Result<CenterSet> {
    labels.validate_for(data)?;
    let median = MedianConfig::default();
    let mut values = Vec::with_capacity(labels.k() * data.dim());
    for m in labels.members() {
        values.extend(center_of(data, &m, objective, &median)?);
    }
    CenterSet::new(values, labels.k(), data.dim())
}

/// 15 evenly spaced fractions from 1% to 50%.
pub fn default_q_grid() -> Vec<f64> {
    (0..15).map(|i| 0.01 + 0.49 * i as f64 / 14.0).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SamplingResult {
    pub centers: CenterSet,
    pub best_q: f64,
    pub cost: f64,
}

/// For every `q`, estimates each cluster's center from a uniform sample of
/// `max(1, floor(q * m_i))` members and keeps the `q` with the lowest cost
/// on the whole dataset.
pub fn sampling_baseline(
    data: &Dataset,
    labels: &Labeling,
    objective: Objective,
    q_grid: &[f64],
    seed: u64,
) -> Result<SamplingResult> {
    labels.validate_for(data)?;
    if q_grid.is_empty() {
        return Err(ClusterError::Domain("empty q grid".into()));
    }
    if let Some(q) = q_grid.iter().find(|q| !(**q > 0.0 && **q <= 1.0)) {
        return Err(ClusterError::Domain(format!("sampling fraction {q} must lie in (0, 1]")));
    }
    let median = MedianConfig::default();
    let members = labels.members();
    let mut best: Option<SamplingResult> = None;
    for (qi, &q) in q_grid.iter().enumerate() {
        let mut values = Vec::with_capacity(labels.k() * data.dim());
        for (c, m) in members.iter().enumerate() {
            let size = ((q * m.len() as f64).floor() as usize).clamp(1, m.len());
            let mut rng = substream(seed, qi as u64, c as u64);
            let mut picked: Vec<usize> = sample(&mut rng, m.len(), size).into_iter().map(|i| m[i]).collect();
            picked.sort_unstable();
            values.extend(center_of(data, &picked, objective, &median)?);
        }
        let centers = CenterSet::new(values, labels.k(), data.dim())?;
        let cost = objective.cost(data, &centers)?;
        if best.as_ref().is_none_or(|b| cost < b.cost) {
            best = Some(SamplingResult { centers, best_q: q, cost });
        }
    }
    Ok(best.expect("nonempty grid"))
}
