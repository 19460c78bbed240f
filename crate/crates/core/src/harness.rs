//! Experiment harness: planted instances, label corruption, the overlap
//! promise check, algorithm dispatch, the error-rate sweep and repeated
//! trials.

use std::time::Instant;

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::baselines::{
    default_q_grid, kmeanspp_init, kmedoids_alternating, lloyd, predictor_naive, sampling_baseline, DEFAULT_TOL,
    KMEDOIDS_MAX_ITER, LLOYD_MAX_ITER,
};
use crate::cost::{cluster_mean, Objective};
use crate::error::{ClusterError, Result};
use crate::geomedian::{weiszfeld, MedianConfig};
use crate::kmeans::{factor_kmeans, la_kmeans};
use crate::kmedians::{factor_kmedians, la_kmedians, KMediansConfig};
use crate::rng::{seeded, substream};
use crate::types::{CenterSet, Dataset, ErrorRate, Labeling};

/// Parameters of a planted Gaussian instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthConfig {
    /// Number of points in each planted cluster; its length is `k`.
    pub sizes: Vec<usize>,
    pub dim: usize,
    /// Minimum distance between planted centers.
    pub separation: f64,
    /// Per-coordinate standard deviation around each center.
    pub spread: f64,
    pub seed: u64,
}

impl SynthConfig {
    pub fn uniform(k: usize, per_cluster: usize, dim: usize, separation: f64, spread: f64, seed: u64) -> Self {
        Self { sizes: vec![per_cluster; k], dim, separation, spread, seed }
    }
}

/// A dataset with its reference partition and that partition's centers.
#[derive(Debug, Clone, PartialEq)]
pub struct PlantedInstance {
    pub data: Dataset,
    pub truth: Labeling,
    pub ref_centers_means: CenterSet,
    pub ref_centers_medians: CenterSet,
}

impl PlantedInstance {
    /// Computes the per-cluster means and geometric medians of `truth`.
    pub fn from_truth(data: Dataset, truth: Labeling) -> Result<Self> {
        truth.validate_for(&data)?;
        let (k, d) = (truth.k(), data.dim());
        let median = MedianConfig::default();
        let mut means = Vec::with_capacity(k * d);
        let mut medians = Vec::with_capacity(k * d);
        for m in truth.members() {
            means.extend(cluster_mean(&data, &m)?);
            let pts: Vec<&[f64]> = m.iter().map(|&p| data.row(p)).collect();
            medians.extend(weiszfeld(&pts, &median, false)?.median);
        }
        Ok(Self {
            ref_centers_means: CenterSet::new(means, k, d)?,
            ref_centers_medians: CenterSet::new(medians, k, d)?,
            data,
            truth,
        })
    }

    pub fn ref_centers(&self, objective: Objective) -> &CenterSet {
        match objective {
            Objective::Means => &self.ref_centers_means,
            Objective::Medians => &self.ref_centers_medians,
        }
    }

    /// `sum_i cost(P_i*, c_i*)` for the reference centers.
    pub fn reference_cost(&self, objective: Objective) -> Result<f64> {
        cost_vs_truth(&self.data, &self.truth, self.ref_centers(objective), objective)
    }
}

/// Planted centers on an integer grid scaled by `separation`, so any two
/// are at least `separation` apart.
fn grid_center(index: usize, k: usize, dim: usize, separation: f64) -> Vec<f64> {
    let mut base = 1usize;
    while base.checked_pow(dim as u32).is_some_and(|c| c < k) {
        base += 1;
    }
    let mut rest = index;
    (0..dim)
        .map(|_| {
            let digit = rest % base;
            rest /= base;
            digit as f64 * separation
        })
        .collect()
}

/// Gaussian blobs around grid centers; the truth labels are the generating
/// cluster ids and rows are grouped by cluster.
pub fn synth(config: &SynthConfig) -> Result<PlantedInstance> {
    let k = config.sizes.len();
    if k == 0 || config.dim == 0 || config.sizes.contains(&0) {
        return Err(ClusterError::Domain("synth needs k >= 1, dim >= 1 and nonempty clusters".into()));
    }
    if config.separation.is_nan() || config.separation <= 0.0 || !config.spread.is_finite() || config.spread < 0.0 {
        return Err(ClusterError::Domain("separation must be positive and spread nonnegative".into()));
    }
    let mut rng = seeded(config.seed);
    let total: usize = config.sizes.iter().sum();
    let mut values = Vec::with_capacity(total * config.dim);
    let mut assign = Vec::with_capacity(total);
    for (i, &size) in config.sizes.iter().enumerate() {
        let center = grid_center(i, k, config.dim, config.separation);
        for _ in 0..size {
            for c in &center {
                let z: f64 = StandardNormal.sample(&mut rng);
                values.push(c + config.spread * z);
            }
            assign.push(i);
        }
    }
    let data = Dataset::new(values, total, config.dim)?;
    PlantedInstance::from_truth(data, Labeling::new(assign, k)?)
}

/// Moves the `floor(alpha * m_i)` points of each reference cluster nearest to
/// its reference center (mean or geometric median) to a uniformly chosen
/// other cluster.
pub fn corrupt(instance: &PlantedInstance, alpha: ErrorRate, objective: Objective, seed: u64) -> Result<Labeling> {
    let k = instance.truth.k();
    if k < 2 {
        return Err(ClusterError::Domain("corruption needs at least two clusters".into()));
    }
    let centers = instance.ref_centers(objective);
    let mut assign = instance.truth.as_slice().to_vec();
    for (i, members) in instance.truth.members().into_iter().enumerate() {
        let moved = (alpha.value() * members.len() as f64).floor() as usize;
        let mut ranked: Vec<(f64, usize)> =
            members.iter().map(|&p| (crate::cost::sq_dist(instance.data.row(p), centers.center(i)), p)).collect();
        ranked.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let mut rng = substream(seed, 0x636f_7272, i as u64);
        for &(_, p) in &ranked[..moved] {
            let other = rng.random_range(0..k - 1);
            assign[p] = if other >= i { other + 1 } else { other };
        }
    }
    Labeling::new(assign, k)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PromiseReport {
    pub holds: bool,
    /// `|P_i ∩ P_i*| / max(|P_i|, |P_i*|)` per cluster.
    pub overlap: Vec<f64>,
}

/// Checks `|P_i ∩ P_i*| >= (1 - alpha) max(|P_i|, |P_i*|)` for every cluster.
pub fn check_promise(labels: &Labeling, truth: &Labeling, alpha: f64) -> Result<PromiseReport> {
    if labels.len() != truth.len() || labels.k() != truth.k() {
        return Err(ClusterError::Shape(format!(
            "labeling ({} points, k={}) does not match truth ({} points, k={})",
            labels.len(),
            labels.k(),
            truth.len(),
            truth.k()
        )));
    }
    let k = truth.k();
    let mut common = vec![0usize; k];
    for (a, b) in labels.as_slice().iter().zip(truth.as_slice()) {
        if a == b {
            common[*a] += 1;
        }
    }
    let (pred, real) = (labels.sizes(), truth.sizes());
    let mut holds = true;
    let overlap = (0..k)
        .map(|i| {
            let larger = pred[i].max(real[i]);
            if larger == 0 {
                return 1.0;
            }
            // tiny slack so exact boundary cases survive (1 - alpha) round-off
            if (common[i] as f64) < (1.0 - alpha) * larger as f64 - 1e-9 {
                holds = false;
            }
            common[i] as f64 / larger as f64
        })
        .collect();
    Ok(PromiseReport { holds, overlap })
}

/// Smallest error rate at which `labels` satisfies the overlap promise
/// against `truth`: `max_i (1 - |P_i ∩ P_i*| / max(|P_i|, |P_i*|))`.
///
/// Corruption moves exactly `floor(alpha * m_i)` points out of each cluster,
/// so any in-flow pushes a cluster past the promise at the corruption rate
/// itself; this is the rate the resulting labeling actually honours.
pub fn effective_error_rate(labels: &Labeling, truth: &Labeling) -> Result<f64> {
    let report = check_promise(labels, truth, 0.0)?;
    Ok(report.overlap.iter().map(|o| 1.0 - o).fold(0.0, f64::max))
}

/// `sum_i cost(P_i*, {c_i})`: every reference cluster scored against the
/// center with the same index.
pub fn cost_vs_truth(data: &Dataset, truth: &Labeling, centers: &CenterSet, objective: Objective) -> Result<f64> {
    if truth.len() != data.len() || truth.k() != centers.k() || data.dim() != centers.dim() {
        return Err(ClusterError::Shape("truth, data and centers disagree in shape".into()));
    }
    Ok(data.rows().zip(truth.as_slice()).map(|(p, &l)| objective.point_cost(p, centers.center(l))).sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "la-kmeans")]
    LaKmeans,
    #[serde(rename = "la-kmedians")]
    LaKmedians,
    #[serde(rename = "lloyd")]
    Lloyd,
    #[serde(rename = "kmedoids")]
    Kmedoids,
    #[serde(rename = "predictor-naive")]
    PredictorNaive,
    #[serde(rename = "sampling")]
    Sampling,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::LaKmeans,
        Algorithm::LaKmedians,
        Algorithm::Lloyd,
        Algorithm::Kmedoids,
        Algorithm::PredictorNaive,
        Algorithm::Sampling,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::LaKmeans => "la-kmeans",
            Algorithm::LaKmedians => "la-kmedians",
            Algorithm::Lloyd => "lloyd",
            Algorithm::Kmedoids => "kmedoids",
            Algorithm::PredictorNaive => "predictor-naive",
            Algorithm::Sampling => "sampling",
        }
    }

    /// Whether center `i` belongs to predicted cluster `i`. Lloyd and
    /// k-medoids ignore the labels, so their centers have no such alignment.
    pub fn label_aligned(self) -> bool {
        !matches!(self, Algorithm::Lloyd | Algorithm::Kmedoids)
    }

    /// The objective an algorithm is scored under; the generic baselines use
    /// the requested one.
    pub fn objective(self, requested: Objective) -> Objective {
        match self {
            Algorithm::LaKmeans | Algorithm::Lloyd => Objective::Means,
            Algorithm::LaKmedians | Algorithm::Kmedoids => Objective::Medians,
            Algorithm::PredictorNaive | Algorithm::Sampling => requested,
        }
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Algorithm {
    type Err = ClusterError;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| ClusterError::Domain(format!("unknown algorithm '{s}'")))
    }
}

/// Everything needed to run one algorithm on one labeled dataset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSpec {
    pub algo: Algorithm,
    pub alpha: ErrorRate,
    /// Objective for the generic baselines (`predictor-naive`, `sampling`).
    pub objective: Objective,
    pub delta: f64,
    /// k-medians rounds; `None` derives the count from `delta`.
    pub rounds: Option<usize>,
    pub seed: u64,
    pub q_grid: Vec<f64>,
}

impl RunSpec {
    /// Experiment defaults: one k-medians round, `delta = 0.1` and the
    /// 15-point sampling grid.
    pub fn new(algo: Algorithm, alpha: ErrorRate, seed: u64) -> Self {
        Self {
            algo,
            alpha,
            objective: algo.objective(Objective::Means),
            delta: 0.1,
            rounds: Some(1),
            seed,
            q_grid: default_q_grid(),
        }
    }

    pub fn scored_objective(&self) -> Objective {
        self.algo.objective(self.objective)
    }

    fn kmedians_config(&self) -> KMediansConfig {
        KMediansConfig {
            alpha: self.alpha,
            delta: self.delta,
            rounds_override: self.rounds,
            seed: self.seed,
            median: MedianConfig::default(),
        }
    }
}

/// Runs `spec.algo`; `labels` supplies the predicted partition (and `k` for
/// the unsupervised baselines).
pub fn run_algorithm(data: &Dataset, labels: &Labeling, spec: &RunSpec) -> Result<CenterSet> {
    let k = labels.k();
    match spec.algo {
        Algorithm::LaKmeans => la_kmeans(data, labels, spec.alpha),
        Algorithm::LaKmedians => la_kmedians(data, labels, &spec.kmedians_config()),
        Algorithm::Lloyd => {
            let init = kmeanspp_init(data, k, spec.seed)?;
            Ok(lloyd(data, &init, LLOYD_MAX_ITER, DEFAULT_TOL)?.centers)
        }
        Algorithm::Kmedoids => Ok(kmedoids_alternating(data, k, spec.seed, KMEDOIDS_MAX_ITER)?.centers),
        Algorithm::PredictorNaive => predictor_naive(data, labels, spec.objective),
        Algorithm::Sampling => Ok(sampling_baseline(data, labels, spec.objective, &spec.q_grid, spec.seed)?.centers),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub algo: Algorithm,
    pub alpha: f64,
    pub k: usize,
    pub seed: u64,
    /// `sum_i cost(P_i*, c_i)`; present when a reference partition is known
    /// and the algorithm's centers are indexed by predicted cluster.
    pub cost_vs_truth: Option<f64>,
    /// `cost(P, C)` with every point assigned to its nearest center.
    pub cost_min_assign: f64,
    /// Guarantee factor of the learning-augmented method for the scored
    /// objective at this error rate.
    pub factor_bound: f64,
    #[serde(skip)]
    pub centers: CenterSet,
    pub wall_ms: f64,
    pub config: RunSpec,
}

/// Runs and scores one configuration.
pub fn run(data: &Dataset, labels: &Labeling, truth: Option<&Labeling>, spec: &RunSpec) -> Result<ExperimentReport> {
    let started = Instant::now();
    let centers = run_algorithm(data, labels, spec)?;
    let wall_ms = started.elapsed().as_secs_f64() * 1e3;

    let objective = spec.scored_objective();
    let cost_vs_truth =
        truth.filter(|_| spec.algo.label_aligned()).map(|t| cost_vs_truth(data, t, &centers, objective)).transpose()?;
    let factor_bound = match objective {
        Objective::Means => factor_kmeans(spec.alpha.value())?,
        Objective::Medians => factor_kmedians(spec.alpha.value())?,
    };
    Ok(ExperimentReport {
        algo: spec.algo,
        alpha: spec.alpha.value(),
        k: labels.k(),
        seed: spec.seed,
        cost_vs_truth,
        cost_min_assign: objective.cost(data, &centers)?,
        factor_bound,
        centers,
        wall_ms,
        config: spec.clone(),
    })
}

/// `grid_size` evenly spaced error-rate guesses over `[0.1, 0.5]`, with any
/// value at or above 1/2 replaced by 0.499.
pub fn alpha_grid(grid_size: usize) -> Vec<f64> {
    match grid_size {
        0 => Vec::new(),
        1 => vec![0.1],
        n => (0..n)
            .map(|i| {
                let a = 0.1 + 0.4 * i as f64 / (n - 1) as f64;
                if a >= 0.5 {
                    0.499
                } else {
                    a
                }
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub best: ExperimentReport,
    pub table: Vec<ExperimentReport>,
}

/// Runs `spec` at every guess from [`alpha_grid`] and keeps the run with the
/// lowest `cost_min_assign` (earliest on ties).
pub fn alpha_sweep(
    data: &Dataset,
    labels: &Labeling,
    truth: Option<&Labeling>,
    spec: &RunSpec,
    grid_size: usize,
) -> Result<SweepResult> {
    if grid_size == 0 {
        return Err(ClusterError::Domain("sweep grid must have at least one point".into()));
    }
    let table = alpha_grid(grid_size)
        .into_iter()
        .map(|a| {
            let spec = RunSpec { alpha: ErrorRate::new(a)?, ..spec.clone() };
            run(data, labels, truth, &spec)
        })
        .collect::<Result<Vec<_>>>()?;
    let best = table
        .iter()
        .reduce(|best, r| if r.cost_min_assign < best.cost_min_assign { r } else { best })
        .expect("nonempty grid")
        .clone();
    Ok(SweepResult { best, table })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialSummary {
    pub algo: Algorithm,
    pub runs: usize,
    pub mean: f64,
    /// Sample standard deviation; zero for a single run.
    pub std_dev: f64,
    pub costs: Vec<f64>,
}

/// Mean and sample standard deviation (Welford), exact for constant input.
pub fn mean_std(values: &[f64]) -> (f64, f64) {
    let (mut mean, mut m2) = (0.0, 0.0);
    for (i, &v) in values.iter().enumerate() {
        let delta = v - mean;
        mean += delta / (i + 1) as f64;
        m2 += delta * (v - mean);
    }
    let std = if values.len() > 1 { (m2 / (values.len() - 1) as f64).sqrt() } else { 0.0 };
    (mean, std)
}

/// Repeats `spec` with seeds `seed, seed + 1, ...` on fixed data and labels.
/// Each run is scored by `cost_vs_truth` when `truth` is given and by
/// `cost_min_assign` otherwise.
pub fn run_trials(
    data: &Dataset,
    labels: &Labeling,
    truth: Option<&Labeling>,
    spec: &RunSpec,
    trials: usize,
) -> Result<TrialSummary> {
    if trials == 0 {
        return Err(ClusterError::Domain("at least one trial is required".into()));
    }
    let costs = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let spec = RunSpec { seed: spec.seed.wrapping_add(t), ..spec.clone() };
            let r = run(data, labels, truth, &spec)?;
            Ok(r.cost_vs_truth.unwrap_or(r.cost_min_assign))
        })
        .collect::<Result<Vec<f64>>>()?;
    let (mean, std_dev) = mean_std(&costs);
    Ok(TrialSummary { algo: spec.algo, runs: trials, mean, std_dev, costs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rate(a: f64) -> ErrorRate {
        ErrorRate::new(a).unwrap()
    }

    #[test]
    fn grid_centers_are_separated() {
        for (k, d) in [(5, 1), (5, 2), (10, 3), (2, 4)] {
            let cs: Vec<Vec<f64>> = (0..k).map(|i| grid_center(i, k, d, 7.0)).collect();
            for a in 0..k {
                for b in 0..a {
                    assert!(crate::cost::dist(&cs[a], &cs[b]) >= 7.0 - 1e-12);
                }
            }
        }
    }

    #[test]
    fn zero_spread_collapses() {
        let inst = synth(&SynthConfig::uniform(3, 5, 2, 10.0, 0.0, 1)).unwrap();
        for (p, &l) in inst.data.rows().zip(inst.truth.as_slice()) {
            assert_eq!(p, inst.ref_centers_means.center(l));
            assert_eq!(p, inst.ref_centers_medians.center(l));
        }
        let c = la_kmeans(&inst.data, &inst.truth, ErrorRate::ZERO).unwrap();
        assert_eq!(c, inst.ref_centers_means);
    }

    #[test]
    fn synth_single_cluster_and_seed() {
        let inst = synth(&SynthConfig::uniform(1, 9, 3, 1.0, 1.0, 4)).unwrap();
        assert!(inst.truth.as_slice().iter().all(|&l| l == 0));
        assert_eq!(inst, synth(&SynthConfig::uniform(1, 9, 3, 1.0, 1.0, 4)).unwrap());
        assert!(synth(&SynthConfig::uniform(0, 9, 3, 1.0, 1.0, 4)).is_err());
        assert!(synth(&SynthConfig::uniform(2, 9, 3, 0.0, 1.0, 4)).is_err());
    }

    #[test]
    fn corruption_counts() {
        let inst = synth(&SynthConfig::uniform(3, 10, 2, 20.0, 1.0, 8)).unwrap();
        assert_eq!(corrupt(&inst, ErrorRate::ZERO, Objective::Means, 1).unwrap(), inst.truth);
        let bad = corrupt(&inst, rate(0.2), Objective::Means, 1).unwrap();
        assert_eq!(bad.len(), inst.truth.len());
        for members in inst.truth.members() {
            let moved = members.iter().filter(|&&p| bad.get(p) != inst.truth.get(p)).count();
            assert_eq!(moved, 2);
        }
        let single = synth(&SynthConfig::uniform(1, 10, 2, 20.0, 1.0, 8)).unwrap();
        assert!(corrupt(&single, rate(0.2), Objective::Means, 1).is_err());
    }

    #[test]
    fn corruption_targets_nearest_points() {
        let data = Dataset::from_values(&[0.0, 1.0, 2.0, 3.0, 4.0, 100.0, 101.0, 102.0, 103.0, 104.0]).unwrap();
        let truth = Labeling::new(vec![0, 0, 0, 0, 0, 1, 1, 1, 1, 1], 2).unwrap();
        let inst = PlantedInstance::from_truth(data, truth).unwrap();
        let bad = corrupt(&inst, rate(0.2), Objective::Means, 3).unwrap();
        // the mean points (2 and 102) move to the other cluster
        assert_eq!(bad.as_slice(), &[0, 0, 1, 0, 0, 1, 1, 0, 1, 1]);
    }

    #[test]
    fn promise_examples() {
        let truth = Labeling::new([vec![0; 10], vec![1; 10]].concat(), 2).unwrap();
        assert!(check_promise(&truth, &truth, 0.0).unwrap().holds);
        let mut swapped = truth.as_slice().to_vec();
        swapped[..6].iter_mut().for_each(|l| *l = 1);
        let swapped = Labeling::new(swapped, 2).unwrap();
        let r = check_promise(&swapped, &truth, 0.3).unwrap();
        assert!(!r.holds);
        assert!((r.overlap[0] - 0.4).abs() < 1e-12);

        let flipped = Labeling::new([vec![1; 10], vec![1; 10]].concat(), 2).unwrap();
        assert!(!check_promise(&flipped, &truth, 0.4).unwrap().holds);
        let short = Labeling::new(vec![0; 5], 2).unwrap();
        assert!(check_promise(&short, &truth, 0.1).is_err());
    }

    #[test]
    fn promise_boundary_is_inclusive() {
        let truth = Labeling::new([vec![0; 10], vec![1; 10]].concat(), 2).unwrap();
        let mut moved = truth.as_slice().to_vec();
        moved[0] = 1;
        moved[10] = 0;
        let moved = Labeling::new(moved, 2).unwrap();
        assert!(check_promise(&moved, &truth, 0.1).unwrap().holds);
        assert!(!check_promise(&moved, &truth, 0.05).unwrap().holds);
    }

    #[test]
    fn effective_rate_satisfies_promise() {
        let inst = synth(&SynthConfig::uniform(4, 40, 2, 30.0, 1.0, 12)).unwrap();
        let bad = corrupt(&inst, rate(0.2), Objective::Means, 12).unwrap();
        let eff = effective_error_rate(&bad, &inst.truth).unwrap();
        assert!(eff >= 0.2 - 1e-12);
        assert!(check_promise(&bad, &inst.truth, eff).unwrap().holds);
        assert!(!check_promise(&bad, &inst.truth, eff - 0.01).unwrap().holds);
        assert_eq!(effective_error_rate(&inst.truth, &inst.truth).unwrap(), 0.0);
    }

    #[test]
    fn alpha_grid_rules() {
        assert_eq!(alpha_grid(1), vec![0.1]);
        let g = alpha_grid(15);
        assert_eq!(g.len(), 15);
        assert_eq!(g[0], 0.1);
        assert_eq!(*g.last().unwrap(), 0.499);
        assert!(g.iter().all(|&a| a < 0.5));
    }

    #[test]
    fn sweep_best_is_argmin() {
        let inst = synth(&SynthConfig::uniform(3, 30, 2, 20.0, 1.0, 2)).unwrap();
        let labels = corrupt(&inst, rate(0.2), Objective::Means, 2).unwrap();
        let spec = RunSpec::new(Algorithm::LaKmeans, rate(0.1), 0);
        let sweep = alpha_sweep(&inst.data, &labels, Some(&inst.truth), &spec, 15).unwrap();
        assert_eq!(sweep.table.len(), 15);
        assert!(sweep.table.iter().all(|r| sweep.best.cost_min_assign <= r.cost_min_assign));
        let one = alpha_sweep(&inst.data, &labels, None, &spec, 1).unwrap();
        assert_eq!(one.table.len(), 1);
        assert_eq!(one.best.alpha, 0.1);
    }

    #[test]
    fn report_costs_are_ordered() {
        let inst = synth(&SynthConfig::uniform(4, 25, 3, 15.0, 1.0, 5)).unwrap();
        let labels = corrupt(&inst, rate(0.2), Objective::Medians, 5).unwrap();
        for algo in Algorithm::ALL {
            let spec = RunSpec::new(algo, rate(0.2), 3);
            let r = run(&inst.data, &labels, Some(&inst.truth), &spec).unwrap();
            match r.cost_vs_truth {
                Some(c) => assert!(r.cost_min_assign <= c * (1.0 + 1e-9), "{algo}"),
                None => assert!(!algo.label_aligned()),
            }
        }
    }

    #[test]
    fn trials_statistics() {
        assert_eq!(mean_std(&[3.5; 20]), (3.5, 0.0));
        assert_eq!(mean_std(&[2.0]), (2.0, 0.0));
        let (m, s) = mean_std(&[1.0, 2.0, 3.0, 4.0]);
        assert!((m - 2.5).abs() < 1e-15 && (s - (5.0f64 / 3.0).sqrt()).abs() < 1e-15);

        let inst = synth(&SynthConfig::uniform(3, 20, 2, 20.0, 1.0, 6)).unwrap();
        let labels = corrupt(&inst, rate(0.1), Objective::Means, 6).unwrap();
        let spec = RunSpec::new(Algorithm::LaKmeans, rate(0.1), 0);
        let t = run_trials(&inst.data, &labels, Some(&inst.truth), &spec, 20).unwrap();
        assert_eq!(t.std_dev, 0.0);
        let t = run_trials(&inst.data, &labels, None, &spec, 1).unwrap();
        assert_eq!(t.std_dev, 0.0);
        assert!(run_trials(&inst.data, &labels, None, &spec, 0).is_err());
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("kmeans".parse::<Algorithm>().is_err());
    }
}
