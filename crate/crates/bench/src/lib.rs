//! Fixtures shared by the benchmarks.

use laclust::harness::{corrupt, synth, SynthConfig};
use laclust::{Dataset, ErrorRate, Labeling, Objective};

/// `m` points in `k` equal planted clusters of dimension `d`, with labels
/// corrupted at rate `alpha`.
pub fn planted(m: usize, k: usize, d: usize, alpha: f64) -> (Dataset, Labeling) {
    let inst = synth(&SynthConfig::uniform(k, m / k, d, 10.0, 1.0, 17)).expect("valid synth config");
    let rate = ErrorRate::new(alpha).expect("alpha below 1/2");
    let labels = corrupt(&inst, rate, Objective::Means, 17).expect("k >= 2");
    (inst.data, labels)
}

/// `n` Gaussian reals.
pub fn values(n: usize) -> Vec<f64> {
    synth(&SynthConfig::uniform(1, n, 1, 1.0, 1.0, 5)).expect("valid synth config").data.as_slice().to_vec()
}

/// `n` Gaussian points in `d` dimensions.
pub fn cloud(n: usize, d: usize) -> Vec<Vec<f64>> {
    let data = synth(&SynthConfig::uniform(1, n, d, 1.0, 1.0, 9)).expect("valid synth config").data;
    data.rows().map(<[f64]>::to_vec).collect()
}
