//! Learning-augmented clustering.
//!
//! Given a point set and a predicted labeling in which at most an `alpha`
//! fraction of each cluster is mislabeled (`alpha < 1/2`), the routines here
//! recover centers whose k-means or k-medians cost is within a small factor
//! of the reference clustering:
//!
//! - [`la_kmeans`]: deterministic, per-cluster and per-dimension search for the
//!   cheapest contiguous window of `(1 - alpha) * m_i` sorted coordinates.
//! - [`la_kmedians`]: randomized anchor sampling, clipping of the farthest
//!   `ceil(alpha * m_i)` points and a geometric median of the survivors.
//!
//! The crate also ships the comparison baselines (k-means++/Lloyd, alternating
//! k-medoids, naive per-label centers, random sampling), a planted-instance
//! generator with label corruption, an experiment harness, and brute-force
//! oracles used by the test suites.

pub mod baselines;
pub mod cost;
mod error;
pub mod geomedian;
pub mod harness;
pub mod kmeans;
pub mod kmedians;
pub mod oracles;
mod rng;
mod types;
pub mod window;

pub use cost::{cluster_mean, cost_kmeans, cost_kmedians, one_means_cost, Objective};
pub use error::{ClusterError, Result};
pub use geomedian::{geometric_median, MedianConfig};
pub use kmeans::{factor_kmeans, la_kmeans};
pub use kmedians::{clip_count, factor_kmedians, la_kmedians, rounds, KMediansConfig};
pub use types::{CenterSet, Dataset, ErrorRate, Labeling};
pub use window::{best_window, window_width, WindowResult};
