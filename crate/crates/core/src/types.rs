use serde::{Deserialize, Serialize};

use crate::error::{ClusterError, Result};

/// An `m x d` point set stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    values: Vec<f64>,
    m: usize,
    d: usize,
}

impl Dataset {
    pub fn new(values: Vec<f64>, m: usize, d: usize) -> Result<Self> {
        if m == 0 {
            return Err(ClusterError::EmptyInput);
        }
        if d == 0 {
            return Err(ClusterError::Shape("dimension must be at least 1".into()));
        }
        if values.len() != m * d {
            return Err(ClusterError::Shape(format!("{} values cannot form {m} rows of dimension {d}", values.len())));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(ClusterError::NonFinite { row: pos / d, col: pos % d });
        }
        Ok(Self { values, m, d })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let first = rows.first().ok_or(ClusterError::EmptyInput)?;
        let d = first.as_ref().len();
        let mut values = Vec::with_capacity(rows.len() * d);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != d {
                return Err(ClusterError::Shape(format!("row {i} has dimension {}, expected {d}", row.len())));
            }
            values.extend_from_slice(row);
        }
        Self::new(values, rows.len(), d)
    }

    /// One-dimensional dataset, one point per value.
    pub fn from_values(values: &[f64]) -> Result<Self> {
        Self::new(values.to_vec(), values.len(), 1)
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.d..(i + 1) * self.d]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.values.chunks_exact(self.d)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.values
    }

    /// Rows at the given indices, in order.
    pub fn select(&self, indices: &[usize]) -> Result<Dataset> {
        let mut values = Vec::with_capacity(indices.len() * self.d);
        for &i in indices {
            if i >= self.m {
                return Err(ClusterError::Shape(format!("row index {i} out of range for {} rows", self.m)));
            }
            values.extend_from_slice(self.row(i));
        }
        Dataset::new(values, indices.len(), self.d)
    }
}

/// Assignment of every point to a cluster id in `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    assign: Vec<usize>,
    k: usize,
}

impl Labeling {
    pub fn new(assign: Vec<usize>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(ClusterError::Domain("k must be at least 1".into()));
        }
        if let Some((row, &label)) = assign.iter().enumerate().find(|(_, &l)| l >= k) {
            return Err(ClusterError::LabelOutOfRange { row, label, k });
        }
        Ok(Self { assign, k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.assign.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assign.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.assign
    }

    pub fn get(&self, i: usize) -> usize {
        self.assign[i]
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &l in &self.assign {
            sizes[l] += 1;
        }
        sizes
    }

    /// Point indices of each cluster, ascending.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (i, &l) in self.assign.iter().enumerate() {
            out[l].push(i);
        }
        out
    }

    /// Checks that the labeling covers `data` and, when used as predictor
    /// input, that no cluster is empty.
    pub fn validate_for(&self, data: &Dataset) -> Result<()> {
        if self.assign.len() != data.len() {
            return Err(ClusterError::Shape(format!("{} labels for {} points", self.assign.len(), data.len())));
        }
        match self.sizes().iter().position(|&s| s == 0) {
            Some(cluster) => Err(ClusterError::EmptyCluster { cluster }),
            None => Ok(()),
        }
    }
}

/// `k` centers in `d` dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct CenterSet {
    values: Vec<f64>,
    k: usize,
    d: usize,
}

impl CenterSet {
    pub fn new(values: Vec<f64>, k: usize, d: usize) -> Result<Self> {
        if k == 0 || d == 0 {
            return Err(ClusterError::Shape(format!("center set shape ({k}, {d}) is empty")));
        }
        if values.len() != k * d {
            return Err(ClusterError::Shape(format!(
                "{} values cannot form {k} centers of dimension {d}",
                values.len()
            )));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(ClusterError::NonFinite { row: pos / d, col: pos % d });
        }
        Ok(Self { values, k, d })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let d = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        let mut values = Vec::with_capacity(rows.len() * d);
        for row in rows {
            if row.as_ref().len() != d {
                return Err(ClusterError::Shape("ragged center rows".into()));
            }
            values.extend_from_slice(row.as_ref());
        }
        Self::new(values, rows.len(), d)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn center(&self, i: usize) -> &[f64] {
        &self.values[i * self.d..(i + 1) * self.d]
    }

    pub fn centers(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.values.chunks_exact(self.d)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.values
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.centers().map(<[f64]>::to_vec).collect()
    }
}

/// Label error rate `alpha` in `[0, 1/2)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct ErrorRate(f64);

impl ErrorRate {
    pub const ZERO: ErrorRate = ErrorRate(0.0);

    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_nan() || !(0.0..0.5).contains(&alpha) {
            return Err(ClusterError::Domain(format!("error rate {alpha} must lie in [0, 0.5)")));
        }
        Ok(Self(alpha))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for ErrorRate {
    type Error = ClusterError;

    fn try_from(alpha: f64) -> Result<Self> {
        Self::new(alpha)
    }
}

impl From<ErrorRate> for f64 {
    fn from(alpha: ErrorRate) -> f64 {
        alpha.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dataset_rejects_non_finite() {
        let err = Dataset::new(vec![0.0, f64::NAN, 1.0, 2.0], 2, 2).unwrap_err();
        assert_eq!(err, ClusterError::NonFinite { row: 0, col: 1 });
        assert!(Dataset::new(vec![f64::INFINITY], 1, 1).is_err());
    }

    #[test]
    fn dataset_shape_checks() {
        assert!(matches!(Dataset::new(vec![1.0; 5], 2, 2), Err(ClusterError::Shape(_))));
        assert_eq!(Dataset::new(vec![], 0, 2), Err(ClusterError::EmptyInput));
        assert!(Dataset::from_rows(&[vec![1.0, 2.0], vec![3.0]]).is_err());
        let ds = Dataset::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        assert_eq!(ds.row(1), &[3.0, 4.0]);
        assert_eq!(ds.rows().count(), 2);
    }

    #[test]
    fn labeling_validation() {
        assert!(matches!(Labeling::new(vec![0, 2], 2), Err(ClusterError::LabelOutOfRange { row: 1, label: 2, k: 2 })));
        let data = Dataset::from_values(&[0.0, 1.0, 2.0]).unwrap();
        let labels = Labeling::new(vec![0, 0, 0], 2).unwrap();
        assert_eq!(labels.validate_for(&data), Err(ClusterError::EmptyCluster { cluster: 1 }));
        let labels = Labeling::new(vec![0, 1, 0], 2).unwrap();
        assert!(labels.validate_for(&data).is_ok());
        assert_eq!(labels.sizes(), vec![2, 1]);
        assert_eq!(labels.members(), vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn error_rate_domain() {
        assert!(ErrorRate::new(0.0).is_ok());
        assert!(ErrorRate::new(0.499).is_ok());
        assert!(ErrorRate::new(0.5).is_err());
        assert!(ErrorRate::new(-0.1).is_err());
        assert!(ErrorRate::new(f64::NAN).is_err());
    }
}
