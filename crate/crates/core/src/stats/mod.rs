//! Descriptive statistics and small numerical utilities.

mod anova;
mod histogram;
mod moments;
mod quadrature;
mod regression;
mod roots;

pub use anova::{anova, AnovaResult};
pub use histogram::{default_bins, histogram, Histogram};
pub use moments::{correlation, stats, stats_his};
pub use quadrature::{int_points_gauss, integral, intsum, GaussPoint};
pub use regression::minsquare;
pub use roots::zero;

use serde::{Deserialize, Serialize};

use crate::error::{ExgError, Result};

/// A non-empty set of finite observations, kept in insertion order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Sample {
    values: Vec<f64>,
}

impl Sample {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(ExgError::EmptySample);
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(ExgError::NonFinite { index, value });
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Values in ascending order.
    pub fn sorted(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        v.sort_by(f64::total_cmp);
        v
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Every value shifted by `c`.
    pub fn shifted(&self, c: f64) -> Result<Self> {
        Self::new(self.values.iter().map(|v| v + c).collect())
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

impl TryFrom<Vec<f64>> for Sample {
    type Error = ExgError;
    fn try_from(v: Vec<f64>) -> Result<Self> {
        Sample::new(v)
    }
}

impl From<Sample> for Vec<f64> {
    fn from(s: Sample) -> Self {
        s.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_validation() {
        assert_eq!(Sample::new(vec![]), Err(ExgError::EmptySample));
        assert!(matches!(
            Sample::new(vec![1.0, f64::NAN]),
            Err(ExgError::NonFinite { index: 1, .. })
        ));
        let s = Sample::new(vec![3.0, 1.0, 2.0]).unwrap();
        assert_eq!(s.sorted(), vec![1.0, 2.0, 3.0]);
        assert_eq!(s.values(), &[3.0, 1.0, 2.0]);
        assert_eq!((s.min(), s.max()), (1.0, 3.0));
    }
}
