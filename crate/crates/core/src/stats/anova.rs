use serde::{Deserialize, Serialize};

use super::Sample;
use crate::error::{ExgError, Result};
use crate::special::f_sf;

/// One-way fixed-effects ANOVA.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnovaResult {
    pub f: f64,
    pub df_between: usize,
    pub df_within: usize,
    /// Right tail of F(df_between, df_within) at `f`.
    pub p: f64,
}

pub fn anova(groups: &[Sample]) -> Result<AnovaResult> {
    if groups.len() < 2 {
        return Err(ExgError::InsufficientData {
            needed: 2,
            got: groups.len(),
        });
    }
    if let Some(g) = groups.iter().find(|g| g.len() < 2) {
        return Err(ExgError::InsufficientData {
            needed: 2,
            got: g.len(),
        });
    }
    let n: usize = groups.iter().map(Sample::len).sum();
    let k = groups.len();
    let grand = groups.iter().flat_map(|g| g.values()).sum::<f64>() / n as f64;
    let mut ss_between = 0.0;
    let mut ss_within = 0.0;
    for g in groups {
        let m = g.values().iter().sum::<f64>() / g.len() as f64;
        ss_between += g.len() as f64 * (m - grand) * (m - grand);
        ss_within += g.values().iter().map(|x| (x - m) * (x - m)).sum::<f64>();
    }
    let df_between = k - 1;
    let df_within = n - k;
    if ss_within == 0.0 && ss_between == 0.0 {
        return Err(ExgError::ZeroVariance);
    }
    let f = if ss_within == 0.0 {
        f64::INFINITY
    } else {
        (ss_between / df_between as f64) / (ss_within / df_within as f64)
    };
    Ok(AnovaResult {
        f,
        df_between,
        df_within,
        p: f_sf(f, df_between as f64, df_within as f64),
    })
}
