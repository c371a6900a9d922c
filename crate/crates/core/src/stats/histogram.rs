use serde::{Deserialize, Serialize};

use super::Sample;
use crate::error::{ExgError, Result};

/// Equal- or custom-width binning of a sample.
///
/// Bins are half-open `[lo, hi)` except the last, which is closed, so the
/// sample maximum lands in the last bin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
    /// `count / (n_total * width)`, so the densities integrate to one.
    pub densities: Vec<f64>,
    pub n_total: u64,
}

/// Default bin count: `2 sqrt(N)` rounded half to even, at least one.
pub fn default_bins(n: usize) -> usize {
    let raw = 2.0 * (n as f64).sqrt();
    (raw.round_ties_even() as usize).max(1)
}

/// Equal-width histogram spanning `[min(s), max(s)]`.
///
/// `n_bins = None` uses [`default_bins`].
pub fn histogram(s: &Sample, n_bins: Option<usize>) -> Result<Histogram> {
    let n_bins = n_bins.unwrap_or_else(|| default_bins(s.len()));
    if n_bins < 1 {
        return Err(ExgError::domain("n_bins", n_bins as f64, "[1, inf)"));
    }
    let (lo, hi) = (s.min(), s.max());
    if !(hi > lo) {
        return Err(ExgError::DegenerateHistogram("all observations are equal"));
    }
    let width = (hi - lo) / n_bins as f64;
    let mut edges: Vec<f64> = (0..n_bins).map(|i| lo + i as f64 * width).collect();
    edges.push(hi);
    Histogram::with_edges(s, edges)
}

impl Histogram {
    /// Bin `s` on caller-supplied, strictly increasing edges that cover it.
    pub fn with_edges(s: &Sample, edges: Vec<f64>) -> Result<Self> {
        if edges.len() < 2 {
            return Err(ExgError::DegenerateHistogram("need at least two edges"));
        }
        if edges.windows(2).any(|w| !(w[1] > w[0])) || edges.iter().any(|e| !e.is_finite()) {
            return Err(ExgError::DegenerateHistogram(
                "edges must be finite and strictly increasing",
            ));
        }
        let n_bins = edges.len() - 1;
        let (first, last) = (edges[0], edges[n_bins]);
        let mut counts = vec![0u64; n_bins];
        for &x in s.values() {
            if x < first || x > last {
                return Err(ExgError::DegenerateHistogram(
                    "edges do not cover the sample",
                ));
            }
            counts[bin_index(&edges, x)] += 1;
        }
        let n_total = s.len() as u64;
        let densities = counts
            .iter()
            .zip(edges.windows(2))
            .map(|(&c, w)| c as f64 / (n_total as f64 * (w[1] - w[0])))
            .collect();
        Ok(Self {
            edges,
            counts,
            densities,
            n_total,
        })
    }

    pub fn n_bins(&self) -> usize {
        self.counts.len()
    }

    pub fn centers(&self) -> Vec<f64> {
        self.edges.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect()
    }

    pub fn widths(&self) -> Vec<f64> {
        self.edges.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

fn bin_index(edges: &[f64], x: f64) -> usize {
    let n_bins = edges.len() - 1;
    // first edge strictly greater than x, minus one
    let i = edges.partition_point(|&e| e <= x);
    i.saturating_sub(1).min(n_bins - 1)
}
