//! Seeded random variates: uniform, exponential, Gaussian and ex-Gaussian.
//!
//! The generator is ChaCha8 (`rand_chacha`). A [`RngStream`] is identified by
//! a 64-bit seed, which keys the cipher, and a 64-bit stream id, which selects
//! one of 2^64 disjoint keystreams. Each keystream holds 2^68 words, so
//! distinct stream ids never overlap in practice. Stream 0 is the root; the
//! bootstrap gives replicate `i` the stream `i + 1`.
//!
//! Every variate is built from whole 64-bit words by inversion:
//!
//! * uniform: top 53 bits of one word, on `[0, 1)`;
//! * exponential: `-tau * ln(1 - U)`, one word;
//! * Gaussian: `mu + sigma * Phi^-1(U')` with `U'` the midpoint-shifted
//!   53-bit uniform on `(0, 1)` and the AS241 normal quantile, one word;
//! * ex-Gaussian: a Gaussian draw followed by an exponential draw from the
//!   same stream, so the Gaussian component uses the even-indexed words and
//!   the exponential component the odd-indexed words of the stream.
//!
//! Sequences are bit-identical for equal `(seed, stream)` on any platform
//! whose `ln` is correctly rounded on the values involved.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::dist::ExGaussParams;
use crate::error::{ExgError, Result};
use crate::special::normal_quantile;

const TWO_POW_M53: f64 = 1.0 / (1u64 << 53) as f64;

/// A seeded, single-owner random stream.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    stream: u64,
    rng: ChaCha8Rng,
}

impl RngStream {
    /// Root stream (stream id 0) for `seed`.
    pub fn new(seed: u64) -> Self {
        Self::with_stream(seed, 0)
    }

    /// Stream `stream` of the family keyed by `seed`.
    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { seed, stream, rng }
    }

    /// A fresh stream in the same family, independent of this one.
    pub fn substream(&self, stream: u64) -> Self {
        Self::with_stream(self.seed, stream)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    #[inline]
    fn next_word(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform on the open interval (0, 1).
    #[inline]
    fn open_uniform(&mut self) -> f64 {
        ((self.next_word() >> 11) as f64 + 0.5) * TWO_POW_M53
    }
}

/// Uniform variate on `[0, 1)`.
#[inline]
pub fn drand(stream: &mut RngStream) -> f64 {
    (stream.next_word() >> 11) as f64 * TWO_POW_M53
}

/// Exponential variate with mean `tau`.
pub fn drand_exp(stream: &mut RngStream, tau: f64) -> Result<f64> {
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(ExgError::domain("tau", tau, "(0, inf)"));
    }
    Ok(-tau * (1.0 - drand(stream)).ln())
}

/// Gaussian variate with mean `mu` and standard deviation `sigma`.
pub fn drand_gauss(stream: &mut RngStream, mu: f64, sigma: f64) -> Result<f64> {
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(ExgError::domain("sigma", sigma, "(0, inf)"));
    }
    Ok(mu + sigma * normal_quantile(stream.open_uniform()))
}

/// Ex-Gaussian variate: a Gaussian draw plus an exponential draw.
pub fn drand_exg(stream: &mut RngStream, p: &ExGaussParams) -> f64 {
    let g = p.mu() + p.sigma() * normal_quantile(stream.open_uniform());
    let e = -p.tau() * (1.0 - drand(stream)).ln();
    g + e
}

/// `n` ex-Gaussian variates.
pub fn sample_exg(stream: &mut RngStream, p: &ExGaussParams, n: usize) -> Vec<f64> {
    (0..n).map(|_| drand_exg(stream, p)).collect()
}
