//! Seeded random integer weights for unweighted topologies.
//!
//! Two distributions: uniform integers over `[w_lo, w_hi]`, and a log-normal
//! whose underlying normal maps `[ln w_lo, ln w_hi]` onto `mu ± 3 sigma`, so
//! the requested range is the six-sigma interval of the raw distribution.
//! Log-normal draws are rounded to the nearest integer and clamped into
//! range. The generator is ChaCha8 seeded from the spec, one draw per arc in
//! arc order, which makes every assignment reproducible bit for bit.

use ocm_core::{Arc, WeightedDigraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution as _, LogNormal};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const GENERATOR_NAME: &str = "chacha8";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum WeightDistribution {
    Uniform,
    #[value(name = "lognormal")]
    LogNormal,
}

impl std::fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WeightDistribution::Uniform => write!(f, "uniform"),
            WeightDistribution::LogNormal => write!(f, "lognormal"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSpec {
    pub distribution: WeightDistribution,
    pub w_lo: i64,
    pub w_hi: i64,
    pub seed: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightgenError {
    #[error("weight range must satisfy 1 <= lo < hi, got [{lo}, {hi}]")]
    InvalidRange { lo: i64, hi: i64 },
}

impl WeightSpec {
    pub fn validate(&self) -> Result<(), WeightgenError> {
        if self.w_lo < 1 || self.w_lo >= self.w_hi {
            return Err(WeightgenError::InvalidRange {
                lo: self.w_lo,
                hi: self.w_hi,
            });
        }
        Ok(())
    }

    fn lognormal(&self) -> LogNormal<f64> {
        let lo = (self.w_lo as f64).ln();
        let hi = (self.w_hi as f64).ln();
        let mu = (lo + hi) / 2.0;
        let sigma = (hi - lo) / 6.0;
        LogNormal::new(mu, sigma).expect("sigma is positive for a valid range")
    }
}

/// Replaces every arc weight with an i.i.d. draw; topology unchanged.
pub fn assign_weights(
    topology: &WeightedDigraph,
    spec: &WeightSpec,
) -> Result<WeightedDigraph, WeightgenError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let arcs: Vec<Arc> = topology
        .arcs()
        .iter()
        .map(|a| Arc {
            tail: a.tail,
            head: a.head,
            weight: draw(&mut rng, spec),
        })
        .collect();
    Ok(WeightedDigraph::new(topology.node_count(), arcs).expect("same endpoints"))
}

fn draw(rng: &mut ChaCha8Rng, spec: &WeightSpec) -> i64 {
    match spec.distribution {
        WeightDistribution::Uniform => rng.gen_range(spec.w_lo..=spec.w_hi),
        WeightDistribution::LogNormal => {
            let raw = spec.lognormal().sample(rng);
            (raw.round() as i64).clamp(spec.w_lo, spec.w_hi)
        }
    }
}

/// Raw (pre-round, pre-clamp) log-normal draws; used to check range
/// coverage of the six-sigma construction.
pub fn lognormal_raw_samples(spec: &WeightSpec, count: usize) -> Result<Vec<f64>, WeightgenError> {
    spec.validate()?;
    let dist = spec.lognormal();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    Ok((0..count).map(|_| dist.sample(&mut rng)).collect())
}

/// Stable per-file seed derivation for directory runs (splitmix64 over the
/// base seed and the file index).
pub fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
