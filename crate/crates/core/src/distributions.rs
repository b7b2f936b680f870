//! Seeded generators for test lists and search targets.
//!
//! Every generated list has `n + 1` keys: fixed endpoints `v_0 = 0` and
//! `v_n = 1` around `n − 1` interior samples in `(0, 1)`, sorted ascending.
//!
//! # Reproducibility
//!
//! The generator is ChaCha8 from `rand_chacha`. A seed is expanded into a
//! key with `SeedableRng::seed_from_u64`, whose output is fixed by
//! `rand_core`. Monte Carlo trial `t` under master seed `s` uses the key of
//! `s` with ChaCha stream id `t` (see [`trial_rng`]), so trials are
//! independent and can run in any order or in parallel. Within a trial the
//! list is drawn first, then the target.

use crate::{Error, Result, SortedList};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp, Exp1, Normal};
use std::fmt;

/// Identifier recorded with benchmark output.
pub const RNG_ALGORITHM: &str = "chacha8:seed_from_u64:stream=trial";

/// The generator for one trial of a seeded run.
pub fn trial_rng(master_seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(trial);
    rng
}

/// Shape of the interior samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistributionSpec {
    Uniform,
    /// Normal with standard deviation `sigma` around a mean drawn
    /// uniformly from `[0, 1]` once per list.
    Gaussian { sigma: f64 },
    Exponential { lambda: f64 },
    /// Density `2x` on `[0, 1]`, drawn as the square root of a uniform.
    Triangular,
    /// Uniform on `[0, split)` with probability `left_mass`, otherwise
    /// uniform on `[split, 1)`.
    Step { split: f64, left_mass: f64 },
}

impl DistributionSpec {
    pub fn gaussian() -> Self {
        DistributionSpec::Gaussian { sigma: 0.01 }
    }

    pub fn exponential() -> Self {
        DistributionSpec::Exponential { lambda: 1.0 }
    }

    pub fn step() -> Self {
        DistributionSpec::Step {
            split: 0.75,
            left_mass: 0.5,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            DistributionSpec::Uniform => "uniform",
            DistributionSpec::Gaussian { .. } => "gaussian",
            DistributionSpec::Exponential { .. } => "exponential",
            DistributionSpec::Triangular => "triangular",
            DistributionSpec::Step { .. } => "step",
        }
    }

    /// True when out-of-range draws are resampled rather than impossible.
    pub fn uses_rejection(&self) -> bool {
        matches!(
            self,
            DistributionSpec::Gaussian { .. } | DistributionSpec::Exponential { .. }
        )
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDistribution(msg));
        match *self {
            DistributionSpec::Gaussian { sigma } if !(sigma > 0.0 && sigma.is_finite()) => {
                bad(format!("sigma must be positive, got {sigma}"))
            }
            DistributionSpec::Exponential { lambda } if !(lambda > 0.0 && lambda.is_finite()) => {
                bad(format!("lambda must be positive, got {lambda}"))
            }
            DistributionSpec::Step { split, left_mass }
                if !(split > 0.0 && split < 1.0 && left_mass > 0.0 && left_mass < 1.0) =>
            {
                bad(format!(
                    "step needs 0 < split < 1 and 0 < left_mass < 1, got {split} and {left_mass}"
                ))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for DistributionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Draws a list from `spec` with a fresh generator seeded by `seed`.
pub fn sample_list(spec: &DistributionSpec, n: usize, seed: u64) -> Result<SortedList> {
    sample_list_with(spec, n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Draws a list from `spec` using `rng`.
///
/// Uniform lists are built from normalised partial sums of `n` standard
/// exponentials, which yields the sorted order statistics of `n − 1`
/// uniforms in `O(n)` without a sort. Other shapes draw independent
/// samples and sort them. Gaussian and exponential draws outside `(0, 1)`
/// are rejected and redrawn.
pub fn sample_list_with<R: Rng + ?Sized>(
    spec: &DistributionSpec,
    n: usize,
    rng: &mut R,
) -> Result<SortedList> {
    if n == 0 {
        return Err(Error::ListTooShort(1));
    }
    spec.validate()?;
    let interior = n - 1;
    let mut values = Vec::with_capacity(n + 1);
    values.push(0.0);
    match *spec {
        DistributionSpec::Uniform => {
            let gaps: Vec<f64> = (0..n).map(|_| Exp1.sample(rng)).collect();
            let total: f64 = gaps.iter().sum();
            let mut acc = 0.0;
            for g in &gaps[..interior] {
                acc += g;
                values.push((acc / total).min(1.0));
            }
        }
        DistributionSpec::Gaussian { sigma } => {
            let mean: f64 = rng.random();
            let normal = Normal::new(mean, sigma)
                .map_err(|e| Error::InvalidDistribution(e.to_string()))?;
            values.extend((0..interior).map(|_| reject_outside_unit(|| normal.sample(rng))));
        }
        DistributionSpec::Exponential { lambda } => {
            let exp = Exp::new(lambda).map_err(|e| Error::InvalidDistribution(e.to_string()))?;
            values.extend((0..interior).map(|_| reject_outside_unit(|| exp.sample(rng))));
        }
        DistributionSpec::Triangular => {
            values.extend((0..interior).map(|_| open_unit(rng).sqrt()));
        }
        DistributionSpec::Step { split, left_mass } => {
            values.extend((0..interior).map(|_| {
                let left = rng.random_bool(left_mass);
                reject_outside_unit(|| {
                    let u: f64 = rng.random();
                    if left {
                        u * split
                    } else {
                        split + u * (1.0 - split)
                    }
                })
            }));
        }
    }
    if !matches!(spec, DistributionSpec::Uniform) {
        values[1..].sort_unstable_by(f64::total_cmp);
    }
    values.push(1.0);
    SortedList::new(values)
}

/// A target drawn uniformly from the open interval `(lo, hi)`.
///
/// # Panics
///
/// Panics unless `lo < hi` and both are finite.
pub fn sample_target<R: Rng + ?Sized>(lo: f64, hi: f64, rng: &mut R) -> f64 {
    assert!(
        lo < hi && lo.is_finite() && hi.is_finite(),
        "sample_target needs a finite range with lo < hi, got [{lo}, {hi}]"
    );
    loop {
        let u: f64 = rng.random();
        let z = lo + (hi - lo) * u;
        if z > lo && z < hi {
            return z;
        }
    }
}

fn open_unit<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    loop {
        let u: f64 = rng.random();
        if u > 0.0 {
            return u;
        }
    }
}

fn reject_outside_unit(mut draw: impl FnMut() -> f64) -> f64 {
    loop {
        let x = draw();
        if x > 0.0 && x < 1.0 {
            return x;
        }
    }
}
