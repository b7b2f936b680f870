//! Monte Carlo harness over query counts.
//!
//! Each trial draws one `(list, z)` pair and hands it to every strategy, so
//! strategies are compared on identical inputs. Trial `t` draws from
//! [`trial_rng`]`(master_seed, t)`, which makes the output independent of how
//! trials are scheduled across threads. Counts are aggregated in trial
//! order.

use crate::datasets::Dataset;
use crate::distributions::{sample_list_with, sample_target, trial_rng, DistributionSpec};
use crate::{search, Error, Result, SearchConfig, SortedList, Strategy, Variant};
use rayon::prelude::*;
use std::borrow::Cow;
use std::io::Write;

/// Default κ grids of `sweep-kappa`.
pub const KAPPA1_GRID: [f64; 8] = [0.01, 0.12, 0.23, 0.34, 0.45, 0.56, 0.67, 0.78];
pub const KAPPA2_GRID: [f64; 10] = [0.51, 0.56, 0.62, 0.67, 0.72, 0.78, 0.83, 0.88, 0.94, 0.99];

pub const CSV_HEADER: &str = "strategy,n,trials,mean,median,max,cap_hits,seed,variant,kappa1,kappa2";

/// Where trial inputs come from.
#[derive(Debug, Clone, Copy)]
pub enum Source<'a> {
    /// A fresh list of `n` cells per trial.
    Distribution { spec: DistributionSpec, n: usize },
    /// One fixed list; only the target is redrawn.
    Dataset(&'a Dataset),
}

impl Source<'_> {
    fn n(&self) -> usize {
        match self {
            Source::Distribution { n, .. } => *n,
            Source::Dataset(d) => d.list.n(),
        }
    }
}

/// Aggregated query counts of one strategy.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialStats {
    pub config: SearchConfig,
    pub n: usize,
    pub trials: usize,
    pub mean: f64,
    pub median: f64,
    pub max: usize,
    /// Runs that hit the query cap; they count as `cap` queries.
    pub cap_hits: usize,
    pub seed: u64,
}

impl TrialStats {
    fn from_counts(config: SearchConfig, n: usize, seed: u64, mut counts: Vec<usize>) -> Self {
        let cap = config.cap as usize;
        let trials = counts.len();
        let cap_hits = counts.iter().filter(|&&c| c >= cap).count();
        let total: usize = counts.iter().sum();
        counts.sort_unstable();
        let mid = trials / 2;
        let median = if trials % 2 == 1 {
            counts[mid] as f64
        } else {
            (counts[mid - 1] + counts[mid]) as f64 / 2.0
        };
        TrialStats {
            config,
            n,
            trials,
            mean: total as f64 / trials as f64,
            median,
            max: counts[trials - 1],
            cap_hits,
            seed,
        }
    }

    pub fn csv_row(&self) -> String {
        let c = &self.config;
        let (variant, k1, k2) = if c.strategy == Strategy::Itp {
            (c.variant.to_string(), c.kappa1.to_string(), c.kappa2.to_string())
        } else {
            ("-".to_string(), "-".to_string(), "-".to_string())
        };
        format!(
            "{},{},{},{:.4},{:.1},{},{},{},{},{},{}",
            c.strategy.label(),
            self.n,
            self.trials,
            self.mean,
            self.median,
            self.max,
            self.cap_hits,
            self.seed,
            variant,
            k1,
            k2
        )
    }
}

/// Runs `trials` searches per strategy and aggregates the query counts.
///
/// A capped run is recorded at the cap value and counted in `cap_hits`.
pub fn run_trials(
    source: &Source,
    strategies: &[SearchConfig],
    trials: usize,
    master_seed: u64,
) -> Result<Vec<TrialStats>> {
    if trials == 0 {
        return Err(Error::InvalidConfig("trials must be at least 1".into()));
    }
    if strategies.is_empty() {
        return Err(Error::InvalidConfig("no strategies to run".into()));
    }
    for s in strategies {
        s.validate()?;
    }
    match source {
        Source::Distribution { spec, .. } => spec.validate()?,
        Source::Dataset(d) => {
            if d.list.first() >= d.list.last() {
                return Err(Error::InvalidConfig(format!(
                    "dataset {} has a single distinct key; no target can be drawn",
                    d.name
                )));
            }
        }
    }

    let per_trial: Vec<Vec<usize>> = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(master_seed, t);
            let list: Cow<SortedList> = match source {
                Source::Distribution { spec, n } => Cow::Owned(sample_list_with(spec, *n, &mut rng)?),
                Source::Dataset(d) => Cow::Borrowed(&d.list),
            };
            let z = sample_target(list.first(), list.last(), &mut rng);
            strategies
                .iter()
                .map(|cfg| search(&list, z, cfg).map(|out| out.queries))
                .collect()
        })
        .collect::<Result<_>>()?;

    let n = source.n();
    Ok(strategies
        .iter()
        .enumerate()
        .map(|(i, cfg)| {
            let counts = per_trial.iter().map(|row| row[i]).collect();
            TrialStats::from_counts(*cfg, n, master_seed, counts)
        })
        .collect())
}

/// Mean query counts of ITP over a `κ2 × κ1` grid.
#[derive(Debug, Clone)]
pub struct KappaTable {
    pub kappa1: Vec<f64>,
    pub kappa2: Vec<f64>,
    /// Row-major: `rows[i2 * kappa1.len() + i1]`.
    pub rows: Vec<TrialStats>,
}

impl KappaTable {
    pub fn cell(&self, i2: usize, i1: usize) -> &TrialStats {
        &self.rows[i2 * self.kappa1.len() + i1]
    }

    /// `(i2, i1)` of the smallest mean; earlier cells win ties.
    pub fn argmin(&self) -> (usize, usize) {
        let mut best = 0;
        for (i, row) in self.rows.iter().enumerate() {
            if row.mean < self.rows[best].mean {
                best = i;
            }
        }
        (best / self.kappa1.len(), best % self.kappa1.len())
    }
}

/// Runs every `(κ1, κ2)` cell on the same trial draws.
#[allow(clippy::too_many_arguments)]
pub fn sweep_kappa(
    kappa1: &[f64],
    kappa2: &[f64],
    variant: Variant,
    spec: DistributionSpec,
    n: usize,
    trials: usize,
    seed: u64,
    cap: u32,
) -> Result<KappaTable> {
    if kappa1.is_empty() || kappa2.is_empty() {
        return Err(Error::InvalidConfig("kappa grids must be non-empty".into()));
    }
    let configs: Vec<SearchConfig> = kappa2
        .iter()
        .flat_map(|&k2| {
            kappa1
                .iter()
                .map(move |&k1| SearchConfig::itp(k1, k2, variant).with_cap(cap))
        })
        .collect();
    let rows = run_trials(&Source::Distribution { spec, n }, &configs, trials, seed)?;
    Ok(KappaTable {
        kappa1: kappa1.to_vec(),
        kappa2: kappa2.to_vec(),
        rows,
    })
}

/// One [`run_trials`] per list size, rows grouped by `n` in grid order.
pub fn sweep_n(
    n_grid: &[usize],
    spec: DistributionSpec,
    strategies: &[SearchConfig],
    trials: usize,
    seed: u64,
) -> Result<Vec<TrialStats>> {
    if n_grid.is_empty() {
        return Err(Error::InvalidConfig("n grid must be non-empty".into()));
    }
    let mut out = Vec::with_capacity(n_grid.len() * strategies.len());
    for &n in n_grid {
        out.extend(run_trials(&Source::Distribution { spec, n }, strategies, trials, seed)?);
    }
    Ok(out)
}

/// Writes the header and one line per row.
pub fn write_csv<W: Write>(mut out: W, rows: &[TrialStats]) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.csv_row())?;
    }
    out.flush()?;
    Ok(())
}
