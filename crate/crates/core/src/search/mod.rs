//! The bracketing loop and the three probe strategies.

mod probe;

pub use probe::{
    interpolation_point, itp_point, midpoint, minmax_radius, project, round_toward_midpoint,
    truncate,
};

use crate::{Error, Result};
use std::fmt;

/// Worst-case query count of a minmax-optimal search over `n` cells:
/// `⌈log2 n⌉`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn minmax_bound(n: usize) -> u32 {
    assert!(n >= 1, "minmax_bound needs n >= 1");
    probe::ceil_log2(n)
}

/// A non-decreasing list of finite keys `v_0 ≤ … ≤ v_n` with `n ≥ 1`.
///
/// Keys are used as given: no normalisation to `[0, 1]` is required, since
/// interpolation is invariant under affine rescaling of the keys.
#[derive(Debug, Clone, PartialEq)]
pub struct SortedList {
    values: Vec<f64>,
}

impl SortedList {
    /// Validates and wraps `values`.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::ListTooShort(values.len()));
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        if let Some(i) = values.windows(2).position(|w| w[1] < w[0]) {
            return Err(Error::Unsorted { index: i + 1 });
        }
        Ok(SortedList { values })
    }

    /// Sorts `values` ascending first, then validates.
    pub fn from_unsorted(mut values: Vec<f64>) -> Result<Self> {
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        values.sort_unstable_by(f64::total_cmp);
        SortedList::new(values)
    }

    /// The index of the last entry; the list has `n + 1` keys.
    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn first(&self) -> f64 {
        self.values[0]
    }

    pub fn last(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// True when no key repeats.
    pub fn is_distinct(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

/// Live search state.
///
/// Holds `a < b` together with the cached end keys, and `j`, the number of
/// probes made so far. End keys are cached so they never cost a query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub a: usize,
    pub b: usize,
    pub va: f64,
    pub vb: f64,
    pub j: u32,
}

impl Bracket {
    pub fn new(a: usize, b: usize, va: f64, vb: f64) -> Self {
        debug_assert!(a < b);
        Bracket { a, b, va, vb, j: 0 }
    }

    /// `Δ = b − a`.
    pub fn delta(&self) -> usize {
        self.b - self.a
    }

    pub fn is_terminal(&self) -> bool {
        self.delta() <= 1
    }

    /// Shrinks the bracket after comparing the probed key `v_k` with `z`.
    ///
    /// An exact hit collapses the bracket to `(k, k + 1)`. In that case
    /// `values[k + 1]` was never read, so `vb` is left holding `v_k`; callers
    /// must not use `vb` once the bracket is terminal.
    pub fn update(self, k: usize, v_k: f64, z: f64) -> Bracket {
        debug_assert!(self.a < k && k < self.b);
        let j = self.j + 1;
        if v_k > z {
            Bracket {
                b: k,
                vb: v_k,
                j,
                ..self
            }
        } else if v_k < z {
            Bracket {
                a: k,
                va: v_k,
                j,
                ..self
            }
        } else {
            Bracket {
                a: k,
                b: k + 1,
                va: v_k,
                vb: v_k,
                j,
            }
        }
    }
}

/// Which probe rule drives the bracketing loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Binary,
    Interpolation,
    Itp,
}

impl Strategy {
    pub fn label(self) -> &'static str {
        match self {
            Strategy::Binary => "binary",
            Strategy::Interpolation => "interpolation",
            Strategy::Itp => "itp",
        }
    }
}

/// How the ITP minmax radius is budgeted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Variant {
    /// Never exceed `⌈log2 n⌉` queries.
    Strict,
    /// Budget `N_max = ⌈log2 n⌉ + extra` queries; `extra ≥ 0` may be
    /// fractional, in which case the worst case is `⌈N_max⌉`.
    Relaxed { extra: f64 },
    /// From every bracket, never exceed what bisection would need for it.
    Local,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Strict => f.write_str("strict"),
            Variant::Relaxed { extra } => write!(f, "relaxed:{extra}"),
            Variant::Local => f.write_str("local"),
        }
    }
}

/// Strategy selection and tuning knobs.
///
/// `kappa1`, `kappa2` and `variant` only matter for [`Strategy::Itp`].
/// `cap` bounds the number of queries for every strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    pub strategy: Strategy,
    pub kappa1: f64,
    pub kappa2: f64,
    pub variant: Variant,
    pub cap: u32,
}

impl SearchConfig {
    pub const DEFAULT_KAPPA1: f64 = 0.01;
    pub const DEFAULT_KAPPA2: f64 = 0.83;
    pub const DEFAULT_NMAX_EXTRA: f64 = 0.99;
    pub const DEFAULT_CAP: u32 = 1000;

    pub fn binary() -> Self {
        SearchConfig {
            strategy: Strategy::Binary,
            ..Self::recommended()
        }
    }

    pub fn interpolation() -> Self {
        SearchConfig {
            strategy: Strategy::Interpolation,
            ..Self::recommended()
        }
    }

    pub fn itp(kappa1: f64, kappa2: f64, variant: Variant) -> Self {
        SearchConfig {
            strategy: Strategy::Itp,
            kappa1,
            kappa2,
            variant,
            cap: Self::DEFAULT_CAP,
        }
    }

    /// ITP with `κ1 = 0.01`, `κ2 = 0.83` and `N_max = ⌈log2 n⌉ + 0.99`.
    pub fn recommended() -> Self {
        Self::itp(
            Self::DEFAULT_KAPPA1,
            Self::DEFAULT_KAPPA2,
            Variant::Relaxed {
                extra: Self::DEFAULT_NMAX_EXTRA,
            },
        )
    }

    pub fn with_cap(self, cap: u32) -> Self {
        SearchConfig { cap, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.cap == 0 {
            return Err(Error::InvalidConfig("cap must be at least 1".into()));
        }
        if self.strategy != Strategy::Itp {
            return Ok(());
        }
        if !(self.kappa1.is_finite() && self.kappa1 > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "kappa1 must be positive, got {}",
                self.kappa1
            )));
        }
        if !(self.kappa2 > 0.5 && self.kappa2 < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "kappa2 must lie in (0.5, 1), got {}",
                self.kappa2
            )));
        }
        if let Variant::Relaxed { extra } = self.variant {
            if !(extra.is_finite() && extra >= 0.0) {
                return Err(Error::InvalidConfig(format!(
                    "relaxed budget must be at least the minmax bound, got extra = {extra}"
                )));
            }
        }
        Ok(())
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self::recommended()
    }
}

/// Result of one search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// The final lower end of the bracket.
    pub k_star: usize,
    /// Interior keys read; always `trace.len()`.
    pub queries: usize,
    /// Probed indices in order.
    pub trace: Vec<usize>,
    /// Set when `cap` queries were spent without reaching a terminal bracket.
    pub capped: bool,
}

/// Finds `k` with `v_k ≤ z < v_{k+1}`.
///
/// `z` must lie in `[v_0, v_n]`. `z = v_0` returns `0` and `z = v_n` returns
/// `n`, both without any query. On lists with repeated keys the guarantee
/// weakens to `v_k ≤ z ≤ v_{k+1}`.
pub fn search(list: &SortedList, z: f64, config: &SearchConfig) -> Result<SearchOutcome> {
    config.validate()?;
    let v = list.values();
    let n = list.n();
    if !(z >= v[0] && z <= v[n]) {
        return Err(Error::TargetOutOfRange {
            z,
            lo: v[0],
            hi: v[n],
        });
    }
    let mut trace = Vec::new();
    // Both end keys are cached, so matching either one is free.
    if z == v[0] || z == v[n] {
        return Ok(SearchOutcome {
            k_star: if z == v[n] { n } else { 0 },
            queries: 0,
            trace,
            capped: false,
        });
    }

    let budget = minmax_bound(n);
    let cap = config.cap as usize;
    let mut bracket = Bracket::new(0, n, v[0], v[n]);
    let mut capped = false;
    while !bracket.is_terminal() {
        if trace.len() >= cap {
            capped = true;
            break;
        }
        let k = next_probe(&bracket, z, config, budget);
        trace.push(k);
        bracket = bracket.update(k, v[k], z);
    }
    Ok(SearchOutcome {
        k_star: bracket.a,
        queries: trace.len(),
        trace,
        capped,
    })
}

/// The index the configured strategy probes next from `bracket`.
///
/// `minmax_budget` is `⌈log2 n⌉` for the whole list.
pub fn next_probe(bracket: &Bracket, z: f64, config: &SearchConfig, minmax_budget: u32) -> usize {
    let x_half = midpoint(bracket);
    let x = match config.strategy {
        Strategy::Binary => x_half,
        Strategy::Interpolation => interpolation_point(bracket, z),
        Strategy::Itp => itp_point(
            interpolation_point(bracket, z),
            bracket,
            config,
            minmax_budget,
        ),
    };
    round_toward_midpoint(x, x_half, bracket.a, bracket.b)
}
