//! Ground-truth engines that do not share code paths with the search loop.
//!
//! - [`linear_scan`] answers a query by reading every key.
//! - [`minimax_depth`] computes the best possible worst case by dynamic
//!   programming over bracket widths.
//! - [`strategy_worst_depth`] plays an adversary against a probe rule and
//!   returns the longest run the rule can be forced into.
//! - [`average_depth_c2`] and [`binary_tree_profile`] give the closed form
//!   and a direct count of the average binary-search depth when the answer
//!   is uniform over the cells and every search ends on an exact hit.
//!
//! All of these are desk-scale; they refuse inputs past their budgets.

use crate::search::{itp_point, midpoint, round_toward_midpoint, Bracket};
use crate::{minmax_bound, Error, Result, SearchConfig, SortedList, Strategy};
use num_rational::Ratio;
use std::collections::HashMap;

pub const MINIMAX_DEPTH_LIMIT: usize = 4096;
pub const WORST_DEPTH_LIMIT: usize = 1024;

/// Largest `k` with `values[k] ≤ z`, found by reading every entry.
pub fn linear_scan(list: &SortedList, z: f64) -> Result<usize> {
    let v = list.values();
    if !(z >= list.first() && z <= list.last()) {
        return Err(Error::TargetOutOfRange {
            z,
            lo: list.first(),
            hi: list.last(),
        });
    }
    let mut best = 0;
    for (k, &x) in v.iter().enumerate() {
        if x <= z {
            best = k;
        }
    }
    Ok(best)
}

/// Minimum over all probe rules of the worst-case query count for a
/// bracket of width `n`.
pub fn minimax_depth(n: usize) -> Result<u32> {
    if n == 0 || n > MINIMAX_DEPTH_LIMIT {
        return Err(Error::OverBudget {
            what: "minimax_depth",
            n,
            limit: MINIMAX_DEPTH_LIMIT,
        });
    }
    Ok(minimax_depths(n)[n])
}

/// `depth[w]` for every width `0 < w ≤ max_n` (index 0 is unused).
///
/// `depth(1) = 0` and `depth(w) = 1 + min_k max(depth(k), depth(w − k))`.
pub fn minimax_depths(max_n: usize) -> Vec<u32> {
    let mut depth = vec![0u32; max_n + 1];
    for w in 2..=max_n {
        depth[w] = 1 + (1..w)
            .map(|k| depth[k].max(depth[w - k]))
            .min()
            .expect("w >= 2 has an interior split");
    }
    depth
}

/// A probe rule as seen by the adversary.
///
/// Rules must be shift-invariant: the choice may depend on the bracket
/// width and the iteration counter but not on where the bracket sits.
/// `probe_offsets` returns every offset `k − a` in `1..delta` that the rule
/// might pick for some key configuration.
pub trait ProbeRule {
    fn probe_offsets(&self, delta: usize, j: u32) -> Vec<usize>;
}

/// Bisection with the floor tie rule.
pub struct BinaryRule;

impl ProbeRule for BinaryRule {
    fn probe_offsets(&self, delta: usize, _j: u32) -> Vec<usize> {
        vec![delta / 2]
    }
}

/// Always probes `a + 1`: a sequential scan.
pub struct LeftmostRule;

impl ProbeRule for LeftmostRule {
    fn probe_offsets(&self, _delta: usize, _j: u32) -> Vec<usize> {
        vec![1]
    }
}

/// The ITP probe for every interpolation estimate the keys could produce.
///
/// The estimate `x_f` ranges over all of `[a, b]` as the keys vary, so the
/// rule sweeps a grid of quarter steps plus the points just around the
/// truncation breakpoints `x_half ± κ1·Δ^κ2`.
pub struct ItpRule {
    config: SearchConfig,
    budget: u32,
}

impl ItpRule {
    /// The rule for lists with `n` cells.
    pub fn new(config: SearchConfig, n: usize) -> Self {
        ItpRule {
            config,
            budget: minmax_bound(n),
        }
    }
}

impl ProbeRule for ItpRule {
    fn probe_offsets(&self, delta: usize, j: u32) -> Vec<usize> {
        let bracket = Bracket {
            a: 0,
            b: delta,
            va: 0.0,
            vb: 1.0,
            j,
        };
        let x_half = midpoint(&bracket);
        let step = self.config.kappa1 * (delta as f64).powf(self.config.kappa2);
        let eps = 1e-9;
        let mut estimates: Vec<f64> = (0..=4 * delta).map(|i| i as f64 / 4.0).collect();
        for centre in [x_half - step, x_half + step] {
            estimates.extend([centre - eps, centre, centre + eps]);
        }
        estimates.extend([x_half - eps, x_half + eps]);

        let mut seen = vec![false; delta];
        for x_f in estimates {
            let x_f = x_f.clamp(0.0, delta as f64);
            let x = itp_point(x_f, &bracket, &self.config, self.budget);
            seen[round_toward_midpoint(x, x_half, 0, delta)] = true;
        }
        (1..delta).filter(|&k| seen[k]).collect()
    }
}

/// Memoised adversarial depth for one rule.
///
/// Every probe is answered with whichever comparison result leaves the
/// longer run. An exact hit ends a run immediately, so it never produces
/// the worst case and is not explored.
pub struct WorstDepth<R> {
    rule: R,
    memo: HashMap<(usize, u32), u32>,
}

impl<R: ProbeRule> WorstDepth<R> {
    pub fn new(rule: R) -> Self {
        WorstDepth {
            rule,
            memo: HashMap::new(),
        }
    }

    /// Worst query count starting from a bracket of width `delta` after `j`
    /// probes.
    pub fn depth(&mut self, delta: usize, j: u32) -> u32 {
        if delta <= 1 {
            return 0;
        }
        if let Some(&d) = self.memo.get(&(delta, j)) {
            return d;
        }
        let offsets = self.rule.probe_offsets(delta, j);
        assert!(!offsets.is_empty(), "rule produced no probe for width {delta}");
        let mut worst = 0;
        for k in offsets {
            assert!(0 < k && k < delta, "probe offset {k} outside (0, {delta})");
            let left = self.depth(k, j + 1);
            let right = self.depth(delta - k, j + 1);
            worst = worst.max(1 + left.max(right));
        }
        self.memo.insert((delta, j), worst);
        worst
    }
}

/// Worst-case query count of `rule` on lists with `n` cells.
pub fn strategy_worst_depth<R: ProbeRule>(rule: R, n: usize) -> Result<u32> {
    if n == 0 || n > WORST_DEPTH_LIMIT {
        return Err(Error::OverBudget {
            what: "strategy_worst_depth",
            n,
            limit: WORST_DEPTH_LIMIT,
        });
    }
    Ok(WorstDepth::new(rule).depth(n, 0))
}

/// Convenience: the adversarial rule matching a search configuration.
pub fn rule_for(config: SearchConfig, n: usize) -> Box<dyn ProbeRule> {
    match config.strategy {
        Strategy::Binary => Box::new(BinaryRule),
        Strategy::Itp => Box::new(ItpRule::new(config, n)),
        // Interpolation can be steered anywhere inside the bracket.
        Strategy::Interpolation => Box::new(AnyInterior),
    }
}

struct AnyInterior;

impl ProbeRule for AnyInterior {
    fn probe_offsets(&self, delta: usize, _j: u32) -> Vec<usize> {
        (1..delta).collect()
    }
}

impl ProbeRule for Box<dyn ProbeRule> {
    fn probe_offsets(&self, delta: usize, j: u32) -> Vec<usize> {
        (**self).probe_offsets(delta, j)
    }
}

/// Maximum and exact average of a set of query counts.
#[derive(Debug, Clone, PartialEq)]
pub struct DepthProfile {
    pub max_depth: u32,
    pub avg_depth: Ratio<u64>,
    pub outcomes: u64,
}

/// Closed-form average binary-search depth when every search ends on an
/// exact hit and the answer is uniform on `1..=n`.
///
/// With `N = ⌈log2 n⌉` and `n = 2^(N−1) + q`, this is
/// `N − 1 − (n − N − 2q)/(n − 1)`.
pub fn average_depth_c2(n: usize) -> f64 {
    assert!(n >= 2, "average_depth_c2 needs n >= 2");
    let big_n = minmax_bound(n);
    let q = n - (1usize << (big_n - 1));
    let delta = (n as f64 - f64::from(big_n) - 2.0 * q as f64) / (n as f64 - 1.0);
    f64::from(big_n) - 1.0 - delta
}

/// Direct count over the binary search tree: bisect `0..n` for every answer
/// `k* ∈ 1..=n` with an exact hit at `k*`, and average the probe counts.
///
/// `k* = n` is the right endpoint, which is never probed; that run ends
/// when the bracket reaches `(n − 1, n)`.
pub fn binary_tree_profile(n: usize) -> DepthProfile {
    assert!(n >= 1);
    let mut total = 0u64;
    let mut max_depth = 0u32;
    for target in 1..=n {
        let (mut a, mut b, mut probes) = (0usize, n, 0u32);
        while b - a > 1 {
            let m = (a + b) / 2;
            probes += 1;
            if m == target {
                break;
            }
            if m < target {
                a = m;
            } else {
                b = m;
            }
        }
        total += u64::from(probes);
        max_depth = max_depth.max(probes);
    }
    DepthProfile {
        max_depth,
        avg_depth: Ratio::new(total, n as u64),
        outcomes: n as u64,
    }
}
