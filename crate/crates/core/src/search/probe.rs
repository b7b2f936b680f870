//! Probe arithmetic: every step that turns a bracket into the next index to
//! query. All functions are pure and work on real-valued positions; only
//! [`round_toward_midpoint`] produces an index.

use super::{Bracket, SearchConfig, Variant};

/// `⌈log2 n⌉` for `n ≥ 1`.
pub(crate) fn ceil_log2(n: usize) -> u32 {
    debug_assert!(n >= 1);
    usize::BITS - (n - 1).leading_zeros()
}

/// The bisection point `(a + b) / 2`, unrounded.
pub fn midpoint(bracket: &Bracket) -> f64 {
    (bracket.a as f64 + bracket.b as f64) / 2.0
}

/// Linear interpolation between `(a, va)` and `(b, vb)` evaluated at `z`.
///
/// Falls back to the midpoint when `va == vb`, which can only happen on lists
/// with repeated keys. The result is clamped into `[a, b]` so that rounding
/// noise in the division never leaves the bracket.
pub fn interpolation_point(bracket: &Bracket, z: f64) -> f64 {
    let (a, b) = (bracket.a as f64, bracket.b as f64);
    if bracket.va == bracket.vb {
        return midpoint(bracket);
    }
    let x = a + (b - a) * (z - bracket.va) / (bracket.vb - bracket.va);
    x.clamp(a, b)
}

/// Moves the interpolation estimate `x_f` toward `x_half` by
/// `κ1·Δ^κ2`, or all the way to `x_half` when the step would overshoot.
///
/// Returns the truncated point and `σ = sign(x_half − x_f)`.
pub fn truncate(x_f: f64, x_half: f64, delta: usize, kappa1: f64, kappa2: f64) -> (f64, i8) {
    let gap = x_half - x_f;
    let sigma: i8 = if gap > 0.0 {
        1
    } else if gap < 0.0 {
        -1
    } else {
        0
    };
    let step = kappa1 * (delta as f64).powf(kappa2);
    if step <= gap.abs() {
        (x_f + f64::from(sigma) * step, sigma)
    } else {
        (x_half, sigma)
    }
}

/// Half-width of the interval around the midpoint in which a probe keeps the
/// worst-case query budget intact.
///
/// `n_ref` is the budget exponent: `⌈log2 n⌉` for [`Variant::Strict`] and
/// `N_max` for [`Variant::Relaxed`]. [`Variant::Local`] ignores it and
/// budgets `⌈log2 Δ⌉` from the current bracket instead. Negative values are
/// clamped to zero, which degrades the step to plain bisection.
pub fn minmax_radius(j: u32, delta: usize, variant: Variant, n_ref: f64) -> f64 {
    let half = delta as f64 / 2.0;
    let r = match variant {
        Variant::Strict | Variant::Relaxed { .. } => (n_ref - f64::from(j) - 1.0).exp2() - half,
        Variant::Local => f64::from(ceil_log2(delta.max(1))).exp2() / 2.0 - half,
    };
    r.max(0.0)
}

/// Projects `x_t` onto `[x_half − r, x_half + r]`.
///
/// `x_t` is expected on the `−σ` side of the midpoint (or on it), so the
/// clamp lands on `x_half − σ·r`.
pub fn project(x_t: f64, x_half: f64, r: f64, sigma: i8) -> f64 {
    if (x_t - x_half).abs() <= r {
        x_t
    } else {
        x_half - f64::from(sigma) * r
    }
}

/// Rounds `x` to an integer on the midpoint side of `x`, then clamps it into
/// the open bracket `(a, b)`.
///
/// A non-integer `x` that equals `x_half` rounds down. `b − a ≥ 2` is
/// required so that the clamp range is non-empty.
pub fn round_toward_midpoint(x: f64, x_half: f64, a: usize, b: usize) -> usize {
    debug_assert!(b >= a + 2);
    let k = if x.fract() == 0.0 {
        x
    } else if x < x_half {
        x.ceil()
    } else {
        x.floor()
    };
    // x is within [a, b] so the cast cannot wrap; the clamp handles the ends.
    (k.max(0.0) as usize).clamp(a + 1, b - 1)
}

/// The real-valued ITP position for a given interpolation estimate.
///
/// Chains truncation, the variant's minmax radius, and projection.
/// `minmax_budget` is `⌈log2 n⌉` of the whole list, not of the bracket.
pub fn itp_point(x_f: f64, bracket: &Bracket, config: &SearchConfig, minmax_budget: u32) -> f64 {
    let x_half = midpoint(bracket);
    let delta = bracket.delta();
    let (x_t, sigma) = truncate(x_f, x_half, delta, config.kappa1, config.kappa2);
    let n_ref = match config.variant {
        Variant::Strict => f64::from(minmax_budget),
        Variant::Relaxed { extra } => f64::from(minmax_budget) + extra,
        Variant::Local => 0.0,
    };
    let r = minmax_radius(bracket.j, delta, config.variant, n_ref);
    project(x_t, x_half, r, sigma)
}
