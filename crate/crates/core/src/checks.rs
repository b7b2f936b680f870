//! Desk-scale invariant suites behind `itp-search verify`.

use crate::distributions::{sample_list, sample_target, trial_rng, DistributionSpec};
use crate::keycodec::{encode_base27, normalize, PRECISION_DIGITS};
use crate::oracle::{linear_scan, minimax_depths, ItpRule, WorstDepth};
use crate::{minmax_bound, search, SearchConfig, SortedList, Variant};
use rand::Rng;

/// Outcome of one suite.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, failures: usize, cases: usize) -> Self {
        Check {
            name,
            passed: failures == 0,
            detail: format!("{failures} violations in {cases} cases"),
        }
    }
}

/// Lists of `n` cells with very different key shapes.
pub fn shape_lists(n: usize, seed: u64) -> Vec<SortedList> {
    let mut lists = vec![
        SortedList::new((0..=n).map(|k| k as f64 / n as f64).collect()).expect("linear keys"),
        // geometric keys starve interpolation
        SortedList::new((0..=n).map(|k| (k as f64 / n as f64 * 40.0).exp2() - 1.0).collect())
            .expect("geometric keys"),
    ];
    let specs = [
        DistributionSpec::Uniform,
        DistributionSpec::gaussian(),
        DistributionSpec::exponential(),
        DistributionSpec::Triangular,
        DistributionSpec::step(),
    ];
    for (i, spec) in specs.iter().enumerate() {
        lists.push(sample_list(spec, n, seed ^ ((i as u64) << 32) ^ n as u64).expect("valid spec"));
    }
    lists
}

/// Every key plus the midpoint of every cell, so each outcome and each
/// exact hit is reached.
pub fn cell_targets(list: &SortedList) -> Vec<f64> {
    let v = list.values();
    let mut z: Vec<f64> = v.to_vec();
    z.extend(v.windows(2).map(|w| w[0] + (w[1] - w[0]) / 2.0));
    z
}

/// ITP query counts against their budgets for every `n` in `2..=max_n`.
pub fn minmax_exhaustive(max_n: usize, seed: u64) -> Check {
    let variants = [
        (Variant::Strict, 0),
        (Variant::Local, 0),
        (Variant::Relaxed { extra: 1.0 }, 1),
        (Variant::Relaxed { extra: 0.99 }, 1),
    ];
    let (mut cases, mut failures) = (0, 0);
    for n in 2..=max_n {
        for list in shape_lists(n, seed) {
            for z in cell_targets(&list) {
                for (variant, extra) in variants {
                    let cfg = SearchConfig::itp(0.01, 0.83, variant);
                    let q = search(&list, z, &cfg).expect("z in range").queries;
                    cases += 1;
                    if q > (minmax_bound(n) + extra) as usize {
                        failures += 1;
                    }
                }
            }
        }
    }
    Check::new("itp query budget (exhaustive targets)", failures, cases)
}

/// All strategies against the linear scan on random distinct-key lists.
pub fn oracle_equivalence(instances: usize, max_n: usize, seed: u64) -> Check {
    let strategies = [
        SearchConfig::binary(),
        SearchConfig::interpolation().with_cap(u32::MAX),
        SearchConfig::itp(0.01, 0.83, Variant::Strict),
        SearchConfig::recommended(),
    ];
    let specs = [DistributionSpec::Uniform, DistributionSpec::exponential(), DistributionSpec::step()];
    let mut failures = 0;
    for t in 0..instances {
        let mut rng = trial_rng(seed, t as u64);
        let n = rng.random_range(1..=max_n);
        let spec = specs[t % specs.len()];
        let list = crate::distributions::sample_list_with(&spec, n, &mut rng).expect("valid spec");
        if !list.is_distinct() {
            continue;
        }
        let z = if t % 4 == 0 {
            list.values()[rng.random_range(0..n)]
        } else {
            sample_target(list.first(), list.last(), &mut rng)
        };
        let want = linear_scan(&list, z).expect("z in range");
        for cfg in &strategies {
            if search(&list, z, cfg).expect("z in range").k_star != want {
                failures += 1;
            }
        }
    }
    Check::new("strategies agree with linear scan", failures, instances * strategies.len())
}

/// Dynamic-programming minimax depth against `⌈log2 n⌉`.
pub fn minimax_table(max_n: usize) -> Check {
    let depths = minimax_depths(max_n);
    let failures = (2..=max_n).filter(|&n| depths[n] != minmax_bound(n)).count();
    Check::new("minimax depth equals ceil(log2 n)", failures, max_n - 1)
}

/// Adversarial worst case of the strict ITP rule.
pub fn itp_worst_case(max_n: usize) -> Check {
    let cfg = SearchConfig::itp(0.01, 0.83, Variant::Strict);
    let mut failures = 0;
    let mut n = 2;
    while n <= max_n {
        // The strict rule depends on n only through ceil(log2 n), so one
        // memo table serves a whole power-of-two band.
        let budget = minmax_bound(n);
        let band_end = (1usize << budget).min(max_n);
        let mut table = WorstDepth::new(ItpRule::new(cfg, n));
        for m in n..=band_end {
            if table.depth(m, 0) > budget {
                failures += 1;
            }
        }
        n = band_end + 1;
    }
    Check::new("adversarial strict itp depth within ceil(log2 n)", failures, max_n - 1)
}

/// Base-27 order against normalised lexicographic order on random pairs.
pub fn codec_order(pairs: usize, seed: u64) -> Check {
    let mut rng = trial_rng(seed, 0);
    let alphabet: Vec<char> = "abcdefghijklmnopqrstuvwxyzABCXYZ -'.é".chars().collect();
    let random_key = |rng: &mut rand_chacha::ChaCha8Rng| -> String {
        let len = rng.random_range(0..14);
        (0..len).map(|_| alphabet[rng.random_range(0..alphabet.len())]).collect()
    };
    let mut failures = 0;
    for _ in 0..pairs {
        let s = random_key(&mut rng);
        let t = random_key(&mut rng);
        let ns: String = normalize(&s).chars().take(PRECISION_DIGITS).collect();
        let nt: String = normalize(&t).chars().take(PRECISION_DIGITS).collect();
        let ok = match ns.cmp(&nt) {
            std::cmp::Ordering::Less => encode_base27(&s) < encode_base27(&t),
            std::cmp::Ordering::Equal => encode_base27(&s) == encode_base27(&t),
            std::cmp::Ordering::Greater => encode_base27(&s) > encode_base27(&t),
        };
        if !ok {
            failures += 1;
        }
    }
    Check::new("base-27 encoding preserves order", failures, pairs)
}

/// The suites run by `verify`, at sizes that finish in seconds.
pub fn desk_suite(seed: u64) -> Vec<Check> {
    vec![
        minmax_exhaustive(128, seed),
        oracle_equivalence(20_000, 512, seed),
        minimax_table(1024),
        itp_worst_case(256),
        codec_order(20_000, seed),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for check in [
            minmax_exhaustive(24, 1),
            oracle_equivalence(500, 64, 1),
            minimax_table(64),
            itp_worst_case(40),
            codec_order(500, 1),
        ] {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn targets_cover_every_cell() {
        let list = SortedList::new(vec![0.0, 0.5, 2.0]).unwrap();
        let z = cell_targets(&list);
        assert_eq!(z.len(), 5);
        for k in 0..2 {
            assert!(z.iter().any(|&t| t > list.values()[k] && t < list.values()[k + 1]));
        }
    }
}
