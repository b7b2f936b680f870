//! Acceptance suite. Run with `cargo test --test acceptance --release`.
//!
//! Prints one line per criterion and exits nonzero if any fails.

use itp_search::bench::{run_trials, sweep_kappa, write_csv, Source, TrialStats, KAPPA1_GRID, KAPPA2_GRID};
use itp_search::checks;
use itp_search::datasets::{generate, Sequence};
use itp_search::distributions::{sample_list_with, sample_target, trial_rng, DistributionSpec};
use itp_search::{minmax_bound, search, SearchConfig, Variant};
use rand::Rng;
use std::process::ExitCode;
use std::time::{Duration, Instant};

const SEED: u64 = 7;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn strict(k1: f64, k2: f64) -> SearchConfig {
    SearchConfig::itp(k1, k2, Variant::Strict)
}

fn relaxed_one() -> SearchConfig {
    SearchConfig::itp(0.01, 0.83, Variant::Relaxed { extra: 1.0 })
}

fn uniform(n: usize) -> Source<'static> {
    Source::Distribution {
        spec: DistributionSpec::Uniform,
        n,
    }
}

fn all_specs() -> [DistributionSpec; 5] {
    [
        DistributionSpec::Uniform,
        DistributionSpec::gaussian(),
        DistributionSpec::exponential(),
        DistributionSpec::Triangular,
        DistributionSpec::step(),
    ]
}

fn minmax_bound_holds(limit: Duration) -> Outcome {
    let start = Instant::now();
    let exhaustive = checks::minmax_exhaustive(256, SEED);

    // Large lists are reused across several targets to keep the run short.
    let cfg = strict(0.01, 0.83);
    let specs = all_specs();
    let mut violations = 0;
    let mut cases = 0;
    for (n, lists) in [(1_000usize, 10_000usize), (100_000, 1_000), (1 << 20, 100)] {
        let per_list = 10_000 / lists;
        let budget = minmax_bound(n) as usize;
        for t in 0..lists {
            let mut rng = trial_rng(SEED ^ n as u64, t as u64);
            let list = sample_list_with(&specs[t % specs.len()], n, &mut rng).expect("valid spec");
            for _ in 0..per_list {
                let z = sample_target(list.first(), list.last(), &mut rng);
                cases += 1;
                if search(&list, z, &cfg).expect("z in range").queries > budget {
                    violations += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        exhaustive.passed && violations == 0 && elapsed < limit,
        format!(
            "exhaustive n<=256: {}; randomized: {violations} violations in {cases} searches; {:.1?}",
            exhaustive.detail, elapsed
        ),
    )
}

fn sweet_spot_rows() -> Vec<TrialStats> {
    let configs = [strict(0.01, 0.83), strict(0.01, 0.99), strict(0.78, 0.99)];
    run_trials(&uniform(200_000), &configs, 10_000, SEED).expect("valid run")
}

fn sweet_spot(rows: &[TrialStats], elapsed: Duration) -> Outcome {
    let want = [6.87, 7.51, 17.69];
    let ok = rows.iter().zip(want).all(|(r, w)| (r.mean - w).abs() <= 0.5);
    let means: Vec<String> = rows
        .iter()
        .zip(want)
        .map(|(r, w)| format!("({},{}) {:.3} vs {w}", r.config.kappa1, r.config.kappa2, r.mean))
        .collect();
    outcome(
        ok && elapsed < Duration::from_secs(120),
        format!("{}; {:.1?}", means.join(", "), elapsed),
    )
}

fn kappa_grid_shape() -> Outcome {
    let start = Instant::now();
    let table = sweep_kappa(
        &KAPPA1_GRID,
        &KAPPA2_GRID,
        Variant::Strict,
        DistributionSpec::Uniform,
        200_000,
        1_000,
        SEED,
        SearchConfig::DEFAULT_CAP,
    )
    .expect("valid sweep");
    let worst = table.rows.iter().map(|r| r.mean).fold(f64::MIN, f64::max);
    let best = table.rows.iter().map(|r| r.mean).fold(f64::MAX, f64::min);
    let first_column_min = (0..KAPPA2_GRID.len())
        .map(|i2| table.cell(i2, 0).mean)
        .fold(f64::MAX, f64::min);
    let (i2, i1) = table.argmin();
    let elapsed = start.elapsed();
    outcome(
        worst <= 18.0 && first_column_min == best && elapsed < Duration::from_secs(600),
        format!(
            "max cell mean {worst:.3}; minimum {best:.3} at kappa1={} kappa2={}; {:.1?}",
            KAPPA1_GRID[i1], KAPPA2_GRID[i2], elapsed
        ),
    )
}

fn relaxed_tracks_interpolation() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in [1usize << 10, 1 << 14, 1 << 18] {
        let rows = run_trials(&uniform(n), &[SearchConfig::interpolation(), relaxed_one()], 500, SEED)
            .expect("valid run");
        let gap = rows[1].mean - rows[0].mean;
        let bound = minmax_bound(n) as usize + 1;
        ok &= gap <= 1.5 && rows[1].max <= bound;
        parts.push(format!("n={n}: gap {gap:.3}, itp max {}/{bound}", rows[1].max));
    }
    outcome(ok, parts.join("; "))
}

fn distribution_robustness() -> Outcome {
    let n = 1usize << 16;
    let log2n = (n as f64).log2();
    let mut ok = true;
    let mut parts = Vec::new();
    for spec in [
        DistributionSpec::gaussian(),
        DistributionSpec::exponential(),
        DistributionSpec::Triangular,
        DistributionSpec::step(),
    ] {
        let rows = run_trials(
            &Source::Distribution { spec, n },
            &[SearchConfig::interpolation(), SearchConfig::recommended()],
            500,
            SEED,
        )
        .expect("valid run");
        let (interp, itp) = (&rows[0], &rows[1]);
        ok &= itp.mean <= log2n + 1.0;
        if spec.uses_rejection() {
            ok &= interp.max as f64 > log2n;
        }
        parts.push(format!(
            "{}: itp mean {:.3}, interpolation max {}",
            spec.label(),
            itp.mean,
            interp.max
        ));
    }
    outcome(ok, parts.join("; "))
}

fn binary_lower_bound() -> Outcome {
    let cfg = SearchConfig::binary();
    let mut ok = true;
    let mut parts = Vec::new();
    for n in [100usize, 1_000, 100_000] {
        let bound = minmax_bound(n) as f64;
        let (mut miss_total, mut hit_total) = (0usize, 0usize);
        let trials = 10_000;
        for t in 0..trials {
            let mut rng = trial_rng(SEED ^ n as u64, t as u64);
            let list = sample_list_with(&DistributionSpec::Uniform, n, &mut rng).expect("valid spec");
            let z = sample_target(list.first(), list.last(), &mut rng);
            miss_total += search(&list, z, &cfg).expect("z in range").queries;
            let k = rng.random_range(1..=n);
            hit_total += search(&list, list.values()[k], &cfg).expect("z in range").queries;
        }
        let miss = miss_total as f64 / trials as f64;
        let hit = hit_total as f64 / trials as f64;
        ok &= miss >= bound - 1.0 && hit >= bound - 2.0;
        parts.push(format!("n={n}: mean {miss:.3} (>= {}), equality mean {hit:.3} (>= {})", bound - 1.0, bound - 2.0));
    }
    outcome(ok, parts.join("; "))
}

fn sequence_rows() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    let strategies = [SearchConfig::interpolation(), SearchConfig::recommended()];
    for (kind, n) in [
        (Sequence::Fibonacci, 700usize),
        (Sequence::Harmonic, 10_000_000),
        (Sequence::Primes, 664_579),
    ] {
        let d = generate(kind, n).expect("sequence fits");
        let rows = run_trials(&Source::Dataset(&d), &strategies, 1_000, SEED).expect("valid run");
        let (interp, itp) = (&rows[0], &rows[1]);
        let n_eff = d.list.n();
        let bound = minmax_bound(n_eff) as f64;
        ok &= itp.max as f64 <= bound + 1.0;
        if kind == Sequence::Primes {
            ok &= interp.mean < bound && itp.mean < bound;
        } else {
            ok &= 2.0 * itp.mean <= interp.mean;
        }
        parts.push(format!(
            "{}: interpolation {:.3} (max {}, cap hits {}), itp {:.3} (max {})",
            d.name, interp.mean, interp.max, interp.cap_hits, itp.mean, itp.max
        ));
    }
    let elapsed = start.elapsed();
    parts.push(format!("{elapsed:.1?}"));
    outcome(ok && elapsed < Duration::from_secs(300), parts.join("; "))
}

fn from_check(check: checks::Check) -> Outcome {
    outcome(check.passed, format!("{}: {}", check.name, check.detail))
}

fn csv_bytes(rows: &[TrialStats]) -> Vec<u8> {
    let mut buf = Vec::new();
    write_csv(&mut buf, rows).expect("write to memory");
    buf
}

fn main() -> ExitCode {
    let mut results: Vec<(u32, Outcome)> = Vec::new();
    let mut report = |id: u32, o: Outcome| {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] C{id} {}", o.detail);
        results.push((id, o));
    };

    report(1, minmax_bound_holds(Duration::from_secs(60)));

    let start = Instant::now();
    let first = sweet_spot_rows();
    let first_elapsed = start.elapsed();
    report(2, sweet_spot(&first, first_elapsed));

    report(3, kappa_grid_shape());
    report(4, relaxed_tracks_interpolation());
    report(5, distribution_robustness());
    report(6, binary_lower_bound());
    report(7, from_check(checks::oracle_equivalence(100_000, 512, SEED)));

    let minimax = checks::minimax_table(4096);
    let worst = checks::itp_worst_case(1024);
    report(
        8,
        outcome(
            minimax.passed && worst.passed,
            format!("{}: {}; {}: {}", minimax.name, minimax.detail, worst.name, worst.detail),
        ),
    );

    report(9, sequence_rows());
    report(10, from_check(checks::codec_order(100_000, SEED)));

    let second = sweet_spot_rows();
    let (a, b) = (csv_bytes(&first), csv_bytes(&second));
    report(
        11,
        outcome(a == b, format!("two runs of C2, {} CSV bytes each, identical: {}", a.len(), a == b)),
    );

    let failed: Vec<u32> = results.iter().filter(|(_, o)| !o.passed).map(|(id, _)| *id).collect();
    if failed.is_empty() {
        println!("all {} criteria passed", results.len());
        ExitCode::SUCCESS
    } else {
        println!("failed: {failed:?}");
        ExitCode::FAILURE
    }
}
