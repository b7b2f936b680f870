use itp_search::distributions::{sample_list, DistributionSpec};

/// Kolmogorov-Smirnov distance between the interior keys and `cdf`.
fn ks_distance(spec: DistributionSpec, cdf: impl Fn(f64) -> f64) -> f64 {
    let n = 10_000;
    let list = sample_list(&spec, n, 11).unwrap();
    let interior = &list.values()[1..n];
    let m = interior.len() as f64;
    interior
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            (f - i as f64 / m).abs().max((f - (i + 1) as f64 / m).abs())
        })
        .fold(0.0, f64::max)
}

#[test]
fn uniform_fits() {
    assert!(ks_distance(DistributionSpec::Uniform, |x| x) < 0.02);
}

#[test]
fn triangular_fits() {
    assert!(ks_distance(DistributionSpec::Triangular, |x| x * x) < 0.02);
}

#[test]
fn step_fits() {
    let cdf = |x: f64| if x < 0.75 { x / 0.75 * 0.5 } else { 0.5 + (x - 0.75) / 0.25 * 0.5 };
    assert!(ks_distance(DistributionSpec::step(), cdf) < 0.02);
}

#[test]
fn exponential_fits_truncated_law() {
    let cdf = |x: f64| (1.0 - (-x).exp()) / (1.0 - (-1.0f64).exp());
    assert!(ks_distance(DistributionSpec::exponential(), cdf) < 0.02);
}

#[test]
fn gaussian_keys_cluster() {
    let list = sample_list(&DistributionSpec::gaussian(), 10_000, 3).unwrap();
    let v = &list.values()[1..10_000];
    let mean = v.iter().sum::<f64>() / v.len() as f64;
    let sd = (v.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / v.len() as f64).sqrt();
    assert!(sd < 0.011, "sd {sd}");
}
