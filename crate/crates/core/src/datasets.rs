//! Lists from files and from generated sequences.

use crate::keycodec::encode_base27;
use crate::{Error, Result, SortedList};
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, PartialEq)]
pub enum Origin {
    File(PathBuf),
    Generated,
}

/// A named list ready for benchmarking.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub name: String,
    pub list: SortedList,
    pub origin: Origin,
    /// Records dropped as duplicates during ingestion.
    pub dedup_count: usize,
}

impl Dataset {
    fn build(name: String, mut values: Vec<f64>, origin: Origin, dedup: bool) -> Result<Self> {
        values.sort_unstable_by(f64::total_cmp);
        let records = values.len();
        if dedup {
            values.dedup();
        }
        Ok(Dataset {
            name,
            dedup_count: records - values.len(),
            list: SortedList::new(values)?,
            origin,
        })
    }
}

fn dataset_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Reads decimal numbers, one per line, or one column of a CSV file.
///
/// `column` is 1-based. Without it every non-blank line must be a single
/// number. Parsing uses `.` as the decimal separator regardless of locale.
pub fn load_numeric(path: impl AsRef<Path>, column: Option<usize>, dedup: bool) -> Result<Dataset> {
    let path = path.as_ref();
    let parse_err = |line: usize, msg: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        msg,
    };
    let parse = |line: usize, field: &str| -> Result<f64> {
        let field = field.trim();
        match field.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(parse_err(line, format!("not a finite decimal number: {field:?}"))),
        }
    };

    let mut values = Vec::new();
    match column {
        None => {
            let text = fs::read_to_string(path)?;
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                values.push(parse(i + 1, line)?);
            }
        }
        Some(0) => return Err(parse_err(0, "column numbers start at 1".into())),
        Some(col) => {
            let mut reader = csv::ReaderBuilder::new()
                .has_headers(false)
                .flexible(true)
                .from_path(path)?;
            for record in reader.records() {
                let record = record?;
                let line = record.position().map_or(0, |p| p.line() as usize);
                let field = record
                    .get(col - 1)
                    .ok_or_else(|| parse_err(line, format!("row has no column {col}")))?;
                values.push(parse(line, field)?);
            }
        }
    }
    if values.is_empty() {
        return Err(Error::Empty(path.to_path_buf()));
    }
    Dataset::build(dataset_name(path), values, Origin::File(path.to_path_buf()), dedup)
}

/// Reads one text key per line, encodes each in base 27, sorts, and merges
/// keys that encode equal.
///
/// A blank line encodes to `0` like any other empty key.
pub fn load_text(path: impl AsRef<Path>) -> Result<Dataset> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    let values: Vec<f64> = text.lines().map(encode_base27).collect();
    if values.is_empty() {
        return Err(Error::Empty(path.to_path_buf()));
    }
    Dataset::build(dataset_name(path), values, Origin::File(path.to_path_buf()), true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sequence {
    Primes,
    Fibonacci,
    Harmonic,
}

impl Sequence {
    pub fn label(self) -> &'static str {
        match self {
            Sequence::Primes => "primes",
            Sequence::Fibonacci => "fibonacci",
            Sequence::Harmonic => "harmonic",
        }
    }
}

/// Largest `n` for which `F_{n+1}` is a finite `f64`.
pub const FIBONACCI_MAX_N: usize = 1470;

/// The first `n + 1` terms of `kind`, deduplicated.
///
/// Primes and harmonic partial sums are strictly increasing. Fibonacci
/// starts `1, 1, …`, so its duplicate `1` is merged and the list ends up
/// one shorter.
pub fn generate(kind: Sequence, n: usize) -> Result<Dataset> {
    if n == 0 {
        return Err(Error::OutOfRange(format!("{} needs n >= 1", kind.label())));
    }
    let terms = n + 1;
    let values = match kind {
        Sequence::Primes => first_primes(terms)?,
        Sequence::Fibonacci => {
            if n > FIBONACCI_MAX_N {
                return Err(Error::OutOfRange(format!(
                    "fibonacci terms past n = {FIBONACCI_MAX_N} overflow f64, got n = {n}"
                )));
            }
            let (mut x, mut y) = (1.0f64, 1.0f64);
            (0..terms)
                .map(|_| {
                    let out = x;
                    (x, y) = (y, x + y);
                    out
                })
                .collect()
        }
        Sequence::Harmonic => {
            let mut sum = 0.0;
            (1..=terms)
                .map(|k| {
                    sum += 1.0 / k as f64;
                    sum
                })
                .collect()
        }
    };
    Dataset::build(format!("{}-{n}", kind.label()), values, Origin::Generated, true)
}

fn first_primes(count: usize) -> Result<Vec<f64>> {
    // p_k < k (ln k + ln ln k) for k >= 6
    let limit = if count < 6 {
        15
    } else {
        let k = count as f64;
        (k * (k.ln() + k.ln().ln())).ceil() as usize + 1
    };
    if limit > 1 << 34 {
        return Err(Error::OutOfRange(format!("{count} primes is too many to sieve")));
    }
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::with_capacity(count);
    for p in 2..=limit {
        if composite[p] {
            continue;
        }
        primes.push(p as f64);
        if primes.len() == count {
            break;
        }
        for multiple in (p * p..=limit).step_by(p) {
            composite[multiple] = true;
        }
    }
    debug_assert_eq!(primes.len(), count);
    Ok(primes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_prefix() {
        let d = generate(Sequence::Primes, 4).unwrap();
        assert_eq!(d.list.values(), &[2.0, 3.0, 5.0, 7.0, 11.0]);
        assert_eq!(d.dedup_count, 0);
        assert_eq!(d.origin, Origin::Generated);
    }

    #[test]
    fn primes_at_scale() {
        let d = generate(Sequence::Primes, 9999).unwrap();
        assert_eq!(d.list.values().len(), 10_000);
        assert_eq!(d.list.last(), 104_729.0);
    }

    #[test]
    fn fibonacci_merges_leading_ones() {
        let d = generate(Sequence::Fibonacci, 4).unwrap();
        assert_eq!(d.list.values(), &[1.0, 2.0, 3.0, 5.0]);
        assert_eq!(d.dedup_count, 1);
        assert!(generate(Sequence::Fibonacci, FIBONACCI_MAX_N).unwrap().list.last().is_finite());
        assert!(generate(Sequence::Fibonacci, FIBONACCI_MAX_N + 1).is_err());
        assert!(generate(Sequence::Fibonacci, 1).is_err());
    }

    #[test]
    fn harmonic_partial_sums() {
        let d = generate(Sequence::Harmonic, 3).unwrap();
        let v = d.list.values();
        // exact: 1, 3/2, 11/6, 25/12
        let want = [1.0, 1.5, 11.0 / 6.0, 25.0 / 12.0];
        for (got, want) in v.iter().zip(want) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn generation_is_deterministic() {
        for kind in [Sequence::Primes, Sequence::Fibonacci, Sequence::Harmonic] {
            assert_eq!(generate(kind, 500).unwrap().list, generate(kind, 500).unwrap().list);
            assert!(generate(kind, 500).unwrap().list.is_distinct());
        }
    }

    #[test]
    fn zero_is_rejected() {
        assert!(generate(Sequence::Primes, 0).is_err());
    }
}
