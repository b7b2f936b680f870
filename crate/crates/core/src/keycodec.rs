//! Order-preserving base-27 encoding of text keys.
//!
//! A key is lowercased and stripped to the ASCII letters `a..=z`, which map
//! to digits `1..=26`. The digit string is read as a base-27 fraction, so
//! `"a" = 1/27`, `"ab" = 1/27 + 2/27²`, and digit `0` never appears. The
//! empty string encodes to `0`.
//!
//! Only the first [`PRECISION_DIGITS`] letters contribute. Ten base-27
//! digits are the most whose last place value (`27^-10 ≈ 4.9e-15`) is still
//! above `f64` epsilon. Keys that agree on their first ten letters encode to
//! the same value and are merged at ingestion.

/// Number of leading letters that contribute to an encoded key.
pub const PRECISION_DIGITS: usize = 10;

const RADIX: u64 = 27;
// 27^10 < 2^53, so every truncated key is an exact integer in an f64.
const SCALE: u64 = RADIX.pow(PRECISION_DIGITS as u32);

/// Lowercases and keeps only `a..=z`. Spaces, digits, punctuation and
/// non-ASCII letters are all dropped.
pub fn normalize(text: &str) -> String {
    text.chars()
        .filter(char::is_ascii_alphabetic)
        .map(|c| c.to_ascii_lowercase())
        .collect()
}

/// Encodes `text` into `[0, 1)`; see the module docs for the scheme.
pub fn encode_base27(text: &str) -> f64 {
    let mut digits = 0u64;
    let mut used = 0;
    for c in text.chars().filter(char::is_ascii_alphabetic) {
        if used == PRECISION_DIGITS {
            break;
        }
        let d = u64::from(c.to_ascii_lowercase() as u8 - b'a' + 1);
        digits = digits * RADIX + d;
        used += 1;
    }
    // Pad to a fixed width so one exact division gives the fraction.
    digits *= RADIX.pow((PRECISION_DIGITS - used) as u32);
    digits as f64 / SCALE as f64
}

/// A text key together with its encoded value.
#[derive(Debug, Clone, PartialEq)]
pub struct EncodedKey {
    pub value: f64,
    pub source: String,
}

impl EncodedKey {
    pub fn new(source: impl Into<String>) -> Self {
        let source = source.into();
        EncodedKey {
            value: encode_base27(&source),
            source,
        }
    }
}
