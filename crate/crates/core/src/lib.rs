//! Searching sorted lists with a bounded query budget.
//!
//! Three probe rules share one bracketing loop: binary search, interpolation
//! search, and the ITP method (interpolation, truncation, projection). ITP
//! starts from the interpolation estimate, nudges it toward the midpoint, and
//! then clamps it into the minmax interval around the midpoint. The result
//! keeps the `⌈log2 n⌉` worst case of binary search while averaging close to
//! interpolation search on well-behaved data.
//!
//! ```
//! use itp_search::{search, SearchConfig, SortedList};
//!
//! let list = SortedList::new(vec![0.0, 0.1, 0.25, 0.3, 0.7, 1.0]).unwrap();
//! let out = search(&list, 0.5, &SearchConfig::recommended()).unwrap();
//! assert_eq!(out.k_star, 3);
//! assert!(out.queries <= 4);
//! ```
//!
//! Alongside the search itself the crate ships:
//!
//! - [`oracle`]: linear scan and exhaustive minimax enumeration used as ground truth,
//! - [`distributions`]: seeded list and target generators,
//! - [`keycodec`]: order-preserving base-27 encoding of text keys,
//! - [`datasets`]: file ingestion and generated integer/real sequences,
//! - [`bench`]: the Monte Carlo harness and its CSV output.

pub mod bench;
pub mod checks;
pub mod datasets;
pub mod distributions;
mod error;
pub mod keycodec;
pub mod oracle;
pub mod search;

pub use error::{Error, Result};
pub use search::{
    minmax_bound, search, Bracket, SearchConfig, SearchOutcome, SortedList, Strategy, Variant,
};
