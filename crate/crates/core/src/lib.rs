//! Output-sensitive edit distance.
//!
//! The Landau-Vishkin frontier search ([`bfs`]) runs over any [`LcpOracle`]:
//! a suffix-array index ([`suffix`]) or rolling-hash tables ([`hash`]), full
//! or blocked. A divide-and-conquer solver ([`dac`]) combines boundary
//! shortest-path matrices inside a diagonal stripe whose width doubles until
//! the answer certifies itself. [`oracle`] holds the quadratic baselines used
//! for testing, and [`harness`] drives generation, timing and CSV reporting.
//!
//! ```
//! use edist::bfs::{bfs_edit_distance, LcpBackend};
//! use edist::hash::HashConfig;
//!
//! let out = bfs_edit_distance(b"kitten", b"sitting", LcpBackend::PrefixHash, &HashConfig::default());
//! assert_eq!(out.distance, 3);
//! ```

pub mod bfs;
pub mod dac;
pub mod error;
pub mod harness;
pub mod hash;
pub mod lcp;
pub mod matrix;
pub mod oracle;
pub mod sequence;
pub mod suffix;

pub use error::{Error, Result};
pub use lcp::{LcpOracle, NaiveLcp};
pub use matrix::{DistMatrix, INF};
