//! Signed magic arrays: construction, verification and existence decisions.
//!
//! A signed magic array `SMA(m,n;s,t)` is an `m x n` array with `s` filled
//! cells in every row and `t` in every column, whose entries are exactly the
//! zero-symmetric set of size `ms` and whose rows and columns all sum to zero.

pub mod decide;
pub mod error;
pub mod format;
pub mod grid;
pub mod oracle;
pub mod providers;
pub mod rectangles;
pub mod spec;
pub mod squares;
pub mod tight;
pub mod verify;

pub use decide::{Decision, Method, Verdict};
pub use error::{Error, Result};
pub use grid::SignedGrid;
pub use oracle::{count_all, search_one, search_one_counted, OracleVerdict};
pub use providers::{Providers, SearchLimits};
pub use spec::{symbol_set, ArraySpec, SymbolSet};
pub use verify::{diagonal_width, verify, VerificationReport};
