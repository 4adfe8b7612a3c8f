//! Exact symmetric-function algebra.
//!
//! - [`partition`]: partitions, the centralizer order z_mu, hook lengths
//! - [`poly`]: polynomials in the power sums p_j and truncated t-series
//! - [`characters`]: Murnaghan-Nakayama characters and the Schur readout
//!
//! The Frobenius convention used throughout: a degree-n coefficient encodes a
//! virtual S_n-representation as ch = (1/n!) sum_sigma p_(cycle type) Tr(sigma),
//! so the one-point configuration series is 1 + p_1 t and ch of the trivial
//! S_1-representation is s_1 = p_1. This normalization is pinned down
//! operationally by the finite-model oracle in [`crate::confspace`].

pub mod characters;
pub mod partition;
pub mod poly;

pub use characters::{mn_character, p_to_schur, specialize_plain_euler, specialize_quotient_euler};
pub use partition::{hook_dimension, partitions_of, z_of, Partition};
pub use poly::{binomial_power, series_mul, PMonomial, PPolynomial, TruncatedSeries};
