//! Exact computation of S_n-equivariant Euler characteristics.
//!
//! The crate evaluates, in exact rational arithmetic, the generating series
//! `sum_n t^n chi^{S_n}(M_{g,n})` for the moduli spaces of smooth genus-g
//! curves with n marked points (g >= 2), together with the generic
//! configuration-space machinery it rests on.
//!
//! Modules, bottom up:
//!
//! - [`arith`]: arbitrary-precision rationals, Moebius/totient, Bernoulli numbers
//! - [`cyclic`]: root-of-unity character sums, residue-tuple counts
//!   N(k; l_1..l_s), connected-monodromy counts, all with brute-force oracles
//! - [`symfunc`]: power-sum polynomials, truncated t-series, symmetric-group
//!   characters, Schur-basis readout
//! - [`confspace`]: equivariant configuration-space series from abstract
//!   fixed-point data, strata combination, and a finite-model oracle
//! - [`moduli`]: orbifold Euler characteristics of M_{h,s}, enumeration of
//!   cyclic-automorphism signatures, and the full genus-g series
//!
//! Everything is a pure value computation: no floating point, no global
//! state, deterministic output independent of thread count. The crate is
//! `no_std` (with `alloc`); IO and formats live in the companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod confspace;
pub mod cyclic;
pub mod error;
pub mod moduli;
pub mod symfunc;

pub use arith::Rational;
pub use error::Error;
