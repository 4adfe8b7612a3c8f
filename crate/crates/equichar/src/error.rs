//! Crate-wide error type.
//!
//! Precondition violations that only a buggy caller can trigger panic with a
//! message instead; `Error` is reserved for conditions that honest input can
//! reach (unstable moduli parameters, enumeration budgets, inconsistent
//! fixed-point data, malformed constraints).

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// (h, s) outside the stable range: h=0 needs s>=3, h=1 needs s>=1.
    UnstableModuli { h: u64, s: u64 },
    /// A brute-force enumeration would exceed its size budget.
    BudgetExceeded { size: u128, limit: u128 },
    /// A gcd-class does not divide the modulus it is taken against.
    InvalidGcdClass { modulus: u64, class: u64 },
    /// chi(X_k(g)) not divisible by the orbit length k, so the exponent
    /// chi/k of the configuration series is undefined.
    OrbitChiNotDivisible {
        label: String,
        orbit_len: u64,
        chi: i64,
    },
    /// Group-action or finite-model data fails a structural check.
    InvalidGroupData(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnstableModuli { h, s } => {
                write!(f, "unstable pair (h={h}, s={s}): moduli space is empty or not an orbifold (h=0 needs s>=3, h=1 needs s>=1)")
            }
            Error::BudgetExceeded { size, limit } => {
                write!(f, "enumeration size {size} exceeds budget {limit}")
            }
            Error::InvalidGcdClass { modulus, class } => {
                write!(f, "gcd class {class} does not divide modulus {modulus}")
            }
            Error::OrbitChiNotDivisible {
                label,
                orbit_len,
                chi,
            } => {
                write!(
                    f,
                    "element '{label}': chi of the length-{orbit_len} orbit locus is {chi}, not divisible by {orbit_len}"
                )
            }
            Error::InvalidGroupData(msg) => write!(f, "invalid group data: {msg}"),
        }
    }
}
