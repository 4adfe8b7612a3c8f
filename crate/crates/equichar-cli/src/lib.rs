//! Command-line surface for the `equichar` library: series and coefficient
//! tables in JSON/CSV/LaTeX, plus the oracle self-test.

pub mod commands;
pub mod input;
pub mod output;
pub mod selftest;
