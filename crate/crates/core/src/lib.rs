//! Exact coefficients of power sums over arithmetic progressions.
//!
//! `S(n) = r^k + (m+r)^k + ... + ((n-1)m + r)^k` is a polynomial of degree
//! `k + 1` in `n` with no constant term. This crate computes its coefficients
//! by six independent routes, the special numbers they depend on (Stirling,
//! r-Stirling, r-Whitney, A-numbers, Bernoulli), and checks all of them
//! against each other and against brute-force summation.

pub mod analysis;
pub mod bernoulli;
pub mod cli;
pub mod error;
pub mod exact;
pub mod power_sum;
pub mod special;

pub use error::{Error, Result};
pub use exact::Rational;
pub use power_sum::{BinomialForm, Method, PowerSumPolynomial, PowerSumSpec, SimpleVariant};
