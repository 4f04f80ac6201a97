//! Exact unbiased estimation of products of moments and cumulants for samples
//! drawn without replacement from a finite population, and the infinite
//! population limits.
//!
//! Everything is exact: the coefficient field is rational functions in the
//! sample size `n` and population size `N` over big rationals, data values are
//! big rationals, and verification is exhaustive enumeration, never tolerance
//! comparison.  The central fact the engine is built around is the inversion
//! principle: the matrix that maps population moment products to expected
//! sample moment products inverts by swapping the symbols n and N.

pub mod carver;
pub mod catalog;
pub mod cli;
pub mod bernoulli;
pub mod data;
pub mod dstar;
pub mod errata;
pub mod estimate;
pub mod matrices;
pub mod moments;
pub mod oracle;
pub mod poisson;
pub mod polykay;
pub mod error;
pub mod partition;
pub mod ratfunc;
pub mod symfun;

pub use error::{Error, Result};
