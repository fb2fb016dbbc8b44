//! Binary de Bruijn sequences by the cycle-joining method.
//!
//! The starting point is an LFSR whose characteristic polynomial is a
//! product of distinct irreducible polynomials over GF(2). Its cycles are
//! described through the cycles of the factor registers, conjugate pairs
//! between cycles are found by combining per-factor solutions under
//! generalized CRT conditions, and every spanning tree of the resulting
//! adjacency graph yields one de Bruijn sequence.

pub mod adjacency;
pub mod cli;
mod construction;
pub mod crt;
pub mod cycles;
pub mod error;
pub mod gf2;
pub mod joiner;
pub mod lfsr;

pub use construction::{validate_factors, Construction, DEFAULT_MAX_DEGREE};
pub use error::{Error, Result};
