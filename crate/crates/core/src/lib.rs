//! Exact characters of integrable highest-weight modules of affine su(r+1).
//!
//! The crate evaluates fermionic q-series for function-space characters,
//! builds generalized Kostka polynomials and their triangular matrices, and
//! combines the two into characters of arbitrary integrable highest-weight
//! modules. Independent oracles (affine and finite Freudenthal recursions,
//! brute-force tensor products) live in [`oracles`].

pub mod char_engine;
pub mod charseries;
pub mod error;
pub mod exec;
pub mod fermionic;
pub mod kostka;
pub mod lie;
pub mod oracles;
pub mod qpoly;
pub mod verify;

pub use charseries::CharSeries;
pub use error::{Error, Result};
pub use exec::Execution;
pub use lie::{AffineWeight, CartanData, DynkinLabel};
pub use qpoly::{QLaurent, TruncatedSeries};
