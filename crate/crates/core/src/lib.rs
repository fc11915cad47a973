//! Exact Riordan-array arithmetic over the rationals.
//!
//! The crate works with truncated formal power series whose coefficients are
//! arbitrary-precision rationals. On top of that kernel it provides the
//! classical `(u, v)` description of Riordan arrays, the central `{g, f}`
//! description whose entries are `[x^(n-k)] g(x) f(x)^n`, conversions between
//! the two, and the exponential variant.
//!
//! Everything is `no_std` with `alloc`; the command-line front end lives in a
//! separate crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod central;
pub mod error;
pub mod exponential;
pub mod expr;
pub mod riordan;
pub mod series;
pub mod triangle;

#[cfg(test)]
mod testing;

pub use central::CentralPair;
pub use error::{Error, Result};
pub use exponential::{ExpCentralPair, ExpRiordanPair};
pub use riordan::{AzPair, RiordanPair};
pub use series::{Rat, Series};
pub use triangle::Triangle;
