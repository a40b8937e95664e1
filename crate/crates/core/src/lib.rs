//! Exact and certified-numeric machinery for Murphy's condition and the
//! octic family `T(m, A, x)`.
//!
//! The crate is `no_std` and only needs an allocator. Rationals are exact
//! everywhere; floating point only appears in [`numeric`] and [`numfield`],
//! always with an explicit precision.
#![no_std]

extern crate alloc;

pub mod classify;
pub mod error;
pub mod exact;
pub mod families;
pub mod murphy;
pub mod numeric;
pub mod numfield;
pub mod poly;
pub mod quadring;
pub mod ring;
pub mod scan;

pub use error::{DegenerateCase, Error, Result};
pub use exact::{int, rat, Integer, Rational};
pub use poly::Poly;
