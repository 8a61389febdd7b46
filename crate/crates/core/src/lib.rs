//! Finite bilinear biquandles on `(Z_n)^m`: construction, axiom verification,
//! exhaustive search, and the biquandle coloring invariants of oriented
//! classical and virtual links.

pub mod bilinear;
pub mod biquandle;
pub mod error;
pub mod invariant;
pub mod link;
pub mod modular;

pub use error::{Error, Result};
