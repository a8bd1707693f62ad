//! Duadic double circulant (DDC) codes over GF(2), GF(3), GF(4), GF(5) and GF(7).
//!
//! The crate covers the whole pipeline: duadic splittings of an odd modulus
//! ([`splitting`]), pure and bordered double circulant generator matrices built
//! from them ([`ddc`]), exact minimum distance, weight distributions and duality
//! classification ([`codeprops`]), and exhaustive table scans over all
//! construction parameters ([`search`]).
//!
//! The `parallel` feature (on by default) runs codeword enumeration and table
//! scans on the rayon thread pool; without it everything runs sequentially and
//! produces identical results.

pub mod codeprops;
pub mod ddc;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod par;
pub mod search;
pub mod splitting;

pub use error::{Error, Result};
pub use gf::{Field, FieldElement};
pub use linalg::{Matrix, Vector};
