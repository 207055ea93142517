//! Exact continued fractions of quadratic irrationals, the rational generating
//! functions of their convergents, Lévy constants, and a solver for the
//! three-shift monomial polynomial matrices that appear in the derivation.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use cfgen_core::{cfrac, exact::QuadraticSurd, genfun};
//! let golden = QuadraticSurd::new(-1, 2, 5).unwrap();
//! let cf = cfrac::expand_surd(&golden, 100).unwrap();
//! let gf = genfun::assemble(&cf).unwrap();
//! assert_eq!(gf.g.to_string(), "1 / (1 - z - z^2)");
//! ```
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cfrac;
mod error;
pub mod exact;
pub mod genfun;
pub mod levy;
mod report;
pub mod structmat;

pub use error::{Error, Result};
pub use report::{CheckEntry, CheckReport};
