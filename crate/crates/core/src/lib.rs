//! Prefix orders on permutation groups generated by 3-cycles and k-cycles.
//!
//! The central object is the order `x <= y  iff  l(y) = l(x) + l(x^{-1} y)`
//! where `l` is word length over a conjugation-closed generating family. For
//! 3-cycles on the alternating group the interval below the long cycle of odd
//! degree is the poset of noncrossing partitions with odd blocks and odd gaps.
//!
//! Products follow `(xy)(p) = x(y(p))` throughout.

pub mod alt;
pub mod error;
pub mod hurwitz;
pub mod mdiv;
pub mod noncrossing;
pub mod perm;
pub mod poly;
pub mod poset;
pub mod prefix;
pub mod tables;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{CycleGenerator, GeneratorFamily, Permutation};
pub use poly::ExactPolynomial;
pub use poset::FinitePoset;
pub use prefix::{GeneratorContext, IntervalPoset, LengthMode};
