//! Necklace constants: binary expansions built from rotated Pascal
//! matrices over GF(2), together with the statistics that make them
//! interesting as test beds for equidistribution questions.
//!
//! The crate has four layers:
//!
//! * [`gf2`]: packed bit words, Pascal matrices, rotations, suitable
//!   tuples.
//! * [`constant`]: constant specs (the base "levin" stream plus affine
//!   per-block overrides) and random access into their digit streams.
//! * [`stats`]: truncated point sets from the doubling orbit of a
//!   constant, certified pair correlation counts, star discrepancy, and
//!   an iid baseline for comparison.
//! * [`combinatorics`]: the word-counting machinery that predicts pair
//!   counts structurally, checks the supporting lemmas, and evaluates the
//!   pair correlation lower bound.
//!
//! Everything is exact until the final reporting step: thresholds are
//! rationals, point values are truncations with explicit precision, and
//! pair counts carry an `ambiguous` tally when a truncation cannot decide
//! a pair at the certified precision.

pub mod cli;
pub mod combinatorics;
pub mod constant;
pub mod error;
pub mod gf2;
pub mod limits;
pub mod ratio;
pub mod stats;

pub use constant::{block_length, cumulative_length, ConstantSpec, DigitStream};
pub use error::{Error, Result};
pub use ratio::Ratio;
