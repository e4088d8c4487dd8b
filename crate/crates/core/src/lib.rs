//! Exact enumeration of one- and two-vertex maps by genus.
//!
//! The crate computes the face-count series of one-vertex maps (chord
//! diagrams) and two-vertex maps from closed forms, and certifies every
//! closed form against exhaustive enumeration:
//!
//! * [`combinatorics`]: big-integer factorials and binomials, pairings,
//!   cycle counting, binomial-basis polynomials.
//! * [`brute`]: exhaustive oracles over pairings, paired surjections,
//!   canonical and vertical arrays, and arrowed-array substructures.
//! * [`arrays`]: paired/arrowed arrays, substructures and the condition
//!   checkers.
//! * [`transforms`]: the count-preserving substructure reductions and the
//!   labelled-to-canonical map.
//! * [`formulas`]: the closed forms.
//! * [`verify`]: oracle-equality sweeps shared by the CLI and the test suite.

pub mod arrays;
pub mod brute;
pub mod combinatorics;
mod error;
pub mod formulas;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
