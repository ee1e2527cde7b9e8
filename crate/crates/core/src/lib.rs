//! Generalized Schröder paths below rational-slope lines, the q-difference
//! equations their generating functions satisfy, and the torus-knot
//! invariants they match.
//!
//! Everything is exact: integer coefficients are arbitrary precision, and
//! series carry explicit truncation windows in `q` and `x`.

pub mod error;
pub mod knot;
pub mod paths;
pub mod qdiff;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
