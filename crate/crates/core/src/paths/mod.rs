//! Brute-force enumeration of generalized Schröder paths.
//!
//! Every path family is counted by exhaustive depth-first search over step
//! sequences, tallied by diagonal-step count and scaled area. These tables are
//! the ground truth the q-difference solvers are checked against.

mod slope;
mod strip;
mod table;

pub use slope::{count_slope_paths, enum_slope, slope_path_weight, walk_slope_paths};
pub(crate) use strip::stabilize_strip;
pub use strip::{
    enum_strip, enum_strip_stable, enum_strip_window, lemma_bound, strip_path_weight,
    walk_strip_paths,
};
pub use table::{table_to_series, Family, WeightEntry, WeightTable, WeightTableJson};

/// A single lattice step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Right,
    Up,
    Diag,
    /// Only in paths with backwards; never produced by the enumerators here.
    Left,
}

impl Step {
    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::Right => (1, 0),
            Step::Up => (0, 1),
            Step::Diag => (1, 1),
            Step::Left => (-1, 0),
        }
    }
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
