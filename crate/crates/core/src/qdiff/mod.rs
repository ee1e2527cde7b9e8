//! Exact solvers for the q-difference systems satisfied by the path
//! generating functions.

mod slope;
mod strip;

pub use slope::{
    check_simpys, check_slope_equations, slope_constants, solve_slope, SlopeConstants, SlopeFamily,
};
pub use strip::{
    check_yk_ratio, corollary_residual, solve_h, solve_y_family, solve_yinf, yinf_residual,
};
