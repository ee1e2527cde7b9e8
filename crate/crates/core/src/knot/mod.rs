//! Symmetric functions, colored HOMFLY-PT polynomials of torus knots and the
//! wave-function and superpolynomial series attached to `T_{1,f}`.

mod homfly;
pub mod jacobi_trudi;
mod partition;
mod psi;
mod superpoly;
mod symfunc;

pub use homfly::{check_wave_qdiff, eval_pstar, homfly, wave, ResidualHit, TStar};
pub use partition::{partitions_of, Partition};
pub use psi::{psi_substituted, psi_tau_route, psi_wave_route};
pub use superpoly::{check_pbar_qdiff, pbar_residual, superpoly_series, ytilde, ytilde_family};
pub use symfunc::{
    adams_coeffs, adams_coeffs_with_cap, character, powersum_to_schur, powersum_to_schur_with_cap,
    schur_in_powersums, schur_in_powersums_with_cap, Characters, PowerSumVector, SIZE_CAP,
};
