//! Exact coefficient domains and truncated formal series.

mod compare;
mod json;
mod laurent;
mod nut;
mod qseries;
mod xseries;

pub use compare::{first_aq_difference, first_discrepancy, Discrepancy};
pub use json::{
    xseries_to_value, AQTermJson, NuTSeriesJson, SigmaTermJson, UTermJson, XCoeffJson, XSeriesJson,
};
pub use laurent::{AQCoeff, LaurentPoly};
pub use nut::NuTSeries;
pub use qseries::QWindowSeries;
pub use xseries::XSeries;

/// Default q-window.
pub const DEFAULT_Q_WINDOW: i64 = 48;
/// Default x truncation order.
pub const DEFAULT_X_ORDER: usize = 8;
