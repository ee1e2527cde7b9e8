//! Coefficient-wise comparison of series up to a declared window.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

use super::laurent::AQCoeff;
use super::qseries::min_bound;
use super::xseries::XSeries;
use crate::error::{Error, Result};

/// Lexicographically first differing monomial `x^x a^a q^q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub x: usize,
    pub a: i64,
    pub q: i64,
    pub expected: String,
    pub got: String,
}

/// Compares two a-polynomials below the q-exponent `bound` (all exponents when
/// `None`). Returns the first differing `(a, q, expected, got)`.
pub fn first_aq_difference(
    expected: &AQCoeff,
    got: &AQCoeff,
    bound: Option<i64>,
) -> Option<(i64, i64, BigInt, BigInt)> {
    let keys: BTreeSet<i64> = expected
        .terms()
        .map(|t| t.0)
        .chain(got.terms().map(|t| t.0))
        .collect();
    for a in keys {
        let e = expected.coeff(a);
        let g = got.coeff(a);
        let exps: BTreeSet<i64> = e
            .terms()
            .map(|t| t.0)
            .chain(g.terms().map(|t| t.0))
            .collect();
        for q in exps {
            if bound.is_some_and(|b| q >= b) {
                break;
            }
            let (ce, cg) = (e.coeff(q), g.coeff(q));
            if ce != cg {
                return Some((a, q, ce, cg));
            }
        }
    }
    None
}

/// Checks `expected == got` for every x-power both carry, below the q-window
/// `q_window` (or exactly, when `None` and both are exact).
///
/// Fails with [`Error::InsufficientWindow`] if either side is known to a
/// smaller window than requested, so a pass is always a pass-to-window.
pub fn first_discrepancy(
    expected: &XSeries,
    got: &XSeries,
    q_window: Option<i64>,
) -> Result<Option<Discrepancy>> {
    let n = expected.x_order().min(got.x_order());
    for l in 0..n {
        let (e, g) = (expected.coeff(l), got.coeff(l));
        let known = min_bound(e.window(), g.window());
        let bound = match (q_window, known) {
            (Some(req), Some(k)) if k < req => {
                return Err(Error::InsufficientWindow {
                    needed: req,
                    got: k,
                })
            }
            (Some(req), _) => Some(req),
            (None, k) => k,
        };
        if let Some((a, q, ce, cg)) = first_aq_difference(e, g, bound) {
            return Ok(Some(Discrepancy {
                x: l,
                a,
                q,
                expected: ce.to_string(),
                got: cg.to_string(),
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_first_monomial() {
        let a = XSeries::from_coeffs(vec![
            AQCoeff::one(),
            AQCoeff::from_terms([(0, 1, 1), (2, 0, 1)]),
        ]);
        let b = XSeries::from_coeffs(vec![
            AQCoeff::one(),
            AQCoeff::from_terms([(0, 1, 1), (2, 0, 2)]),
        ]);
        let d = first_discrepancy(&a, &b, None).unwrap().unwrap();
        assert_eq!((d.x, d.a, d.q), (1, 2, 0));
        assert_eq!(first_discrepancy(&a, &a, None).unwrap(), None);
    }

    #[test]
    fn window_limits_comparison() {
        let a = XSeries::from_coeffs(vec![AQCoeff::from_terms([(0, 0, 1), (0, 7, 1)])]);
        let b = XSeries::one(1);
        assert!(first_discrepancy(&a, &b, Some(7)).unwrap().is_none());
        assert!(first_discrepancy(&a, &b, Some(8)).unwrap().is_some());
        let w = b.with_q_window(5);
        assert!(matches!(
            first_discrepancy(&a, &w, Some(8)),
            Err(Error::InsufficientWindow { .. })
        ));
    }
}
