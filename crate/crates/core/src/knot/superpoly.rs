//! Generating series `P̄(x) = Σ_r P̄_r x^r` of specialized unreduced
//! superpolynomials of `T_{1,f}`, and the ratios `ỹ_i` built from it.

use crate::error::{Error, Result};
use crate::series::{first_discrepancy, AQCoeff, Discrepancy, QWindowSeries, XSeries};

/// `P̄_{r+1} = -q^{(2r+1)f} (a^2 + q^{2r+1}) / (1 - q^{2r+2}) · P̄_r`, `P̄_0 = 1`.
pub fn superpoly_series(f: u32, rmax: u32, window: i64) -> Result<XSeries> {
    let fi = f as i64;
    let mut coeffs = vec![AQCoeff::one().with_window(window)];
    for r in 0..rmax as i64 {
        let factor = AQCoeff::from_terms([
            (2, (2 * r + 1) * fi, -1),
            (0, (2 * r + 1) * fi + 2 * r + 1, -1),
        ]);
        let inv = QWindowSeries::from_terms([(0, 1), (2 * r + 2, -1)])
            .with_window(window)
            .invert_unit()?;
        let next = (&factor * &coeffs[r as usize])
            .mul_series(&inv)
            .with_window(window);
        coeffs.push(next);
    }
    Ok(XSeries::from_coeffs(coeffs))
}

/// Residual of
/// `q^{f+1} x P̄(q^{2f+2} x) - P̄(q^2 x) + q^f a^2 x P̄(q^{2f} x) + P̄(x) = 0`.
pub fn pbar_residual(f: u32, p: &XSeries) -> XSeries {
    let fi = f as i64;
    let a = p
        .qshift(2 * fi + 2)
        .mul_x_pow(1)
        .scale(&AQCoeff::monomial(1, 0, fi + 1));
    let b = p.qshift(2);
    let c = p
        .qshift(2 * fi)
        .mul_x_pow(1)
        .scale(&AQCoeff::monomial(1, 2, fi));
    &(&(&a - &b) + &c) + p
}

/// First nonzero residual monomial below `q^window`, if any.
pub fn check_pbar_qdiff(f: u32, rmax: u32, window: i64) -> Result<Option<Discrepancy>> {
    let p = superpoly_series(f, rmax, window)?;
    let r = pbar_residual(f, &p);
    first_discrepancy(&XSeries::zero(r.x_order()), &r, Some(window))
}

/// `ỹ_1, …, ỹ_{f+1}` with `ỹ_i(x) = P̄(q^{2i-1} x) / P̄(q^{-1} x)`, through
/// `x^lmax` and below `q^window`. The recursion
/// `ỹ_i = ỹ_1(q^{2(i-1)} x) ỹ_{i-1}` is checked on the way.
pub fn ytilde_family(f: u32, lmax: u32, window: i64) -> Result<Vec<XSeries>> {
    if f == 0 {
        return Err(Error::InvalidParameter("f must be >= 1".into()));
    }
    // P̄(q^{-1} x) loses one q-power per x-power.
    let work = window + 2 * (lmax as i64 + 1);
    let p = superpoly_series(f, lmax, work)?;
    let denom = p.qshift(-1).x_invert()?;
    let mut out: Vec<XSeries> = Vec::with_capacity(f as usize + 1);
    for i in 1..=f as i64 + 1 {
        let y = (&p.qshift(2 * i - 1) * &denom).with_q_window(window);
        if let Some(w) = y
            .coeffs()
            .iter()
            .filter_map(AQCoeff::window)
            .min()
            .filter(|&w| w < window)
        {
            return Err(Error::InsufficientWindow {
                needed: window,
                got: w,
            });
        }
        if i > 1 {
            let rec = (&out[0].qshift(2 * (i - 1)) * &out[i as usize - 2]).with_q_window(window);
            if let Some(d) = first_discrepancy(&y, &rec, Some(window))? {
                return Err(Error::RouteMismatch(format!(
                    "ratio vs recursion for i = {i} at x^{} a^{} q^{}: {} vs {}",
                    d.x, d.a, d.q, d.expected, d.got
                )));
            }
        }
        out.push(y);
    }
    Ok(out)
}

/// `ỹ_i` for `1 <= i <= f + 1`.
pub fn ytilde(f: u32, i: u32, lmax: u32, window: i64) -> Result<XSeries> {
    if i == 0 || i > f + 1 {
        return Err(Error::InvalidParameter(format!(
            "ytilde index i = {i} outside 1..={}",
            f + 1
        )));
    }
    Ok(ytilde_family(f, lmax, window)?.swap_remove(i as usize - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_terms() {
        for f in 1..=3u32 {
            let p = superpoly_series(f, 1, 16).unwrap();
            assert!(p.coeff(0) == &AQCoeff::one().with_window(16));
            let inv = QWindowSeries::from_terms([(0, 1), (2, -1)])
                .with_window(16)
                .invert_unit()
                .unwrap();
            let want = AQCoeff::from_terms([(2, f as i64, -1), (0, f as i64 + 1, -1)])
                .mul_series(&inv)
                .with_window(16);
            assert_eq!(p.coeff(1), &want);
        }
    }

    #[test]
    fn equation_holds() {
        assert_eq!(check_pbar_qdiff(1, 5, 30).unwrap(), None);
        assert_eq!(check_pbar_qdiff(3, 4, 30).unwrap(), None);
    }

    #[test]
    fn ytilde_lowest_terms() {
        // f = 1, i = 1: [x^1] = a^2 + q
        let y = ytilde(1, 1, 2, 20).unwrap();
        assert_eq!(
            y.coeff(1),
            &AQCoeff::from_terms([(2, 0, 1), (0, 1, 1)]).with_window(20)
        );
        assert_eq!(y.coeff(0), &AQCoeff::one().with_window(20));
    }
}
