//! The `T_{1,f}` wave function after `ν -> -a^2/q`, `t -> q^{-2}` and
//! `x -> -ν^{1/2} q^{f-1} x`, computed along two independent routes.

use crate::error::{Error, Result};
use crate::series::{first_discrepancy, AQCoeff, LaurentPoly, QWindowSeries, XSeries};

use super::homfly::wave;

fn check_window(c: &AQCoeff, window: i64) -> Result<()> {
    match c.window() {
        Some(w) if w < window => Err(Error::InsufficientWindow {
            needed: window,
            got: w,
        }),
        _ => Ok(()),
    }
}

/// Route through the exponential of the specialized `t*` generating series:
/// `[x^k] = q^{f(k^2-k) + (f-1)k} [x^k] exp(Σ_j τ_j x^j)` with
/// `j τ_j = (a^{2j} q^{-j} - (-1)^j) / (q^{-j} - q^j)`.
pub fn psi_tau_route(f: u32, lmax: u32, window: i64) -> Result<XSeries> {
    let order = lmax as usize + 1;
    let mut d = vec![AQCoeff::zero()];
    for j in 1..order as i64 {
        let sign = if j % 2 == 0 { -1 } else { 1 };
        let num = AQCoeff::from_terms([(2 * j, -j, 1), (0, 0, sign)]);
        let inv = QWindowSeries::from_terms([(-j, 1), (j, -1)])
            .with_window(window)
            .invert_unit()?;
        d.push(num.mul_series(&inv));
    }
    let e = XSeries::x_exp_from_log_derivative(&XSeries::from_coeffs(d))?;
    let fi = f as i64;
    let out = e.map_coeffs(|k, c| {
        let k = k as i64;
        c.shift(0, fi * (k * k - k) + (fi - 1) * k)
            .with_window(window)
    });
    for c in out.coeffs() {
        check_window(c, window)?;
    }
    Ok(out)
}

/// Route through the HOMFLY-PT wave coefficients `H_{(k)}` of `T_{1,f}`:
/// slot `k` is multiplied by `(-u)^k`, every `u^{2e}` becomes
/// `(-1)^e a^{2e} q^{-e}`, and `σ -> q^{-1}` (so `ρ -> q`).
pub fn psi_wave_route(f: u32, lmax: u32, window: i64) -> Result<XSeries> {
    let work = window + 2 * lmax as i64 + 2;
    let h = wave(1, f, lmax, work)?;
    let fi = f as i64;
    let mut coeffs = Vec::with_capacity(h.len());
    for (k, hk) in h.iter().enumerate() {
        let k = k as i64;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let slot = hk.rho_poly().shift(k, (fi - 1) * k);
        let mut acc = AQCoeff::zero();
        for (e, series) in slot.terms() {
            if e % 2 != 0 {
                return Err(Error::ParityViolation(e));
            }
            let half = e / 2;
            let s = if half % 2 == 0 { sign } else { -sign };
            acc = &acc + &LaurentPoly::monomial_series(e, series.shift(-half).scale(&s.into()));
        }
        // u-exponents reach 2k, so the q-window can drop by up to k.
        let acc = match slot.window() {
            Some(w) => acc.with_window(w - k),
            None => acc,
        }
        .with_window(window);
        check_window(&acc, window)?;
        coeffs.push(acc);
    }
    Ok(XSeries::from_coeffs(coeffs))
}

/// The specialized wave function, required to agree along both routes.
pub fn psi_substituted(f: u32, lmax: u32, window: i64) -> Result<XSeries> {
    let tau = psi_tau_route(f, lmax, window)?;
    let wave = psi_wave_route(f, lmax, window)?;
    if let Some(d) = first_discrepancy(&tau, &wave, Some(window))? {
        return Err(Error::RouteMismatch(format!(
            "x^{} a^{} q^{}: exponential route {} vs wave route {}",
            d.x, d.a, d.q, d.expected, d.got
        )));
    }
    Ok(tau)
}
