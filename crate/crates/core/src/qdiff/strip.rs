//! Strip family `y_k`, its `k -> ∞` limit and the companion series `h`.

use crate::error::{Error, Result};
use crate::series::{first_discrepancy, AQCoeff, Discrepancy, QWindowSeries, XSeries};

fn check_f(f: u32) -> Result<()> {
    if f == 0 {
        return Err(Error::InvalidParameter("f must be >= 1".into()));
    }
    Ok(())
}

/// `y_{k+1}(x) = y_1(q^{2k} x) · y_k(x)`.
fn next_y(y1: &XSeries, yk: &XSeries, k: u32) -> XSeries {
    &y1.qshift(2 * k as i64) * yk
}

/// Exact `y_1, …, y_kmax` through `x^lmax`.
///
/// `y_1` is grown one x-power at a time from
/// `[x^{l+1}] y_1 = q^f [x^l] y_{f+1} + a^2 q^{f-1} [x^l] y_f`,
/// rebuilding the products `y_k` from the part of `y_1` already known.
pub fn solve_y_family(f: u32, kmax: u32, lmax: u32) -> Result<Vec<XSeries>> {
    check_f(f)?;
    if kmax == 0 {
        return Err(Error::InvalidParameter("kmax must be >= 1".into()));
    }
    let order = lmax as usize + 1;
    let kneed = kmax.max(f + 1);
    let top = AQCoeff::monomial(1, 0, f as i64);
    let side = AQCoeff::monomial(1, 2, f as i64 - 1);
    let mut y1 = XSeries::one(order);
    for l in 0..lmax as usize {
        // Coefficients x^0..x^l of y_1 are final; so are those of every y_k.
        let known = y1.truncate(l + 1);
        let fam = family_from(&known, kneed);
        let next = &(&top * fam[f as usize].coeff(l)) + &(&side * fam[f as usize - 1].coeff(l));
        y1.set_coeff(l + 1, next);
    }
    let mut fam = family_from(&y1, kmax);
    fam.truncate(kmax as usize);
    Ok(fam)
}

fn family_from(y1: &XSeries, kmax: u32) -> Vec<XSeries> {
    let mut out = vec![y1.clone()];
    for k in 1..kmax {
        let next = next_y(y1, &out[k as usize - 1], k);
        out.push(next);
    }
    out
}

/// `y_∞` through `x^lmax`, known below `q^window`.
///
/// Iterates `y_{k+1} = y_1(q^{2k}x) y_k` on windowed coefficients until two
/// consecutive terms agree, then substitutes the limit into its functional
/// equation as a consistency check.
pub fn solve_yinf(f: u32, lmax: u32, window: i64) -> Result<XSeries> {
    let y1 = solve_y_family(f, 1, lmax)?.remove(0).with_q_window(window);
    let k_limit = (window + f as i64 + 2).max(2) as u32;
    let mut yk = y1.clone();
    for k in 1..=k_limit {
        let next = next_y(&y1, &yk, k).with_q_window(window);
        if next == yk {
            check_yinf_equation(f, &yk, window)?;
            return Ok(yk);
        }
        yk = next;
    }
    Err(Error::StabilizationFailure { f, k_max: k_limit })
}

fn reciprocal_at(y: &XSeries, qshift: i64) -> Result<XSeries> {
    y.qshift(qshift).x_invert()
}

/// `q^f x / y(q^{2f+2} x) + a^2 q^{f-1} x / y(q^{2f} x) - 1/y(q^2 x) + 1/y(x) = 0`.
pub fn yinf_residual(f: u32, y: &XSeries) -> Result<XSeries> {
    let f = f as i64;
    let a = reciprocal_at(y, 2 * f + 2)?
        .mul_x_pow(1)
        .scale(&AQCoeff::monomial(1, 0, f));
    let b = reciprocal_at(y, 2 * f)?
        .mul_x_pow(1)
        .scale(&AQCoeff::monomial(1, 2, f - 1));
    let c = reciprocal_at(y, 2)?;
    let d = y.x_invert()?;
    Ok(&(&(&a + &b) - &c) + &d)
}

fn check_yinf_equation(f: u32, y: &XSeries, window: i64) -> Result<()> {
    let r = yinf_residual(f, y)?;
    let zero = XSeries::zero(r.x_order());
    if let Some(d) = first_discrepancy(&zero, &r, Some(window))? {
        return Err(Error::FunctionalEquationViolation(format!(
            "y_inf residual at x^{} a^{} q^{}: {}",
            d.x, d.a, d.q, d.got
        )));
    }
    Ok(())
}

/// `h(x)` through `x^lmax`, known below `q^window`, from
/// `[x^l] h · (1 - q^{2l}) = (q^{f+2(f+1)(l-1)} + a^2 q^{f-1+2f(l-1)}) [x^{l-1}] h`.
/// Every coefficient must be non-negative.
pub fn solve_h(f: u32, lmax: u32, window: i64) -> Result<XSeries> {
    check_f(f)?;
    let fi = f as i64;
    let mut coeffs = vec![AQCoeff::one().with_window(window)];
    for l in 1..=lmax as i64 {
        let lead = AQCoeff::from_terms([
            (0, fi + 2 * (fi + 1) * (l - 1), 1),
            (2, fi - 1 + 2 * fi * (l - 1), 1),
        ]);
        let denom = QWindowSeries::from_terms([(0, 1), (2 * l, -1)])
            .with_window(window)
            .invert_unit()?;
        let c = (&lead * &coeffs[l as usize - 1])
            .mul_series(&denom)
            .with_window(window);
        coeffs.push(c);
    }
    let h = XSeries::from_coeffs(coeffs);
    for (l, c) in h.coeffs().iter().enumerate() {
        if !c.all_nonnegative() {
            return Err(Error::NegativeCoefficient(format!("h at x^{l}: {c}")));
        }
    }
    Ok(h)
}

/// `h(x) · y_∞(-x) - 1`, expected to vanish below the common window.
pub fn corollary_residual(h: &XSeries, yinf: &XSeries) -> XSeries {
    let order = h.x_order().min(yinf.x_order());
    &(&h.truncate(order) * &yinf.truncate(order).negate_x()) - &XSeries::one(order)
}

/// First discrepancy in `y_k(x) = y_∞(x) / y_∞(q^{2k} x)` for `k = 1..=kmax`.
pub fn check_yk_ratio(
    f: u32,
    kmax: u32,
    lmax: u32,
    window: i64,
) -> Result<Option<(u32, Discrepancy)>> {
    let yinf = solve_yinf(f, lmax, window)?;
    let fam = solve_y_family(f, kmax, lmax)?;
    for k in 1..=kmax {
        let ratio = &yinf * &reciprocal_at(&yinf, 2 * k as i64)?;
        if let Some(d) = first_discrepancy(&fam[k as usize - 1], &ratio, Some(window))? {
            return Ok(Some((k, d)));
        }
    }
    Ok(None)
}
