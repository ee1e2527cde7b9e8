//! Colored HOMFLY-PT polynomials of torus knots and their one-row wave
//! functions, in the variables `u = ν^{1/2}` and `σ = t^{1/(2m)}`.
//!
//! Every `window` argument below is a ρ-window (`ρ = σ^{-1}`): terms
//! `σ^e` with `-e < window` are known.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::partition::{partitions_of, Partition};
use super::symfunc::{adams_coeffs, Characters, SIZE_CAP};
use crate::error::{Error, Result};
use crate::series::{LaurentPoly, NuTSeries, QWindowSeries};

/// `p_k(t*) = (u^k - u^{-k}) / (σ^{km} - σ^{-km})`, known below `ρ^window`.
pub fn eval_pstar(k: u32, m: u32, window: i64) -> Result<NuTSeries> {
    let km = (k * m) as i64;
    let denom = QWindowSeries::from_terms([(-km, 1), (km, -1)]).with_window(window - 2 * km);
    let inv = denom.invert_unit()?;
    let body = &LaurentPoly::monomial_series(k as i64, inv.clone())
        - &LaurentPoly::monomial_series(-(k as i64), inv);
    Ok(NuTSeries::from_rho_poly(2 * m, body))
}

/// Products `p_ρ(t*)` for one grid and window.
pub struct TStar {
    m: u32,
    window: i64,
    single: HashMap<u32, NuTSeries>,
    products: HashMap<Partition, NuTSeries>,
    chars: Characters,
}

impl TStar {
    pub fn new(m: u32, window: i64) -> Self {
        Self {
            m,
            window,
            single: HashMap::new(),
            products: HashMap::new(),
            chars: Characters::new(),
        }
    }

    fn pk(&mut self, k: u32) -> Result<NuTSeries> {
        if let Some(v) = self.single.get(&k) {
            return Ok(v.clone());
        }
        let v = eval_pstar(k, self.m, self.window)?;
        self.single.insert(k, v.clone());
        Ok(v)
    }

    pub fn power_sum(&mut self, rho: &Partition) -> Result<NuTSeries> {
        if let Some(v) = self.products.get(rho) {
            return Ok(v.clone());
        }
        let mut acc = NuTSeries::one(2 * self.m);
        for &k in rho.parts() {
            acc = &acc * &self.pk(k)?;
        }
        self.products.insert(rho.clone(), acc.clone());
        Ok(acc)
    }

    /// `s_μ(t*) = Σ_ρ χ^μ(ρ)/z_ρ p_ρ(t*)`, summed over the common
    /// denominator `|μ|!` and divided out exactly.
    pub fn schur(&mut self, mu: &Partition) -> Result<NuTSeries> {
        let n = mu.size();
        if n > SIZE_CAP {
            return Err(Error::SizeCapExceeded {
                size: n,
                cap: SIZE_CAP,
            });
        }
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        let mut acc = NuTSeries::zero(2 * self.m);
        for rho in partitions_of(n) {
            let chi = self.chars.get(mu, &rho);
            if chi == 0 {
                continue;
            }
            let weight = BigInt::from(chi) * (&fact / rho.z());
            acc = &acc + &self.power_sum(&rho)?.scale(&weight);
        }
        acc.exact_div_int(&fact)
    }
}

/// `H_λ = u^{n(m-1)|λ|} Σ_μ C^λ_{μ,m} σ^{-κ_μ n} s_μ(t*)`, asserted to lie on
/// the `t^{1/2}` grid.
pub fn homfly(lambda: &Partition, m: u32, n: u32, window: i64) -> Result<NuTSeries> {
    let mut tstar = TStar::new(m, window);
    homfly_with(lambda, m, n, &mut tstar)
}

fn homfly_with(lambda: &Partition, m: u32, n: u32, tstar: &mut TStar) -> Result<NuTSeries> {
    if m == 0 || n == 0 || crate::paths::gcd(m, n) != 1 {
        return Err(Error::InvalidSlope { m, n });
    }
    let mut acc = NuTSeries::zero(2 * m);
    if lambda.is_empty() {
        return Ok(NuTSeries::one(2 * m));
    }
    for (mu, c) in adams_coeffs(lambda, m)? {
        let term = tstar
            .schur(&mu)?
            .mul_monomial(0, -mu.kappa() * n as i64)
            .scale(&c);
        acc = &acc + &term;
    }
    let out = acc.mul_monomial((n * (m - 1) * lambda.size()) as i64, 0);
    out.check_half_t_grid()?;
    Ok(out)
}

/// `H_{(k)}` for `0 <= k <= kmax`.
pub fn wave(m: u32, n: u32, kmax: u32, window: i64) -> Result<Vec<NuTSeries>> {
    if m * kmax > SIZE_CAP {
        return Err(Error::SizeCapExceeded {
            size: m * kmax,
            cap: SIZE_CAP,
        });
    }
    let mut tstar = TStar::new(m, window);
    (0..=kmax)
        .map(|k| homfly_with(&Partition::row(k), m, n, &mut tstar))
        .collect()
}

/// First nonzero monomial of a functional-equation residual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualHit {
    pub equation: &'static str,
    pub x: usize,
    pub u: i64,
    pub sigma: i64,
    pub value: String,
}

fn first_hit(
    equation: &'static str,
    x: usize,
    r: &NuTSeries,
    window: i64,
) -> Result<Option<ResidualHit>> {
    if let Some(w) = r.rho_window() {
        if w < window {
            return Err(Error::InsufficientWindow {
                needed: window,
                got: w,
            });
        }
    }
    let hit = r
        .monomials()
        .filter(|(_, sigma, _)| -sigma < window)
        .min_by_key(|(u, sigma, _)| (*u, -sigma))
        .map(|(u, sigma, c)| ResidualHit {
            equation,
            x,
            u,
            sigma,
            value: c.to_string(),
        });
    Ok(hit)
}

/// Substitutes the `T_{1,f}` wave coefficients into the equations for
/// `A(x) = Σ s_{(k)}(t*) x^k` and for `ψ(x)`, with `σ = t^{1/2}`:
///
/// `u σ x A(σ^2 x) - u^{-1} σ x A(x) - A(σ^2 x) + A(x) = 0`,
/// `u σ x ψ(σ^{2-2f} x) - u^{-1} σ x ψ(σ^{-2f} x) - ψ(σ^2 x) + ψ(x) = 0`.
///
/// Returns the first nonzero residual below `ρ^window`.
pub fn check_wave_qdiff(f: u32, kmax: u32, window: i64) -> Result<Option<ResidualHit>> {
    let work = window + 2 * kmax as i64 + 2;
    let h = wave(1, f, kmax, work)?;
    let mut tstar = TStar::new(1, work);
    let a = (0..=kmax)
        .map(|k| tstar.schur(&Partition::row(k)))
        .collect::<Result<Vec<_>>>()?;
    let fi = f as i64;
    for k in 0..=kmax as usize {
        let kk = k as i64;
        let (mut ra, mut rp) = (
            &a[k] - &a[k].mul_monomial(0, 2 * kk),
            &h[k] - &h[k].mul_monomial(0, 2 * kk),
        );
        if k > 0 {
            let (ap, hp) = (&a[k - 1], &h[k - 1]);
            ra = &ra + &(&ap.mul_monomial(1, 1 + 2 * (kk - 1)) - &ap.mul_monomial(-1, 1));
            rp = &rp
                + &(&hp.mul_monomial(1, 1 + (2 - 2 * fi) * (kk - 1))
                    - &hp.mul_monomial(-1, 1 - 2 * fi * (kk - 1)));
        }
        if let Some(hit) = first_hit("A", k, &ra, window)? {
            return Ok(Some(hit));
        }
        if let Some(hit) = first_hit("psi", k, &rp, window)? {
            return Ok(Some(hit));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pstar_single_box_unit_grid() {
        // (u - u^{-1}) (ρ + ρ^3 + ...) with ρ = σ^{-1}
        let p = eval_pstar(1, 1, 8).unwrap();
        let geo = QWindowSeries::from_ints(1, &[1, 0, 1, 0, 1, 0, 1]).with_window(8);
        assert_eq!(p.u_coeff(1), geo);
        assert_eq!(p.u_coeff(-1), -&geo);
        assert_eq!(p.invert_u(), -&p);
    }

    #[test]
    fn empty_partition_is_one() {
        assert_eq!(
            homfly(&Partition::empty(), 2, 3, 10).unwrap(),
            NuTSeries::one(4)
        );
    }

    #[test]
    fn single_box_unit_slope() {
        for f in 1..=3 {
            assert_eq!(
                homfly(&Partition::row(1), 1, f, 12).unwrap(),
                eval_pstar(1, 1, 12).unwrap()
            );
        }
    }

    #[test]
    fn torus_knot_grid() {
        for (m, n) in [(2, 3), (3, 4)] {
            for lam in [Partition::row(1), Partition::row(2)] {
                homfly(&lam, m, n, 24).unwrap();
            }
        }
    }

    #[test]
    fn wave_equations_unit_strip() {
        assert_eq!(check_wave_qdiff(1, 4, 16).unwrap(), None);
        assert_eq!(check_wave_qdiff(3, 4, 16).unwrap(), None);
    }
}
