//! Values in `u = ν^{1/2}` and `σ = t^{1/(2m)}`.
//!
//! The σ-direction is expanded around `t = ∞`: each `u`-coefficient is stored
//! as a [`QWindowSeries`] in `ρ = σ^{-1}`, so a window `W` means every
//! σ-exponent `> -W` is known. Public methods speak in σ-exponents.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::laurent::LaurentPoly;
use super::qseries::QWindowSeries;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuTSeries {
    grid: u32,
    body: LaurentPoly,
}

impl NuTSeries {
    pub fn zero(grid: u32) -> Self {
        Self {
            grid,
            body: LaurentPoly::zero(),
        }
    }

    pub fn one(grid: u32) -> Self {
        Self {
            grid,
            body: LaurentPoly::one(),
        }
    }

    /// `c · u^u_exp · σ^sigma_exp`.
    pub fn monomial(grid: u32, c: impl Into<BigInt>, u_exp: i64, sigma_exp: i64) -> Self {
        Self {
            grid,
            body: LaurentPoly::monomial(c, u_exp, -sigma_exp),
        }
    }

    /// Wraps a polynomial in `u` whose coefficients are series in `ρ = σ^{-1}`.
    pub fn from_rho_poly(grid: u32, body: LaurentPoly) -> Self {
        Self { grid, body }
    }

    /// The σ-grid denominator `2m`.
    pub fn grid(&self) -> u32 {
        self.grid
    }

    pub fn m(&self) -> u32 {
        self.grid / 2
    }

    /// Underlying polynomial in `u` over series in `ρ = σ^{-1}`.
    pub fn rho_poly(&self) -> &LaurentPoly {
        &self.body
    }

    /// Exclusive bound `W` in ρ: σ-exponents `<= -W` are unknown.
    pub fn rho_window(&self) -> Option<i64> {
        self.body.window()
    }

    pub fn with_rho_window(self, end: i64) -> Self {
        Self {
            grid: self.grid,
            body: self.body.with_window(end),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn mul_monomial(&self, u_exp: i64, sigma_exp: i64) -> Self {
        Self {
            grid: self.grid,
            body: self.body.shift(u_exp, -sigma_exp),
        }
    }

    /// Multiplies by `t^{num/den}`; the exponent must land on the σ-grid.
    pub fn mul_t_power(&self, num: i64, den: i64) -> Result<Self> {
        let grid = self.grid as i64;
        if (num * grid) % den != 0 {
            return Err(Error::GridViolation {
                exp: num * grid / den,
                m: self.m(),
            });
        }
        Ok(self.mul_monomial(0, num * grid / den))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            grid: self.grid,
            body: self.body.scale(c),
        }
    }

    pub fn exact_div_int(&self, k: &BigInt) -> Result<Self> {
        Ok(Self {
            grid: self.grid,
            body: self.body.exact_div_int(k)?,
        })
    }

    /// Substitutes `u -> u^{-1}`.
    pub fn invert_u(&self) -> Self {
        Self {
            grid: self.grid,
            body: self.body.map_var(|k| -k),
        }
    }

    /// `(u exponent, σ exponent, coefficient)` triples.
    pub fn monomials(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> + '_ {
        self.body.monomials().map(|(u, r, c)| (u, -r, c))
    }

    /// Fails unless every σ-exponent is a multiple of `m`, i.e. the value
    /// lies on the `t^{1/2}` grid.
    pub fn check_half_t_grid(&self) -> Result<()> {
        let m = self.m() as i64;
        for (_, e, _) in self.monomials() {
            if e % m != 0 {
                return Err(Error::GridViolation {
                    exp: e,
                    m: self.m(),
                });
            }
        }
        Ok(())
    }

    /// u-coefficient as a series in ρ.
    pub fn u_coeff(&self, u_exp: i64) -> QWindowSeries {
        self.body.coeff(u_exp)
    }

    fn check_grid(&self, other: &Self) {
        assert_eq!(
            self.grid, other.grid,
            "mixing sigma grids {} and {}",
            self.grid, other.grid
        );
    }
}

impl Add for &NuTSeries {
    type Output = NuTSeries;
    fn add(self, rhs: &NuTSeries) -> NuTSeries {
        self.check_grid(rhs);
        NuTSeries {
            grid: self.grid,
            body: &self.body + &rhs.body,
        }
    }
}

impl Sub for &NuTSeries {
    type Output = NuTSeries;
    fn sub(self, rhs: &NuTSeries) -> NuTSeries {
        self.check_grid(rhs);
        NuTSeries {
            grid: self.grid,
            body: &self.body - &rhs.body,
        }
    }
}

impl Mul for &NuTSeries {
    type Output = NuTSeries;
    fn mul(self, rhs: &NuTSeries) -> NuTSeries {
        self.check_grid(rhs);
        NuTSeries {
            grid: self.grid,
            body: &self.body * &rhs.body,
        }
    }
}

impl Neg for &NuTSeries {
    type Output = NuTSeries;
    fn neg(self) -> NuTSeries {
        NuTSeries {
            grid: self.grid,
            body: -&self.body,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_monomials_round_trip() {
        let v = NuTSeries::monomial(4, 3, 1, -6);
        let terms: Vec<_> = v.monomials().map(|(u, e, c)| (u, e, c.clone())).collect();
        assert_eq!(terms, vec![(1, -6, BigInt::from(3))]);
        assert!(v.check_half_t_grid().is_ok());
        assert!(NuTSeries::monomial(4, 1, 0, 3).check_half_t_grid().is_err());
    }

    #[test]
    fn t_power_on_grid() {
        let one = NuTSeries::one(6);
        assert_eq!(
            one.mul_t_power(1, 2).unwrap(),
            NuTSeries::monomial(6, 1, 0, 3)
        );
        assert!(one.mul_t_power(1, 4).is_err());
    }
}
