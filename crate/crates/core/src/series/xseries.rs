//! Truncated power series in `x` over [`AQCoeff`].

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::laurent::AQCoeff;
use super::qseries::QWindowSeries;
use crate::error::{Error, Result};

/// `Σ_{l < x_order} coeffs[l] x^l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSeries {
    coeffs: Vec<AQCoeff>,
}

impl XSeries {
    pub fn zero(x_order: usize) -> Self {
        Self {
            coeffs: vec![AQCoeff::zero(); x_order],
        }
    }

    pub fn one(x_order: usize) -> Self {
        Self::monomial(x_order, 0, AQCoeff::one())
    }

    /// `c · x^l` truncated at `x_order`.
    pub fn monomial(x_order: usize, l: usize, c: AQCoeff) -> Self {
        let mut out = Self::zero(x_order);
        if l < x_order {
            out.coeffs[l] = c;
        }
        out
    }

    pub fn from_coeffs(coeffs: Vec<AQCoeff>) -> Self {
        Self { coeffs }
    }

    pub fn x_order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, l: usize) -> &AQCoeff {
        &self.coeffs[l]
    }

    pub fn coeffs(&self) -> &[AQCoeff] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<AQCoeff> {
        self.coeffs
    }

    pub fn set_coeff(&mut self, l: usize, c: AQCoeff) {
        self.coeffs[l] = c;
    }

    pub fn truncate(&self, x_order: usize) -> Self {
        Self {
            coeffs: self.coeffs.iter().take(x_order).cloned().collect(),
        }
    }

    /// Restricts every coefficient to the q-window `end`.
    pub fn with_q_window(&self, end: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.clone().with_window(end))
                .collect(),
        }
    }

    /// Smallest q-window over all coefficients (`None` when fully exact).
    pub fn q_window(&self) -> Option<i64> {
        self.coeffs.iter().filter_map(AQCoeff::window).min()
    }

    pub fn is_exact(&self) -> bool {
        self.coeffs.iter().all(AQCoeff::is_exact)
    }

    pub fn map_coeffs(&self, f: impl Fn(usize, &AQCoeff) -> AQCoeff) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(l, c)| f(l, c))
                .collect(),
        }
    }

    /// Substitutes `x -> q^e x`.
    pub fn qshift(&self, e: i64) -> Self {
        self.map_coeffs(|l, c| c.shift(0, e * l as i64))
    }

    /// Substitutes `x -> c·x`.
    pub fn x_scale(&self, c: &AQCoeff) -> Self {
        let mut power = AQCoeff::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for f in &self.coeffs {
            coeffs.push(f * &power);
            power = &power * c;
        }
        Self { coeffs }
    }

    /// Substitutes `x -> -x`.
    pub fn negate_x(&self) -> Self {
        self.map_coeffs(|l, c| if l % 2 == 1 { -c } else { c.clone() })
    }

    /// Multiplies by `x^k`, dropping what falls off the truncation.
    pub fn mul_x_pow(&self, k: usize) -> Self {
        let n = self.x_order();
        let mut out = Self::zero(n);
        for l in 0..n.saturating_sub(k) {
            out.coeffs[l + k] = self.coeffs[l].clone();
        }
        out
    }

    /// Divides by `x`; the constant term must vanish. The result has one less
    /// known order.
    pub fn div_x(&self) -> Result<Self> {
        if self.coeffs.first().is_some_and(|c| !c.is_zero()) {
            return Err(Error::NonZeroConstant);
        }
        Ok(Self {
            coeffs: self.coeffs.iter().skip(1).cloned().collect(),
        })
    }

    pub fn scale(&self, c: &AQCoeff) -> Self {
        self.map_coeffs(|_, f| f * c)
    }

    /// Multiplicative inverse of a series with constant term exactly 1.
    pub fn x_invert(&self) -> Result<Self> {
        let n = self.x_order();
        if n == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstant);
        }
        let mut inv: Vec<AQCoeff> = Vec::with_capacity(n);
        inv.push(self.coeffs[0].clone());
        for l in 1..n {
            let mut acc = AQCoeff::zero();
            for j in 1..=l {
                acc = &acc + &(&self.coeffs[j] * &inv[l - j]);
            }
            inv.push(-&acc);
        }
        Ok(Self { coeffs: inv })
    }

    /// `exp(F)` given `D = x·F'(x)` (so `[x^j]D = j·[x^j]F`), via
    /// `k·E_k = Σ_{j=1..k} D_j E_{k-j}`. Each division by `k` must be exact.
    pub fn x_exp_from_log_derivative(d: &XSeries) -> Result<Self> {
        let n = d.x_order();
        if n == 0 {
            return Ok(d.clone());
        }
        if !d.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstant);
        }
        let mut e: Vec<AQCoeff> = Vec::with_capacity(n);
        e.push(AQCoeff::one());
        for k in 1..n {
            let mut acc = AQCoeff::zero();
            for j in 1..=k {
                acc = &acc + &(&d.coeffs[j] * &e[k - j]);
            }
            e.push(acc.exact_div_int(&BigInt::from(k))?);
        }
        Ok(Self { coeffs: e })
    }

    /// Formal exponential of a series with zero constant term.
    pub fn x_exp(&self) -> Result<Self> {
        if self.coeffs.first().is_some_and(|c| !c.is_zero()) {
            return Err(Error::NonZeroConstant);
        }
        let d = self.map_coeffs(|l, c| c.scale(&BigInt::from(l)));
        Self::x_exp_from_log_derivative(&d)
    }

    /// Specializes `a = q = 1` coefficient-wise; exact series only.
    pub fn totals(&self) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .map(|c| c.eval_var_at_one().eval_at_one())
            .collect()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(AQCoeff::all_nonnegative)
    }

    /// Builds the series from one q-series per x-power (no `a` dependence).
    pub fn from_q_series(coeffs: Vec<QWindowSeries>) -> Self {
        Self {
            coeffs: coeffs.into_iter().map(AQCoeff::constant).collect(),
        }
    }
}

impl Add for &XSeries {
    type Output = XSeries;

    fn add(self, rhs: &XSeries) -> XSeries {
        let n = self.x_order().min(rhs.x_order());
        XSeries {
            coeffs: (0..n).map(|l| &self.coeffs[l] + &rhs.coeffs[l]).collect(),
        }
    }
}

impl Sub for &XSeries {
    type Output = XSeries;

    fn sub(self, rhs: &XSeries) -> XSeries {
        let n = self.x_order().min(rhs.x_order());
        XSeries {
            coeffs: (0..n).map(|l| &self.coeffs[l] - &rhs.coeffs[l]).collect(),
        }
    }
}

impl Neg for &XSeries {
    type Output = XSeries;

    fn neg(self) -> XSeries {
        XSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &XSeries {
    type Output = XSeries;

    fn mul(self, rhs: &XSeries) -> XSeries {
        let n = self.x_order().min(rhs.x_order());
        let mut coeffs = vec![AQCoeff::zero(); n];
        for i in 0..n {
            if is_exact_zero(&self.coeffs[i]) {
                continue;
            }
            for j in 0..n - i {
                if is_exact_zero(&rhs.coeffs[j]) {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        XSeries { coeffs }
    }
}

fn is_exact_zero(c: &AQCoeff) -> bool {
    c.is_zero() && c.is_exact()
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for XSeries {
            type Output = XSeries;
            fn $m(self, rhs: XSeries) -> XSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn x_plus(c: AQCoeff, order: usize) -> XSeries {
        &XSeries::one(order) + &XSeries::monomial(order, 1, c)
    }

    #[test]
    fn identity_and_x_squared() {
        let f = x_plus(AQCoeff::from_terms([(2, 0, 1), (0, 1, 1)]), 5);
        assert_eq!(&XSeries::one(5) * &f, f);
        let x = XSeries::monomial(5, 1, AQCoeff::one());
        assert_eq!(&x * &x, XSeries::monomial(5, 2, AQCoeff::one()));
    }

    #[test]
    fn inverse_pair() {
        let f = x_plus(AQCoeff::from_terms([(2, 0, 1), (0, 1, 1)]), 6);
        let g = f.x_invert().unwrap();
        assert_eq!(&f * &g, XSeries::one(6));
        let geo = x_plus(AQCoeff::monomial(-1, 0, 0), 4).x_invert().unwrap();
        assert_eq!(geo, XSeries::from_coeffs(vec![AQCoeff::one(); 4]));
        assert_eq!(XSeries::one(3).x_invert().unwrap(), XSeries::one(3));
    }

    #[test]
    fn non_unit_constant_rejected() {
        let f = &XSeries::monomial(3, 0, AQCoeff::monomial(1, 2, 0))
            + &XSeries::monomial(3, 1, AQCoeff::one());
        assert!(matches!(f.x_invert(), Err(Error::NonUnitConstant)));
    }

    #[test]
    fn qshift_and_scale() {
        let f = x_plus(AQCoeff::monomial(1, 2, 0), 3);
        assert_eq!(f.qshift(2), x_plus(AQCoeff::monomial(1, 2, 2), 3));
        assert_eq!(f.qshift(0), f);
        assert_eq!(f.qshift(2).qshift(-2), f);
        let g = x_plus(AQCoeff::one(), 3);
        assert_eq!(
            g.x_scale(&AQCoeff::monomial(-1, 0, 0)),
            x_plus(AQCoeff::monomial(-1, 0, 0), 3)
        );
        assert_eq!(g.x_scale(&AQCoeff::one()), g);
        let c = AQCoeff::monomial(1, 0, 3);
        let c_inv = AQCoeff::monomial(1, 0, -3);
        assert_eq!(f.x_scale(&c).x_scale(&c_inv), f);
    }

    #[test]
    fn exp_of_zero_and_linear() {
        assert_eq!(XSeries::zero(4).x_exp().unwrap(), XSeries::one(4));
        // exp(2x) = 1 + 2x + 2x^2 + (4/3)x^3: the cube term is not integral
        let f = XSeries::monomial(3, 1, AQCoeff::monomial(2, 0, 0));
        let e = f.x_exp().unwrap();
        assert_eq!(e.coeff(2), &AQCoeff::monomial(2, 0, 0));
        let f4 = XSeries::monomial(4, 1, AQCoeff::monomial(2, 0, 0));
        assert!(matches!(f4.x_exp(), Err(Error::InexactDivision(_))));
        // exp(q x) stops being integral at x^2
        let t = XSeries::monomial(3, 1, AQCoeff::monomial(1, 0, 1));
        assert!(matches!(t.x_exp(), Err(Error::InexactDivision(_))));
    }

    #[test]
    fn div_x_requires_vanishing_constant() {
        assert!(XSeries::one(3).div_x().is_err());
        let x = XSeries::monomial(3, 1, AQCoeff::one());
        assert_eq!(x.div_x().unwrap(), XSeries::one(2));
    }
}
