//! Truncated Laurent series in `q` with arbitrary-precision integer coefficients.
//!
//! A value is either an exact Laurent polynomial (`window_end() == None`) or a
//! series known only below an exclusive exponent bound. Arithmetic propagates
//! the bound so that no coefficient at or above it is ever reported.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QWindowSeries {
    min_exp: i64,
    window_end: Option<i64>,
    coeffs: Vec<BigInt>,
}

pub(crate) fn add_bound(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a + b),
        _ => None,
    }
}

pub(crate) fn min_bound(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (Some(a), None) | (None, Some(a)) => Some(a),
        (None, None) => None,
    }
}

impl QWindowSeries {
    pub fn zero() -> Self {
        Self {
            min_exp: 0,
            window_end: None,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c.into()])
    }

    /// Exact polynomial with `coeffs[i]` at exponent `min_exp + i`.
    pub fn from_coeffs(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut s = Self {
            min_exp,
            window_end: None,
            coeffs,
        };
        s.normalize();
        s
    }

    /// Exact polynomial from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    /// Parses a small polynomial from integer coefficients starting at `min_exp`.
    pub fn from_ints(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Restricts to exponents below `end`; an exact value becomes windowed.
    pub fn with_window(mut self, end: i64) -> Self {
        self.window_end = min_bound(self.window_end, Some(end));
        self.normalize();
        self
    }

    pub fn window_end(&self) -> Option<i64> {
        self.window_end
    }

    pub fn is_exact(&self) -> bool {
        self.window_end.is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp)
        }
    }

    /// Lower bound on the true valuation: the window end for a windowed zero,
    /// unbounded (`None`) for the exact zero.
    pub(crate) fn valuation_bound(&self) -> Option<i64> {
        if self.is_zero() {
            self.window_end
        } else {
            Some(self.min_exp)
        }
    }

    pub fn max_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        if exp < self.min_exp {
            return BigInt::zero();
        }
        self.coeffs
            .get((exp - self.min_exp) as usize)
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    fn normalize(&mut self) {
        if let Some(w) = self.window_end {
            let keep = (w - self.min_exp).clamp(0, self.coeffs.len() as i64) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = self.window_end.unwrap_or(0);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self {
                min_exp: 0,
                window_end: self.window_end,
                coeffs: Vec::new(),
            }
            .normalized();
        }
        Self {
            min_exp: self.min_exp,
            window_end: self.window_end,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn normalized(mut self) -> Self {
        self.normalize();
        self
    }

    /// Multiplies by `q^e`; the window moves with the exponents.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            min_exp: self.min_exp + e,
            window_end: self.window_end.map(|w| w + e),
            coeffs: self.coeffs.clone(),
        }
    }

    /// Substitutes `q -> q^k` for `k >= 1`.
    pub fn stretch(&self, k: i64) -> Self {
        assert!(k >= 1, "stretch factor must be positive");
        let terms: Vec<(i64, BigInt)> = self.terms().map(|(e, c)| (e * k, c.clone())).collect();
        let mut out = Self::from_terms(terms);
        out.window_end = self.window_end.map(|w| w * k);
        out.normalize();
        out
    }

    /// Divides every coefficient by `k`, failing unless each division is exact.
    pub fn exact_div_int(&self, k: &BigInt) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            let (quot, rem) = c.div_rem(k);
            if !rem.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "coefficient {c} of q^{} by {k}",
                    self.min_exp + i as i64
                )));
            }
            coeffs.push(quot);
        }
        Ok(Self {
            min_exp: self.min_exp,
            window_end: self.window_end,
            coeffs,
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse of a series whose lowest coefficient is `±1`.
    ///
    /// For `f = q^v g` with window `W` the result has window `W - 2v`.
    pub fn invert_unit(&self) -> Result<Self> {
        let Some(v) = self.valuation() else {
            return Err(Error::NotAUnit("0".into()));
        };
        let lead = &self.coeffs[0];
        if !lead.abs().is_one() {
            return Err(Error::NotAUnit(lead.to_string()));
        }
        let Some(w) = self.window_end else {
            if self.coeffs.len() == 1 {
                return Ok(Self::monomial(lead.clone(), -v));
            }
            return Err(Error::UnboundedInverse);
        };
        let rel = (w - v) as usize;
        let mut inv: Vec<BigInt> = Vec::with_capacity(rel);
        inv.push(lead.clone());
        for n in 1..rel {
            let mut acc = BigInt::zero();
            for i in 1..=n.min(self.coeffs.len() - 1) {
                acc += &self.coeffs[i] * &inv[n - i];
            }
            // lead is its own inverse
            inv.push(-(acc * lead));
        }
        Ok(Self {
            min_exp: -v,
            window_end: Some(w - 2 * v),
            coeffs: inv,
        }
        .normalized())
    }

    /// Exact quotient of two exact Laurent polynomials.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if !self.is_exact() || !divisor.is_exact() {
            return Err(Error::NotExact);
        }
        if divisor.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let mut rem: Vec<BigInt> = self.coeffs.clone();
        let d = &divisor.coeffs;
        if rem.len() < d.len() {
            return Err(Error::InexactDivision(format!("({self}) / ({divisor})")));
        }
        let qlen = rem.len() - d.len() + 1;
        let dlead = d.last().unwrap();
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + d.len() - 1];
            let (qk, r) = top.div_rem(dlead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("({self}) / ({divisor})")));
            }
            for (i, di) in d.iter().enumerate() {
                rem[k + i] -= &qk * di;
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("({self}) / ({divisor})")));
        }
        Ok(Self::from_coeffs(self.min_exp - divisor.min_exp, quot))
    }

    /// Specializes `q = 1`; only meaningful in exact mode.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Add for &QWindowSeries {
    type Output = QWindowSeries;

    fn add(self, rhs: &QWindowSeries) -> QWindowSeries {
        let window_end = min_bound(self.window_end, rhs.window_end);
        if self.is_zero() && rhs.is_zero() {
            return QWindowSeries {
                min_exp: 0,
                window_end,
                coeffs: Vec::new(),
            }
            .normalized();
        }
        let lo = match (self.valuation(), rhs.valuation()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => unreachable!(),
        };
        let hi_a = self.max_exp().unwrap_or(lo);
        let hi_b = rhs.max_exp().unwrap_or(lo);
        let mut hi = hi_a.max(hi_b);
        if let Some(w) = window_end {
            hi = hi.min(w - 1);
        }
        if hi < lo {
            return QWindowSeries {
                min_exp: 0,
                window_end,
                coeffs: Vec::new(),
            }
            .normalized();
        }
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for src in [self, rhs] {
            for (i, c) in src.coeffs.iter().enumerate() {
                let e = src.min_exp + i as i64;
                if e >= lo && e <= hi {
                    coeffs[(e - lo) as usize] += c;
                }
            }
        }
        QWindowSeries {
            min_exp: lo,
            window_end,
            coeffs,
        }
        .normalized()
    }
}

impl Neg for &QWindowSeries {
    type Output = QWindowSeries;

    fn neg(self) -> QWindowSeries {
        QWindowSeries {
            min_exp: self.min_exp,
            window_end: self.window_end,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &QWindowSeries {
    type Output = QWindowSeries;

    fn sub(self, rhs: &QWindowSeries) -> QWindowSeries {
        self + &(-rhs)
    }
}

impl Mul for &QWindowSeries {
    type Output = QWindowSeries;

    fn mul(self, rhs: &QWindowSeries) -> QWindowSeries {
        let window_end = min_bound(
            add_bound(self.window_end, rhs.valuation_bound()),
            add_bound(rhs.window_end, self.valuation_bound()),
        );
        if self.is_zero() || rhs.is_zero() {
            return QWindowSeries {
                min_exp: 0,
                window_end,
                coeffs: Vec::new(),
            }
            .normalized();
        }
        let min_exp = self.min_exp + rhs.min_exp;
        let mut len = self.coeffs.len() + rhs.coeffs.len() - 1;
        if let Some(w) = window_end {
            len = len.min((w - min_exp).max(0) as usize);
        }
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] += a * b;
            }
        }
        QWindowSeries {
            min_exp,
            window_end,
            coeffs,
        }
        .normalized()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QWindowSeries {
            type Output = QWindowSeries;
            fn $m(self, rhs: QWindowSeries) -> QWindowSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QWindowSeries {
    type Output = QWindowSeries;
    fn neg(self) -> QWindowSeries {
        -&self
    }
}

impl fmt::Display for QWindowSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                _ => write!(f, "{c}*q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        if let Some(w) = self.window_end {
            write!(f, " + O(q^{w})")?;
        }
        Ok(())
    }
}
