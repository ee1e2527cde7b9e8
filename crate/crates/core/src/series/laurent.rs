//! Laurent polynomials in one auxiliary variable with [`QWindowSeries`]
//! coefficients. Used for the framing variable `a` ([`AQCoeff`]) and for the
//! `u = ν^{1/2}` direction of knot-side values.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use super::qseries::{add_bound, min_bound, QWindowSeries};
use crate::error::Result;

/// A polynomial in `a` whose coefficients are q-series. Every stored term is
/// nonzero and shares the polynomial's q-window.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    window: Option<i64>,
    terms: BTreeMap<i64, QWindowSeries>,
}

/// Coefficient domain of every x-series: polynomial in `a`, series in `q`.
pub type AQCoeff = LaurentPoly;

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(QWindowSeries::one())
    }

    pub fn constant(c: QWindowSeries) -> Self {
        Self::monomial_series(0, c)
    }

    pub fn monomial_series(var_exp: i64, c: QWindowSeries) -> Self {
        let mut out = Self {
            window: c.window_end(),
            terms: BTreeMap::new(),
        };
        if !c.is_zero() {
            out.terms.insert(var_exp, c);
        }
        out
    }

    /// `c · a^var_exp · q^q_exp`, exact.
    pub fn monomial(c: impl Into<BigInt>, var_exp: i64, q_exp: i64) -> Self {
        Self::monomial_series(var_exp, QWindowSeries::monomial(c, q_exp))
    }

    /// Exact polynomial from `(a-exponent, q-exponent, coefficient)` triples.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut grouped: BTreeMap<i64, Vec<(i64, BigInt)>> = BTreeMap::new();
        for (a, q, c) in terms {
            grouped.entry(a).or_default().push((q, c.into()));
        }
        let mut out = Self::zero();
        for (a, qs) in grouped {
            let s = QWindowSeries::from_terms(qs);
            if !s.is_zero() {
                out.terms.insert(a, s);
            }
        }
        out
    }

    pub(crate) fn from_map(window: Option<i64>, terms: BTreeMap<i64, QWindowSeries>) -> Self {
        let mut out = Self { window, terms };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        let w = self.window;
        let terms = std::mem::take(&mut self.terms);
        self.terms = terms
            .into_iter()
            .map(|(k, s)| {
                (
                    k,
                    match w {
                        Some(w) => s.with_window(w),
                        None => s,
                    },
                )
            })
            .filter(|(_, s)| !s.is_zero())
            .collect();
    }

    pub fn window(&self) -> Option<i64> {
        self.window
    }

    pub fn is_exact(&self) -> bool {
        self.window.is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&0)
                .is_some_and(|s| s.terms().count() == 1 && s.coeff(0).is_one())
    }

    pub fn with_window(mut self, end: i64) -> Self {
        self.window = min_bound(self.window, Some(end));
        self.normalize();
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &QWindowSeries)> + '_ {
        self.terms.iter().map(|(k, s)| (*k, s))
    }

    /// Coefficient of `a^var_exp`, carrying the polynomial's window.
    pub fn coeff(&self, var_exp: i64) -> QWindowSeries {
        match self.terms.get(&var_exp) {
            Some(s) => s.clone(),
            None => match self.window {
                Some(w) => QWindowSeries::zero().with_window(w),
                None => QWindowSeries::zero(),
            },
        }
    }

    /// Smallest q-exponent over all terms, or the window for a windowed zero.
    pub(crate) fn q_valuation_bound(&self) -> Option<i64> {
        self.terms
            .values()
            .filter_map(QWindowSeries::valuation)
            .min()
            .or(self.window)
    }

    pub fn q_valuation(&self) -> Option<i64> {
        self.terms
            .values()
            .filter_map(QWindowSeries::valuation)
            .min()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_map(
            self.window,
            self.terms.iter().map(|(k, s)| (*k, s.scale(c))).collect(),
        )
    }

    /// Multiplies by `var^var_shift · q^q_shift`.
    pub fn shift(&self, var_shift: i64, q_shift: i64) -> Self {
        Self {
            window: self.window.map(|w| w + q_shift),
            terms: self
                .terms
                .iter()
                .map(|(k, s)| (k + var_shift, s.shift(q_shift)))
                .collect(),
        }
    }

    pub fn mul_series(&self, c: &QWindowSeries) -> Self {
        self * &Self::constant(c.clone())
    }

    pub fn exact_div_int(&self, k: &BigInt) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, s) in &self.terms {
            terms.insert(*e, s.exact_div_int(k)?);
        }
        Ok(Self {
            window: self.window,
            terms,
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Applies `f` to each auxiliary exponent; colliding images add.
    pub fn map_var(&self, f: impl Fn(i64) -> i64) -> Self {
        let mut out = Self {
            window: self.window,
            terms: BTreeMap::new(),
        };
        for (k, s) in &self.terms {
            let key = f(*k);
            let merged = match out.terms.remove(&key) {
                Some(prev) => &prev + s,
                None => s.clone(),
            };
            out.terms.insert(key, merged);
        }
        out.normalize();
        out
    }

    /// Sets the auxiliary variable to 1.
    pub fn eval_var_at_one(&self) -> QWindowSeries {
        let mut acc = match self.window {
            Some(w) => QWindowSeries::zero().with_window(w),
            None => QWindowSeries::zero(),
        };
        for s in self.terms.values() {
            acc = &acc + s;
        }
        acc
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(QWindowSeries::all_nonnegative)
    }

    /// Iterates nonzero `(var exponent, q exponent, coefficient)` triples.
    pub fn monomials(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> + '_ {
        self.terms
            .iter()
            .flat_map(|(k, s)| s.terms().map(move |(e, c)| (*k, e, c)))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let window = min_bound(self.window, rhs.window);
        let mut terms = self.terms.clone();
        for (k, s) in &rhs.terms {
            let merged = match terms.remove(k) {
                Some(prev) => &prev + s,
                None => s.clone(),
            };
            terms.insert(*k, merged);
        }
        LaurentPoly::from_map(window, terms)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            window: self.window,
            terms: self.terms.iter().map(|(k, s)| (*k, -s)).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let window = min_bound(
            add_bound(self.window, rhs.q_valuation_bound()),
            add_bound(rhs.window, self.q_valuation_bound()),
        );
        let mut terms: BTreeMap<i64, QWindowSeries> = BTreeMap::new();
        for (ka, sa) in &self.terms {
            for (kb, sb) in &rhs.terms {
                let mut prod = sa * sb;
                if let Some(w) = window {
                    prod = prod.with_window(w);
                }
                let key = ka + kb;
                let merged = match terms.remove(&key) {
                    Some(prev) => &prev + &prod,
                    None => prod,
                };
                terms.insert(key, merged);
            }
        }
        LaurentPoly::from_map(window, terms)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<QWindowSeries> for LaurentPoly {
    fn from(s: QWindowSeries) -> Self {
        Self::constant(s)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, s)| format!("a^{k}*({s})"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_binomials() {
        // (a^2 + q)(a^2 - q) = a^4 - q^2
        let f = LaurentPoly::from_terms([(2, 0, 1), (0, 1, 1)]);
        let g = LaurentPoly::from_terms([(2, 0, 1), (0, 1, -1)]);
        assert_eq!(&f * &g, LaurentPoly::from_terms([(4, 0, 1), (0, 2, -1)]));
    }

    #[test]
    fn uniform_window_after_product() {
        let f = LaurentPoly::from_terms([(2, 0, 1), (0, 1, 1)]).with_window(6);
        let g = LaurentPoly::monomial(1, 0, 2);
        let h = &f * &g;
        assert_eq!(h.window(), Some(8));
        assert!(h.terms().all(|(_, s)| s.window_end() == Some(8)));
    }

    #[test]
    fn zero_terms_are_dropped() {
        let f = LaurentPoly::from_terms([(2, 3, 1)]);
        assert!((&f - &f).is_zero());
        assert!(LaurentPoly::from_terms([(2, 9, 1)])
            .with_window(5)
            .is_zero());
    }

    #[test]
    fn one_is_recognized() {
        assert!(LaurentPoly::one().is_one());
        assert!(LaurentPoly::one().with_window(3).is_one());
        assert!(!LaurentPoly::monomial(1, 2, 0).is_one());
    }
}
