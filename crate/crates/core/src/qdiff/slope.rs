//! Generating functions `y^{[s]}` of paths below slope `m/n`, from the
//! coefficient recurrences that decompose a path at the lattice points it
//! shares with the line `y = (mx - s)/n`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::paths::{table_to_series, Family, WeightTable};
use crate::series::{first_discrepancy, AQCoeff, Discrepancy, XSeries};

/// `(α_s, β_s, ε_s)` with `0 <= α < n`, `α m ≡ s (mod n)`, `0 <= β < m`,
/// `β n ≡ s (mod m)` and `ε = (α m + β n − s) / (m n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlopeConstants {
    pub alpha: u32,
    pub beta: u32,
    pub eps: u32,
}

pub fn slope_constants(m: u32, n: u32, s: u32) -> Result<SlopeConstants> {
    if s >= m * n {
        return Err(Error::InvalidParameter(format!(
            "s = {s} must be below mn = {}",
            m * n
        )));
    }
    let alpha = (0..n)
        .find(|a| (a * m) % n == s % n)
        .ok_or(Error::InvalidSlope { m, n })?;
    let beta = (0..m)
        .find(|b| (b * n) % m == s % m)
        .ok_or(Error::InvalidSlope { m, n })?;
    let num = (alpha * m + beta * n) as i64 - s as i64;
    let mn = (m * n) as i64;
    if num % mn != 0 || !(0..=1).contains(&(num / mn)) {
        return Err(Error::InvalidParameter(format!(
            "ε_s = {num}/{mn} is not 0 or 1"
        )));
    }
    Ok(SlopeConstants {
        alpha,
        beta,
        eps: (num / mn) as u32,
    })
}

/// Weight polynomial of one `(s, l)` slot: `(d, A) -> count`, `A = mn·j`.
type Slot = BTreeMap<(u32, i64), BigInt>;

/// Solved `y^{[0]}, …, y^{[mn]}` up to size `lmax`.
#[derive(Clone, Debug)]
pub struct SlopeFamily {
    pub m: u32,
    pub n: u32,
    pub lmax: u32,
    /// `tables[s]` for `0 <= s <= mn`, in the enumerators' `(d, A, l)` layout.
    pub tables: Vec<WeightTable>,
}

impl SlopeFamily {
    pub fn series(&self, s: u32) -> Result<XSeries> {
        table_to_series(&self.tables[s as usize], self.lmax)
    }
}

struct SlopeSolver {
    m: i64,
    n: i64,
    mn: i64,
    consts: Vec<SlopeConstants>,
    memo: HashMap<(u32, u32), Slot>,
    in_progress: Vec<(u32, u32)>,
}

const DEPTH_GUARD: usize = 4096;

impl SlopeSolver {
    fn slot(&mut self, s: u32, l: u32) -> Result<Slot> {
        if let Some(v) = self.memo.get(&(s, l)) {
            return Ok(v.clone());
        }
        if self.in_progress.contains(&(s, l)) || self.in_progress.len() > DEPTH_GUARD {
            return Err(Error::RecursionGuardTripped { s, l });
        }
        self.in_progress.push((s, l));
        let out = if s as i64 == self.mn {
            self.top_slot(l)?
        } else {
            self.inner_slot(s, l)?
        };
        self.in_progress.pop();
        for (&(d, a), c) in &out {
            if a < 0 || c.is_negative() {
                return Err(Error::NegativeCount(format!(
                    "s = {s}, l = {l}, d = {d}, A = {a}, count = {c}"
                )));
            }
            if a % self.mn != 0 {
                return Err(Error::NonIntegralExponent(format!(
                    "A = {a} at s = {s}, l = {l}"
                )));
            }
        }
        self.memo.insert((s, l), out.clone());
        Ok(out)
    }

    /// `n^{[mn]}_{i,j,l} = n^{[0]}_{i, j-(2l-1)mn, l-1} + [i=2, j=mn-1, l=1]`.
    fn top_slot(&mut self, l: u32) -> Result<Slot> {
        let mut out = Slot::new();
        if l == 0 {
            return Ok(out);
        }
        let shift = (2 * l as i64 - 1) * self.mn * self.mn;
        for ((d, a), c) in self.slot(0, l - 1)? {
            *out.entry((d, a + shift)).or_default() += c;
        }
        if l == 1 {
            *out.entry((1, self.mn * (self.mn - 1))).or_default() += 1;
        }
        Ok(out)
    }

    /// `n^{[s]} = n^{[s+1]} + [s=l=0] + Σ n^{[βn+1]}_{l-} n^{[0]}_{l0} n^{[αm+1]}_{l+}`
    /// over `l- + l0 + l+ = l + ε`, `l-, l+ >= 1`, with the area shifts of the
    /// decomposition expressed in `A = mn·j` units.
    fn inner_slot(&mut self, s: u32, l: u32) -> Result<Slot> {
        let SlopeConstants { alpha, beta, eps } = self.consts[s as usize];
        let (m, n, mn) = (self.m, self.n, self.mn);
        let (s_i, l_i) = (s as i64, l as i64);
        let mut out = self.slot(s + 1, l)?;
        if s == 0 && l == 0 {
            *out.entry((0, 0)).or_default() += 1;
        }
        let left_s = beta * n as u32 + 1;
        let right_s = alpha * m as u32 + 1;
        let (b, a) = (beta as i64, alpha as i64);
        let total = l + eps;
        let base_shift = mn * 2 * s_i * l_i - s_i * s_i;
        for l_minus in 1..=total {
            for l_plus in 1..=(total - l_minus) {
                let l_zero = total - l_minus - l_plus;
                let left = self.slot(left_s, l_minus)?;
                if left.is_empty() {
                    continue;
                }
                let right = self.slot(right_s, l_plus)?;
                if right.is_empty() {
                    continue;
                }
                let middle = self.slot(0, l_zero)?;
                let left_shift = -(2 * b * n * l_minus as i64 * mn - b * b * n * n);
                let right_shift = -(2 * a * m * l_plus as i64 * mn - a * a * m * m);
                let shift = base_shift + left_shift + right_shift;
                for ((d1, a1), c1) in &left {
                    for ((d0, a0), c0) in &middle {
                        let c10 = c1 * c0;
                        for ((d2, a2), c2) in &right {
                            *out.entry((d1 + d0 + d2, a1 + a0 + a2 + shift)).or_default() +=
                                &c10 * c2;
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Solves the slope-`m/n` family by memoized recursion over `(s, l)`.
pub fn solve_slope(m: u32, n: u32, lmax: u32) -> Result<SlopeFamily> {
    if m == 0 || n == 0 || crate::paths::gcd(m, n) != 1 {
        return Err(Error::InvalidSlope { m, n });
    }
    let mn = m * n;
    let consts = (0..mn)
        .map(|s| slope_constants(m, n, s))
        .collect::<Result<Vec<_>>>()?;
    let mut solver = SlopeSolver {
        m: m as i64,
        n: n as i64,
        mn: mn as i64,
        consts,
        memo: HashMap::new(),
        in_progress: Vec::new(),
    };
    let mut tables = Vec::with_capacity(mn as usize + 1);
    for s in 0..=mn {
        let mut table = WeightTable::new(Family::Slope { m, n, s });
        for l in 0..=lmax {
            for ((d, a), c) in solver.slot(s, l)? {
                if !num_traits::Zero::is_zero(&c) {
                    table.add(d, a, l, c);
                }
            }
        }
        tables.push(table);
    }
    Ok(SlopeFamily { m, n, lmax, tables })
}

/// `y^{[s]} = y^{[s+1]} · y^{[0]}(q^{2s}x)` for `0 < s < mn` with `m | s` or
/// `n | s`. Returns `(s, first discrepancy)` per checked `s`.
pub fn check_simpys(family: &SlopeFamily) -> Result<Vec<(u32, Option<Discrepancy>)>> {
    let (m, n) = (family.m, family.n);
    let y0 = family.series(0)?;
    let mut out = Vec::new();
    for s in 1..m * n {
        if s % m != 0 && s % n != 0 {
            continue;
        }
        let lhs = family.series(s)?;
        let rhs = &family.series(s + 1)? * &y0.qshift(2 * s as i64);
        out.push((s, first_discrepancy(&lhs, &rhs, None)?));
    }
    Ok(out)
}

/// Substitutes the solved family into the three q-difference equations and
/// returns `(equation label, first nonzero residual)` for each. Equations
/// carrying `x^{-1}` are checked one x-order lower.
pub fn check_slope_equations(family: &SlopeFamily) -> Result<Vec<(String, Option<Discrepancy>)>> {
    let (m, n) = (family.m, family.n);
    let mn = m * n;
    let ys = (0..=mn)
        .map(|s| family.series(s))
        .collect::<Result<Vec<_>>>()?;
    let order = ys[0].x_order();
    let zero = XSeries::zero(order);
    let mut out = Vec::new();

    // y0 (1 - y1) = 1
    let lhs = &ys[0] * &(&XSeries::one(order) - &ys[1]);
    out.push((
        "y0".to_string(),
        first_discrepancy(&XSeries::one(order), &lhs, None)?,
    ));

    for s in 1..mn {
        let SlopeConstants { alpha, beta, eps } = slope_constants(m, n, s)?;
        let (a, b, si) = (alpha as i64, beta as i64, s as i64);
        let q_exp = mn as i64 * (eps * eps) as i64 - 2 * a * b;
        let prod = &(&ys[0].qshift(2 * si)
            * &ys[(beta * n + 1) as usize].qshift(2 * (si - b * n as i64)))
            * &ys[(alpha * m + 1) as usize].qshift(2 * (si - a * m as i64));
        let mut term = prod.scale(&AQCoeff::monomial(1, 0, q_exp));
        let mut lhs = &ys[s as usize] - &ys[s as usize + 1];
        if eps == 1 {
            term = term.div_x()?;
            lhs = lhs.truncate(term.x_order());
        }
        let residual = &lhs - &term;
        out.push((
            format!("s={s}"),
            first_discrepancy(&zero.truncate(residual.x_order()), &residual, None)?,
        ));
    }

    // y^{[mn]} = a^2 q^{mn-1} x + q^{mn} x y0(q^{2mn} x)
    let mnl = mn as i64;
    let rhs = &XSeries::monomial(order, 1, AQCoeff::monomial(1, 2, mnl - 1))
        + &ys[0]
            .qshift(2 * mnl)
            .mul_x_pow(1)
            .scale(&AQCoeff::monomial(1, 0, mnl));
    out.push((
        format!("s={mn}"),
        first_discrepancy(&rhs, &ys[mn as usize], None)?,
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::enum_slope;

    #[test]
    fn constants_examples() {
        assert_eq!(
            slope_constants(2, 3, 1).unwrap(),
            SlopeConstants {
                alpha: 2,
                beta: 1,
                eps: 1
            }
        );
        assert_eq!(
            slope_constants(2, 3, 5).unwrap(),
            SlopeConstants {
                alpha: 1,
                beta: 1,
                eps: 0
            }
        );
        for f in 1..6 {
            for s in 1..f {
                assert_eq!(
                    slope_constants(1, f, s).unwrap(),
                    SlopeConstants {
                        alpha: s,
                        beta: 0,
                        eps: 0
                    }
                );
            }
        }
    }

    #[test]
    fn initial_values() {
        let fam = solve_slope(2, 3, 2).unwrap();
        assert!(fam.series(0).unwrap().coeff(0).is_one());
        for s in 1..=6 {
            assert!(fam.series(s).unwrap().coeff(0).is_zero(), "s = {s}");
        }
    }

    #[test]
    fn unit_slope_second_order() {
        let y0 = solve_slope(1, 1, 2).unwrap().series(0).unwrap();
        assert_eq!(y0.coeff(1), &AQCoeff::from_terms([(2, 0, 1), (0, 1, 1)]));
        assert_eq!(
            y0.coeff(2),
            &AQCoeff::from_terms([(4, 0, 1), (2, 1, 2), (2, 3, 1), (0, 2, 1), (0, 4, 1)])
        );
    }

    #[test]
    fn matches_enumeration_small() {
        for (m, n) in [(1, 1), (1, 2), (2, 3)] {
            let fam = solve_slope(m, n, 2).unwrap();
            for s in 0..=m * n {
                assert_eq!(
                    fam.tables[s as usize],
                    enum_slope(m, n, s, 2).unwrap(),
                    "(m,n,s)=({m},{n},{s})"
                );
            }
        }
    }

    #[test]
    fn equations_hold() {
        let fam = solve_slope(2, 3, 3).unwrap();
        for (label, d) in check_slope_equations(&fam).unwrap() {
            assert!(d.is_none(), "{label}: {d:?}");
        }
    }
}
