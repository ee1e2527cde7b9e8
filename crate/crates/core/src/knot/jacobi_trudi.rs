//! Slow reference route: Schur polynomials as explicit polynomials in the
//! variables `t_1, t_2, …` (with `p_k = k t_k`) from the Jacobi–Trudi
//! determinant. Used only to cross-check the character route.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::{partitions_of, Partition};
use super::symfunc::PowerSumVector;
use crate::error::{Error, Result};

/// Polynomial in `t_k`; key `e` means `Π t_{k+1}^{e[k]}` with no trailing zeros.
pub type TPoly = BTreeMap<Vec<u32>, BigRational>;

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn mul(a: &TPoly, b: &TPoly) -> TPoly {
    let mut out = TPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let n = ea.len().max(eb.len());
            let e: Vec<u32> = (0..n)
                .map(|i| ea.get(i).unwrap_or(&0) + eb.get(i).unwrap_or(&0))
                .collect();
            *out.entry(e).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn add_scaled(acc: &mut TPoly, p: &TPoly, sign: i64) {
    for (e, c) in p {
        *acc.entry(e.clone()).or_insert_with(BigRational::zero) +=
            c * BigRational::from_integer(sign.into());
    }
    acc.retain(|_, c| !c.is_zero());
}

fn multiplicities(rho: &Partition) -> Vec<u32> {
    let mut e = vec![0u32; rho.parts().first().copied().unwrap_or(0) as usize];
    for &p in rho.parts() {
        e[p as usize - 1] += 1;
    }
    e
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `h_n = [z^n] exp(Σ_k t_k z^k) = Σ_{ρ ⊢ n} Π_k t_k^{m_k} / m_k!`.
pub fn complete(n: i64) -> TPoly {
    let mut out = TPoly::new();
    if n < 0 {
        return out;
    }
    for rho in partitions_of(n as u32) {
        let e = multiplicities(&rho);
        let denom: BigInt = e.iter().map(|&m| factorial(m)).product();
        out.insert(trim(e), BigRational::new(BigInt::one(), denom));
    }
    out
}

/// `s_λ = det(h_{λ_i - i + j})`, expanded along rows with memo on used columns.
pub fn jt_schur(lambda: &Partition) -> TPoly {
    let rows = lambda.parts();
    let n = rows.len();
    let h: Vec<Vec<TPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| complete(rows[i] as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    let mut memo: HashMap<u32, TPoly> = HashMap::new();
    fn minor(
        row: usize,
        used: u32,
        n: usize,
        h: &[Vec<TPoly>],
        memo: &mut HashMap<u32, TPoly>,
    ) -> TPoly {
        if row == n {
            return [(Vec::new(), BigRational::one())].into_iter().collect();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = TPoly::new();
        let mut free_before = 0;
        for col in 0..n {
            if used & (1 << col) != 0 {
                continue;
            }
            if !h[row][col].is_empty() {
                let sub = minor(row + 1, used | (1 << col), n, h, memo);
                let sign = if free_before % 2 == 0 { 1 } else { -1 };
                add_scaled(&mut acc, &mul(&h[row][col], &sub), sign);
            }
            free_before += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }
    minor(0, 0, n, &h, &mut memo)
}

/// Substitutes `t_k -> m t_{mk}`.
pub fn substitute_scaled(p: &TPoly, m: u32) -> TPoly {
    p.iter()
        .map(|(e, c)| {
            let mut out = vec![0u32; e.len() * m as usize];
            let mut deg = 0;
            for (k, &a) in e.iter().enumerate() {
                if a > 0 {
                    out[(k + 1) * m as usize - 1] = a;
                    deg += a;
                }
            }
            (
                trim(out),
                c * BigRational::from_integer(num_traits::pow(BigInt::from(m), deg as usize)),
            )
        })
        .collect()
}

/// `s_λ` in power sums, read off the t-polynomial: `Π t_{ρ_i} = p_ρ / Π ρ_i`.
pub fn jt_powersums(lambda: &Partition) -> PowerSumVector {
    jt_schur(lambda)
        .into_iter()
        .map(|(e, c)| {
            let parts: Vec<u32> = e
                .iter()
                .enumerate()
                .flat_map(|(k, &a)| std::iter::repeat_n(k as u32 + 1, a as usize))
                .collect();
            let rho = Partition::new(parts);
            let prod: u32 = rho.parts().iter().product();
            (rho, c / BigRational::from_integer(prod.into()))
        })
        .collect()
}

/// Adams coefficients by solving `s_λ(m t_m, m t_{2m}, …) = Σ_μ C_μ s_μ(t)`
/// as a linear system over the t-monomials.
pub fn jt_adams_coeffs(lambda: &Partition, m: u32) -> Result<BTreeMap<Partition, BigInt>> {
    let target = substitute_scaled(&jt_schur(lambda), m);
    let basis: Vec<Partition> = partitions_of(m * lambda.size());
    let polys: Vec<TPoly> = basis.iter().map(jt_schur).collect();
    let monos: Vec<Vec<u32>> = {
        let mut all: Vec<Vec<u32>> = polys
            .iter()
            .flat_map(|p| p.keys().cloned())
            .chain(target.keys().cloned())
            .collect();
        all.sort();
        all.dedup();
        all
    };
    let (rows, cols) = (monos.len(), basis.len());
    let mut a: Vec<Vec<BigRational>> = monos
        .iter()
        .map(|e| {
            let mut row: Vec<BigRational> = polys
                .iter()
                .map(|p| p.get(e).cloned().unwrap_or_else(BigRational::zero))
                .collect();
            row.push(target.get(e).cloned().unwrap_or_else(BigRational::zero));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row).skip(c) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() != cols || a[r..].iter().any(|row| !row[cols].is_zero()) {
        return Err(Error::InvalidParameter(format!(
            "Schur polynomials of degree {} did not span the target",
            m * lambda.size()
        )));
    }
    let mut out = BTreeMap::new();
    for (i, &c) in pivots.iter().enumerate() {
        let v = &a[i][cols];
        if !v.denom().is_one() {
            return Err(Error::NonIntegralCoefficient(format!(
                "{v} at {}",
                basis[c]
            )));
        }
        if !v.is_zero() {
            out.insert(basis[c].clone(), v.to_integer());
        }
    }
    Ok(out)
}
