//! Schur functions and power sums through symmetric-group characters.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::{partitions_of, Partition};
use crate::error::{Error, Result};

/// Largest symmetric-function degree handled.
pub const SIZE_CAP: u32 = 8;

pub type PowerSumVector = BTreeMap<Partition, BigRational>;

fn check_size(size: u32, cap: u32) -> Result<()> {
    if size > cap {
        return Err(Error::SizeCapExceeded { size, cap });
    }
    Ok(())
}

/// Memoized irreducible characters `χ^λ(ρ)` by Murnaghan–Nakayama.
#[derive(Default)]
pub struct Characters {
    memo: HashMap<(Partition, Vec<u32>), i64>,
}

impl Characters {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^λ` on the class of cycle type `ρ`; zero when the sizes differ.
    pub fn get(&mut self, lambda: &Partition, rho: &Partition) -> i64 {
        if lambda.size() != rho.size() {
            return 0;
        }
        self.eval(lambda, rho.parts())
    }

    fn eval(&mut self, lambda: &Partition, rho: &[u32]) -> i64 {
        let Some((&r, rest)) = rho.split_first() else {
            return i64::from(lambda.is_empty());
        };
        let key = (lambda.clone(), rho.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        // Rim hooks of length r are moves b -> b - r in the beta-set.
        let len = lambda.len();
        let beta: Vec<i64> = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 + (len - 1 - i) as i64)
            .collect();
        let mut total = 0;
        for (idx, &b) in beta.iter().enumerate() {
            let target = b - r as i64;
            if target < 0 || beta.contains(&target) {
                continue;
            }
            let between = beta.iter().filter(|&&c| target < c && c < b).count();
            let mut next = beta.clone();
            next[idx] = target;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let parts = next
                .iter()
                .enumerate()
                .map(|(i, &c)| (c - (len - 1 - i) as i64) as u32)
                .collect();
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * self.eval(&Partition::new(parts), rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// `χ^λ(ρ)` with a fresh memo table.
pub fn character(lambda: &Partition, rho: &Partition) -> i64 {
    Characters::new().get(lambda, rho)
}

/// `s_λ = Σ_ρ χ^λ(ρ)/z_ρ p_ρ`.
pub fn schur_in_powersums(lambda: &Partition) -> Result<PowerSumVector> {
    schur_in_powersums_with_cap(lambda, SIZE_CAP)
}

pub fn schur_in_powersums_with_cap(lambda: &Partition, cap: u32) -> Result<PowerSumVector> {
    check_size(lambda.size(), cap)?;
    let mut chars = Characters::new();
    let mut out = PowerSumVector::new();
    for rho in partitions_of(lambda.size()) {
        let c = chars.get(lambda, &rho);
        if c != 0 {
            out.insert(rho.clone(), BigRational::new(c.into(), rho.z()));
        }
    }
    Ok(out)
}

/// Rewrites a homogeneous power-sum combination in the Schur basis via
/// `p_ρ = Σ_μ χ^μ(ρ) s_μ`.
pub fn powersum_to_schur(v: &PowerSumVector) -> Result<BTreeMap<Partition, BigRational>> {
    powersum_to_schur_with_cap(v, SIZE_CAP)
}

pub fn powersum_to_schur_with_cap(
    v: &PowerSumVector,
    cap: u32,
) -> Result<BTreeMap<Partition, BigRational>> {
    let mut chars = Characters::new();
    let mut out: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (rho, c) in v {
        check_size(rho.size(), cap)?;
        for mu in partitions_of(rho.size()) {
            let x = chars.get(&mu, rho);
            if x != 0 {
                let e = out.entry(mu).or_insert_with(BigRational::zero);
                *e += c * BigRational::from_integer(x.into());
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Integer coefficients `C^λ_{μ,m}` of `s_λ[p_k -> p_{mk}] = Σ_μ C^λ_{μ,m} s_μ`.
pub fn adams_coeffs(lambda: &Partition, m: u32) -> Result<BTreeMap<Partition, BigInt>> {
    adams_coeffs_with_cap(lambda, m, SIZE_CAP)
}

/// [`adams_coeffs`] with an explicit degree cap in place of [`SIZE_CAP`].
pub fn adams_coeffs_with_cap(
    lambda: &Partition,
    m: u32,
    cap: u32,
) -> Result<BTreeMap<Partition, BigInt>> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "Adams operation needs m >= 1".into(),
        ));
    }
    check_size(m * lambda.size(), cap)?;
    let plethysm: PowerSumVector = schur_in_powersums_with_cap(lambda, cap)?
        .into_iter()
        .map(|(rho, c)| (rho.scaled(m), c))
        .collect();
    let mut out = BTreeMap::new();
    for (mu, c) in powersum_to_schur_with_cap(&plethysm, cap)? {
        if !c.denom().is_one() {
            return Err(Error::NonIntegralCoefficient(format!(
                "coefficient {c} of s_{mu} in the m = {m} Adams image of s_{lambda}"
            )));
        }
        out.insert(mu, c.to_integer());
    }
    Ok(out)
}
