use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Integer partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn row(n: u32) -> Self {
        Self::new(vec![n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let first = self.0.first().copied().unwrap_or(0);
        Self(
            (1..=first)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    /// `2 Σ_{(i,j) ∈ λ} (j − i)`, the content sum doubled.
    pub fn kappa(&self) -> i64 {
        let mut total = 0i64;
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p as i64 {
                total += j - i as i64;
            }
        }
        2 * total
    }

    /// `Π_k k^{m_k} m_k!` where `m_k` counts parts equal to `k`.
    pub fn z(&self) -> num_bigint::BigInt {
        let mut out = num_bigint::BigInt::from(1);
        let mut run = 0u32;
        for (idx, &p) in self.0.iter().enumerate() {
            run = if idx > 0 && self.0[idx - 1] == p {
                run + 1
            } else {
                1
            };
            out *= p * run;
        }
        out
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: u32) -> Self {
        Self(self.0.iter().map(|p| p * k).collect())
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rest: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses `"2,1"`, `"(2,1)"` or `""` (the empty partition).
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = body
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidParameter(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(parts))
    }
}
