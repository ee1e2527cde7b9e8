use std::collections::BTreeMap;
use std::io::Write;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{AQCoeff, XSeries};

/// Which path family a [`WeightTable`] counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    /// Below `y = m x / n`, midway points below `y = (m x - s) / n`.
    Slope { m: u32, n: u32, s: u32 },
    /// Below `y = x / f`, ending at `(f l + k - 1, l)`.
    Strip { f: u32, k: u32 },
    /// The `k -> ∞` limit of `Strip`, known for areas up to `jmax`.
    StripStable { f: u32, jmax: i64 },
    /// Paths with backwards.
    Backward { f: u32 },
}

impl Family {
    /// Scaled area units per unit of geometric area: `2mn` or `2`.
    pub fn area_scale(&self) -> i64 {
        match *self {
            Family::Slope { m, n, .. } => 2 * (m as i64) * (n as i64),
            _ => 2,
        }
    }

    fn csv_fields(&self) -> (&'static str, u32, u32, String) {
        match *self {
            Family::Slope { m, n, s } => ("slope", m, n, s.to_string()),
            Family::Strip { f, k } => ("strip", 1, f, k.to_string()),
            Family::StripStable { f, .. } => ("strip_stable", 1, f, "inf".into()),
            Family::Backward { f } => ("backward", 1, f, String::new()),
        }
    }
}

/// Exact path counts keyed by `(diagonal steps d, scaled area A, size l)`.
///
/// The `q`-exponent of an entry is `2A / area_scale`; its `a`-exponent is `2d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    pub family: Family,
    pub entries: BTreeMap<(u32, i64, u32), BigInt>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WeightEntry {
    pub d: u32,
    #[serde(rename = "A")]
    pub area: i64,
    pub l: u32,
    pub count: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WeightTableJson {
    pub family: Family,
    pub area_unit: String,
    pub entries: Vec<WeightEntry>,
}

impl WeightTable {
    pub fn new(family: Family) -> Self {
        Self {
            family,
            entries: BTreeMap::new(),
        }
    }

    pub fn get(&self, d: u32, area: i64, l: u32) -> BigInt {
        self.entries.get(&(d, area, l)).cloned().unwrap_or_default()
    }

    /// Count in the paper-style indices `(i = 2d, j, l)` where `j` is twice the
    /// geometric area.
    pub fn count_ij(&self, i: u32, j: i64, l: u32) -> BigInt {
        if !i.is_multiple_of(2) {
            return BigInt::default();
        }
        let scale = self.family.area_scale();
        self.get(i / 2, j * scale / 2, l)
    }

    pub fn add(&mut self, d: u32, area: i64, l: u32, count: BigInt) {
        *self.entries.entry((d, area, l)).or_default() += count;
    }

    /// Number of paths of each size (weights ignored).
    pub fn totals(&self, lmax: u32) -> Vec<BigInt> {
        let mut out = vec![BigInt::default(); lmax as usize + 1];
        for ((_, _, l), c) in &self.entries {
            if *l <= lmax {
                out[*l as usize] += c;
            }
        }
        out
    }

    pub fn to_json(&self) -> WeightTableJson {
        WeightTableJson {
            family: self.family,
            area_unit: format!("1/{}", self.family.area_scale()),
            entries: self
                .entries
                .iter()
                .map(|((d, area, l), c)| WeightEntry {
                    d: *d,
                    area: *area,
                    l: *l,
                    count: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["family", "m", "n", "s_or_k", "d", "A", "l", "count"])?;
        let (name, m, n, sk) = self.family.csv_fields();
        for ((d, area, l), c) in &self.entries {
            w.write_record([
                name.to_string(),
                m.to_string(),
                n.to_string(),
                sk.clone(),
                d.to_string(),
                area.to_string(),
                l.to_string(),
                c.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Generating function `Σ count · a^{2d} q^{2A/scale} x^l` for `l <= lmax`.
///
/// Slope and strip tables give exact polynomials; stabilized strip tables are
/// only complete below their area bound and come back windowed.
pub fn table_to_series(table: &WeightTable, lmax: u32) -> Result<XSeries> {
    let scale = table.family.area_scale();
    let mut per_l: Vec<Vec<(i64, i64, BigInt)>> = vec![Vec::new(); lmax as usize + 1];
    for ((d, area, l), c) in &table.entries {
        if *l > lmax {
            continue;
        }
        if (2 * area) % scale != 0 {
            return Err(Error::NonIntegralExponent(format!(
                "A = {area} with area unit 1/{scale}"
            )));
        }
        per_l[*l as usize].push((2 * *d as i64, 2 * area / scale, c.clone()));
    }
    let window = match table.family {
        Family::StripStable { jmax, .. } => Some(jmax + 1),
        _ => None,
    };
    let coeffs = per_l
        .into_iter()
        .map(|terms| {
            let c = AQCoeff::from_terms(terms);
            match window {
                Some(w) => c.with_window(w),
                None => c,
            }
        })
        .collect();
    Ok(XSeries::from_coeffs(coeffs))
}
