//! JSON wire formats. Coefficients travel as decimal strings.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::laurent::{AQCoeff, LaurentPoly};
use super::nut::NuTSeries;
use super::xseries::XSeries;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XSeriesJson {
    pub x_order: usize,
    pub coeffs: Vec<XCoeffJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XCoeffJson {
    pub l: usize,
    pub terms: Vec<AQTermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AQTermJson {
    pub a: i64,
    pub q: i64,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuTSeriesJson {
    pub grid: u32,
    pub terms: Vec<UTermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UTermJson {
    pub u: i64,
    pub sigma: Vec<SigmaTermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaTermJson {
    pub e: i64,
    pub c: String,
}

fn parse_coeff(c: &str) -> Result<BigInt> {
    c.parse()
        .map_err(|_| Error::InvalidParameter(format!("bad decimal coefficient {c:?}")))
}

impl From<&XSeries> for XSeriesJson {
    fn from(s: &XSeries) -> Self {
        let coeffs = s
            .coeffs()
            .iter()
            .enumerate()
            .map(|(l, c)| XCoeffJson {
                l,
                terms: c
                    .monomials()
                    .map(|(a, q, c)| AQTermJson {
                        a,
                        q,
                        c: c.to_string(),
                    })
                    .collect(),
            })
            .collect();
        Self {
            x_order: s.x_order(),
            coeffs,
        }
    }
}

impl TryFrom<&XSeriesJson> for XSeries {
    type Error = Error;

    /// Rebuilds an exact series; windows are not part of the wire format.
    fn try_from(j: &XSeriesJson) -> Result<Self> {
        let mut out = XSeries::zero(j.x_order);
        for c in &j.coeffs {
            if c.l >= j.x_order {
                return Err(Error::InvalidParameter(format!(
                    "x-power {} beyond x_order {}",
                    c.l, j.x_order
                )));
            }
            let terms = c
                .terms
                .iter()
                .map(|t| Ok((t.a, t.q, parse_coeff(&t.c)?)))
                .collect::<Result<Vec<_>>>()?;
            out.set_coeff(c.l, AQCoeff::from_terms(terms));
        }
        Ok(out)
    }
}

impl From<&NuTSeries> for NuTSeriesJson {
    fn from(s: &NuTSeries) -> Self {
        let terms = s
            .rho_poly()
            .terms()
            .map(|(u, series)| {
                let mut sigma: Vec<SigmaTermJson> = series
                    .terms()
                    .map(|(r, c)| SigmaTermJson {
                        e: -r,
                        c: c.to_string(),
                    })
                    .collect();
                sigma.reverse();
                UTermJson { u, sigma }
            })
            .collect();
        Self {
            grid: s.grid(),
            terms,
        }
    }
}

impl TryFrom<&NuTSeriesJson> for NuTSeries {
    type Error = Error;

    fn try_from(j: &NuTSeriesJson) -> Result<Self> {
        let mut triples = Vec::new();
        for t in &j.terms {
            for s in &t.sigma {
                triples.push((t.u, -s.e, parse_coeff(&s.c)?));
            }
        }
        Ok(NuTSeries::from_rho_poly(
            j.grid,
            LaurentPoly::from_terms(triples),
        ))
    }
}

pub fn xseries_to_value(s: &XSeries) -> serde_json::Value {
    serde_json::to_value(XSeriesJson::from(s)).expect("series JSON is always serializable")
}
