use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::Result;
use crate::knot::{self, jacobi_trudi, Partition};
use crate::paths::{self, table_to_series};
use crate::qdiff;
use crate::series::{first_discrepancy, AQCoeff, Discrepancy, QWindowSeries, XSeries};

/// One identity or oracle comparison at fixed parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    /// Slope solver against the path enumerator, every `0 <= s <= mn`.
    Oracle {
        m: u32,
        n: u32,
        lmax: u32,
    },
    /// Solved slope family substituted back into its q-difference system.
    Equations {
        m: u32,
        n: u32,
        lmax: u32,
    },
    /// Enumerated tables when no midway vertex is admissible.
    ClosedForm {
        m: u32,
        n: u32,
        lmax: u32,
    },
    /// `a = q = 1` totals of the unit-slope series against unweighted counting.
    Totals {
        lmax: u32,
    },
    Simpys {
        m: u32,
        n: u32,
        lmax: u32,
    },
    /// Strip solver against enumeration, and `y_1` against the slope `1/f` family.
    StripOracle {
        f: u32,
        kmax: u32,
        lmax: u32,
    },
    /// Monotonicity in `k` and the polynomial bound on strip counts.
    StripBound {
        f: u32,
        lmax: u32,
        jmax: i64,
    },
    /// `y_∞` functional equation and `y_k = y_∞(x)/y_∞(q^{2k}x)`.
    Yinf {
        f: u32,
        lmax: u32,
        qorder: i64,
    },
    /// Stabilized strip enumeration against `y_∞`.
    StableOracle {
        f: u32,
        lmax: u32,
        jmax: i64,
    },
    /// `h(x) y_∞(-x) = 1`.
    Corollary {
        f: u32,
        lmax: u32,
        qorder: i64,
    },
    /// `h` against the specialized wave function.
    HPsi {
        f: u32,
        lmax: u32,
        qorder: i64,
    },
    /// Strip family against superpolynomial ratios, `1 <= i <= f+1`.
    YTilde {
        f: u32,
        lmax: u32,
        qorder: i64,
    },
    Nonneg {
        f: u32,
        lmax: u32,
        qorder: i64,
    },
    AdamsIdentity {
        max_size: u32,
    },
    AdamsOracle {
        max_size: u32,
        max_m: u32,
    },
    WaveEquations {
        f: u32,
        kmax: u32,
        qorder: i64,
    },
    HomflyGrid {
        m: u32,
        n: u32,
        partition: Partition,
        qorder: i64,
    },
    PbarEquation {
        f: u32,
        rmax: u32,
        qorder: i64,
    },
    PbarFirst {
        f: u32,
        qorder: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: Map<String, Value>,
    pub status: Status,
    pub discrepancy: Option<Value>,
    pub ms: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The report without its timing field, for reproducibility comparisons.
    pub fn untimed(&self) -> Value {
        json!({ "check": self.check, "params": self.params, "status": self.status, "discrepancy": self.discrepancy })
    }
}

fn locate(d: &Discrepancy, context: Value) -> Value {
    let mut v = serde_json::to_value(d).unwrap_or(Value::Null);
    if let (Value::Object(obj), Value::Object(ctx)) = (&mut v, context) {
        obj.extend(ctx);
    }
    v
}

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

impl Check {
    pub fn id(&self) -> &'static str {
        match self {
            Check::Oracle { .. } => "oracle",
            Check::Equations { .. } => "equations",
            Check::ClosedForm { .. } => "closedform",
            Check::Totals { .. } => "totals",
            Check::Simpys { .. } => "simpys",
            Check::StripOracle { .. } => "prop22",
            Check::StripBound { .. } => "lemma21",
            Check::Yinf { .. } => "yinf",
            Check::StableOracle { .. } => "yinf-oracle",
            Check::Corollary { .. } => "corollary",
            Check::HPsi { .. } => "prop12",
            Check::YTilde { .. } => "prop13",
            Check::Nonneg { .. } => "nonneg",
            Check::AdamsIdentity { .. } => "knot-adams-identity",
            Check::AdamsOracle { .. } => "knot-adams-oracle",
            Check::WaveEquations { .. } => "knot-wave",
            Check::HomflyGrid { .. } => "knot-grid",
            Check::PbarEquation { .. } => "pbar",
            Check::PbarFirst { .. } => "pbar-first",
        }
    }

    /// Parameters including the truncation (`lmax`/`xorder`, `qorder`).
    pub fn params(&self) -> Map<String, Value> {
        match self {
            Check::Oracle { m, n, lmax }
            | Check::Equations { m, n, lmax }
            | Check::ClosedForm { m, n, lmax }
            | Check::Simpys { m, n, lmax } => {
                params(&[("m", json!(m)), ("n", json!(n)), ("lmax", json!(lmax))])
            }
            Check::Totals { lmax } => {
                params(&[("m", json!(1)), ("n", json!(1)), ("lmax", json!(lmax))])
            }
            Check::StripOracle { f, kmax, lmax } => params(&[
                ("f", json!(f)),
                ("kmax", json!(kmax)),
                ("lmax", json!(lmax)),
            ]),
            Check::StripBound { f, lmax, jmax } | Check::StableOracle { f, lmax, jmax } => {
                params(&[
                    ("f", json!(f)),
                    ("lmax", json!(lmax)),
                    ("jmax", json!(jmax)),
                ])
            }
            Check::Yinf { f, lmax, qorder }
            | Check::Corollary { f, lmax, qorder }
            | Check::HPsi { f, lmax, qorder }
            | Check::YTilde { f, lmax, qorder }
            | Check::Nonneg { f, lmax, qorder } => params(&[
                ("f", json!(f)),
                ("lmax", json!(lmax)),
                ("qorder", json!(qorder)),
            ]),
            Check::AdamsIdentity { max_size } => params(&[("max_size", json!(max_size))]),
            Check::AdamsOracle { max_size, max_m } => {
                params(&[("max_size", json!(max_size)), ("max_m", json!(max_m))])
            }
            Check::WaveEquations { f, kmax, qorder } => params(&[
                ("f", json!(f)),
                ("kmax", json!(kmax)),
                ("qorder", json!(qorder)),
            ]),
            Check::HomflyGrid {
                m,
                n,
                partition,
                qorder,
            } => params(&[
                ("m", json!(m)),
                ("n", json!(n)),
                ("partition", json!(partition.parts())),
                ("qorder", json!(qorder)),
            ]),
            Check::PbarEquation { f, rmax, qorder } => params(&[
                ("f", json!(f)),
                ("rmax", json!(rmax)),
                ("qorder", json!(qorder)),
            ]),
            Check::PbarFirst { f, qorder } => params(&[("f", json!(f)), ("qorder", json!(qorder))]),
        }
    }

    /// Runs the check; any arithmetic error becomes a failed report.
    pub fn run(&self) -> VerificationReport {
        let start = Instant::now();
        let outcome = self.evaluate();
        let ms = start.elapsed().as_secs_f64() * 1000.0;
        let (status, discrepancy) = match outcome {
            Ok(None) => (Status::Pass, None),
            Ok(Some(d)) => (Status::Fail, Some(d)),
            Err(e) => (Status::Fail, Some(json!({ "error": e.to_string() }))),
        };
        VerificationReport {
            check: self.id().to_string(),
            params: self.params(),
            status,
            discrepancy,
            ms,
        }
    }

    /// `Ok(None)` on success, `Ok(Some(locator))` on the first mismatch.
    fn evaluate(&self) -> Result<Option<Value>> {
        match *self {
            Check::Oracle { m, n, lmax } => {
                let fam = qdiff::solve_slope(m, n, lmax)?;
                for s in 0..=m * n {
                    let want = table_to_series(&paths::enum_slope(m, n, s, lmax)?, lmax)?;
                    if let Some(d) = first_discrepancy(&want, &fam.series(s)?, None)? {
                        return Ok(Some(locate(&d, json!({ "s": s }))));
                    }
                }
                Ok(None)
            }
            Check::Equations { m, n, lmax } => {
                let fam = qdiff::solve_slope(m, n, lmax)?;
                for (label, d) in qdiff::check_slope_equations(&fam)? {
                    if let Some(d) = d {
                        return Ok(Some(locate(&d, json!({ "equation": label }))));
                    }
                }
                Ok(None)
            }
            Check::ClosedForm { m, n, lmax } => closed_form(m, n, lmax),
            Check::Totals { lmax } => {
                let totals = qdiff::solve_slope(1, 1, lmax)?.series(0)?.totals();
                for (l, got) in totals.iter().enumerate() {
                    let want = paths::count_slope_paths(1, 1, 0, l as u32)?;
                    if &want != got {
                        return Ok(Some(
                            json!({ "x": l, "expected": want.to_string(), "got": got.to_string() }),
                        ));
                    }
                }
                Ok(None)
            }
            Check::Simpys { m, n, lmax } => {
                let fam = qdiff::solve_slope(m, n, lmax)?;
                for (s, d) in qdiff::check_simpys(&fam)? {
                    if let Some(d) = d {
                        return Ok(Some(locate(&d, json!({ "s": s }))));
                    }
                }
                Ok(None)
            }
            Check::StripOracle { f, kmax, lmax } => {
                let fam = qdiff::solve_y_family(f, kmax, lmax)?;
                for k in 1..=kmax {
                    let want = table_to_series(&paths::enum_strip(f, k, lmax)?, lmax)?;
                    if let Some(d) = first_discrepancy(&want, &fam[k as usize - 1], None)? {
                        return Ok(Some(locate(&d, json!({ "k": k }))));
                    }
                }
                let slope = qdiff::solve_slope(1, f, lmax)?.series(0)?;
                Ok(first_discrepancy(&slope, &fam[0], None)?
                    .map(|d| locate(&d, json!({ "k": 1, "against": "slope" }))))
            }
            Check::StripBound { f, lmax, jmax } => strip_bound(f, lmax, jmax),
            Check::Yinf { f, lmax, qorder } => {
                // solve_yinf substitutes the limit into its functional equation itself.
                qdiff::solve_yinf(f, lmax, qorder)?;
                Ok(qdiff::check_yk_ratio(f, f + 1, lmax, qorder)?
                    .map(|(k, d)| locate(&d, json!({ "k": k }))))
            }
            Check::StableOracle { f, lmax, jmax } => {
                let stable = table_to_series(&paths::enum_strip_stable(f, lmax, jmax)?, lmax)?;
                let yinf = qdiff::solve_yinf(f, lmax, jmax + 1)?;
                Ok(first_discrepancy(&stable, &yinf, Some(jmax + 1))?
                    .map(|d| locate(&d, json!({}))))
            }
            Check::Corollary { f, lmax, qorder } => {
                let r = qdiff::corollary_residual(
                    &qdiff::solve_h(f, lmax, qorder)?,
                    &qdiff::solve_yinf(f, lmax, qorder)?,
                );
                Ok(
                    first_discrepancy(&XSeries::zero(r.x_order()), &r, Some(qorder))?
                        .map(|d| locate(&d, json!({}))),
                )
            }
            Check::HPsi { f, lmax, qorder } => {
                let h = qdiff::solve_h(f, lmax, qorder)?;
                let psi = knot::psi_substituted(f, lmax, qorder)?;
                Ok(first_discrepancy(&h, &psi, Some(qorder))?.map(|d| locate(&d, json!({}))))
            }
            Check::YTilde { f, lmax, qorder } => {
                let ys = qdiff::solve_y_family(f, f + 1, lmax)?;
                let yt = knot::ytilde_family(f, lmax, qorder)?;
                for i in 0..=f as usize {
                    if let Some(d) =
                        first_discrepancy(&ys[i].with_q_window(qorder), &yt[i], Some(qorder))?
                    {
                        return Ok(Some(locate(&d, json!({ "i": i + 1 }))));
                    }
                }
                Ok(None)
            }
            Check::Nonneg { f, lmax, qorder } => {
                // solve_h rejects negative coefficients on its own.
                qdiff::solve_h(f, lmax, qorder)?;
                let psi = knot::psi_substituted(f, lmax, qorder)?;
                for (l, c) in psi.coeffs().iter().enumerate() {
                    if let Some((a, q, v)) = c
                        .monomials()
                        .find(|(_, _, v)| v.sign() == num_bigint::Sign::Minus)
                    {
                        return Ok(Some(
                            json!({ "x": l, "a": a, "q": q, "expected": ">= 0", "got": v.to_string() }),
                        ));
                    }
                }
                Ok(None)
            }
            Check::AdamsIdentity { max_size } => {
                for size in 0..=max_size {
                    for lam in knot::partitions_of(size) {
                        let got = knot::adams_coeffs(&lam, 1)?;
                        let want: BTreeMap<Partition, BigInt> =
                            [(lam.clone(), BigInt::from(1))].into_iter().collect();
                        if got != want {
                            return Ok(Some(
                                json!({ "partition": lam.parts(), "got": format!("{got:?}") }),
                            ));
                        }
                    }
                }
                Ok(None)
            }
            Check::AdamsOracle { max_size, max_m } => {
                for size in 0..=max_size {
                    for lam in knot::partitions_of(size) {
                        for m in 1..=max_m {
                            let got = knot::adams_coeffs_with_cap(&lam, m, m * max_size)?;
                            let want = jacobi_trudi::jt_adams_coeffs(&lam, m)?;
                            if got != want {
                                return Ok(Some(json!({
                                    "partition": lam.parts(), "m": m,
                                    "expected": format!("{want:?}"), "got": format!("{got:?}"),
                                })));
                            }
                        }
                    }
                }
                Ok(None)
            }
            Check::WaveEquations { f, kmax, qorder } => {
                Ok(knot::check_wave_qdiff(f, kmax, qorder)?
                    .map(|hit| serde_json::to_value(hit).unwrap_or(Value::Null)))
            }
            Check::HomflyGrid {
                m,
                n,
                ref partition,
                qorder,
            } => {
                knot::homfly(partition, m, n, qorder)?;
                Ok(None)
            }
            Check::PbarEquation { f, rmax, qorder } => {
                Ok(knot::check_pbar_qdiff(f, rmax, qorder)?.map(|d| locate(&d, json!({}))))
            }
            Check::PbarFirst { f, qorder } => {
                let p = knot::superpoly_series(f, 1, qorder)?;
                let fi = f as i64;
                let inv = QWindowSeries::from_terms([(0, 1), (2, -1)])
                    .with_window(qorder)
                    .invert_unit()?;
                let first = AQCoeff::from_terms([(2, fi, -1), (0, fi + 1, -1)])
                    .mul_series(&inv)
                    .with_window(qorder);
                let want = XSeries::from_coeffs(vec![AQCoeff::one().with_window(qorder), first]);
                Ok(first_discrepancy(&want, &p, Some(qorder))?.map(|d| locate(&d, json!({}))))
            }
        }
    }
}

fn closed_form(m: u32, n: u32, lmax: u32) -> Result<Option<Value>> {
    let mn = (m * n) as i64;
    for l in 0..=lmax as i64 {
        let lo = mn * l - (m + n) as i64;
        for s in (lo + 1).max(0)..=mn * l {
            let table = paths::enum_slope(m, n, s as u32, l as u32)?;
            let got: BTreeMap<(u32, i64), BigInt> = table
                .entries
                .into_iter()
                .filter(|((_, _, ll), _)| *ll as i64 == l)
                .map(|((d, a, _), c)| ((d, a), c))
                .collect();
            let mut want = BTreeMap::new();
            want.insert((0u32, mn * mn * l * l), BigInt::from(1));
            if l >= 1 {
                want.insert((1, mn * (mn * l * l - 1)), BigInt::from(1));
            }
            if got != want {
                return Ok(Some(
                    json!({ "s": s, "l": l, "expected": format!("{want:?}"), "got": format!("{got:?}") }),
                ));
            }
        }
    }
    Ok(None)
}

fn strip_bound(f: u32, lmax: u32, jmax: i64) -> Result<Option<Value>> {
    // enum_strip_stable fails on any decrease in k before reaching the limit.
    let (_, k_stable) = paths::stabilize_strip(f, lmax, jmax)?;
    for k in 1..=k_stable + 1 {
        let table = paths::enum_strip_window(f, k, lmax, Some(jmax))?;
        for (&(d, j, l), c) in &table.entries {
            let bound = paths::lemma_bound(f, j, l);
            if c > &bound {
                return Ok(Some(
                    json!({ "k": k, "i": 2 * d, "j": j, "l": l, "expected": format!("<= {bound}"), "got": c.to_string() }),
                ));
            }
        }
    }
    Ok(None)
}
