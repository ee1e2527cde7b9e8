use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schroder::knot::{self, Partition};
use schroder::paths::{self, WeightTable};
use schroder::series::{NuTSeriesJson, XSeries, XSeriesJson, DEFAULT_Q_WINDOW};
use schroder::verify::{self, Check};
use schroder::{qdiff, Error};

#[derive(Parser, Debug)]
#[command(
    name = "schroder",
    version,
    about = "Exact generating functions of generalized Schröder paths and torus-knot checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count paths by brute force: slope | strip | stable
    Enumerate(Target),
    /// Solve q-difference systems: slope | y | yinf | h
    Solve(Target),
    /// Knot-side series: homfly | wave | adams | psi | superpoly | ytilde
    Knot(Target),
    /// Run verification suites
    Verify(Target),
}

#[derive(Args, Debug)]
struct Target {
    what: String,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args, Debug, Default)]
struct Flags {
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    f: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    i: Option<u32>,
    /// Comma-separated parts, e.g. 2,1
    #[arg(long)]
    partition: Option<String>,
    #[arg(long)]
    lmax: Option<u32>,
    #[arg(long)]
    kmax: Option<u32>,
    #[arg(long)]
    rmax: Option<u32>,
    /// q-window: exponents below this are exact
    #[arg(long)]
    qorder: Option<i64>,
    /// Number of x-coefficients kept (lmax + 1)
    #[arg(long)]
    xorder: Option<u32>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    profile: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Failure classes mapped onto exit codes 2 and 1.
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSlope { .. }
            | Error::InvalidParameter(_)
            | Error::SizeCapExceeded { .. } => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn need<T: Copy>(v: Option<T>, name: &str) -> Outcome<T> {
    v.ok_or_else(|| Failure::Usage(format!("missing --{name}")))
}

impl Flags {
    fn lmax(&self) -> Outcome<u32> {
        match (self.lmax, self.xorder) {
            (Some(l), _) => Ok(l),
            (None, Some(0)) => Err(Failure::Usage("--xorder must be >= 1".into())),
            (None, Some(x)) => Ok(x - 1),
            (None, None) => Err(Failure::Usage("missing --lmax or --xorder".into())),
        }
    }

    fn qorder(&self) -> i64 {
        self.qorder.unwrap_or(DEFAULT_Q_WINDOW)
    }

    fn partition(&self) -> Outcome<Partition> {
        let raw = self
            .partition
            .as_deref()
            .ok_or_else(|| Failure::Usage("missing --partition".into()))?;
        raw.parse()
            .map_err(|e: Error| Failure::Usage(e.to_string()))
    }

    fn writer(&self) -> Outcome<Box<dyn Write>> {
        Ok(match &self.out {
            Some(p) => Box::new(File::create(p)?),
            None => Box::new(io::stdout().lock()),
        })
    }

    fn emit_json(&self, v: &Value) -> Outcome<()> {
        if self.format == Some(Format::Csv) {
            return Err(Failure::Usage("this output is JSON only".into()));
        }
        let mut w = self.writer()?;
        serde_json::to_writer_pretty(&mut w, v).map_err(|e| Failure::Runtime(e.to_string()))?;
        writeln!(w)?;
        Ok(())
    }
}

fn series_json(s: &XSeries) -> Value {
    serde_json::to_value(XSeriesJson::from(s)).unwrap_or(Value::Null)
}

fn enumerate(what: &str, fl: &Flags) -> Outcome<()> {
    let lmax = fl.lmax()?;
    let table: WeightTable = match what {
        "slope" => paths::enum_slope(need(fl.m, "m")?, need(fl.n, "n")?, need(fl.s, "s")?, lmax)?,
        "strip" => paths::enum_strip(need(fl.f, "f")?, need(fl.k, "k")?, lmax)?,
        "stable" => paths::enum_strip_stable(need(fl.f, "f")?, lmax, fl.qorder() - 1)?,
        other => {
            return Err(Failure::Usage(format!(
                "unknown enumerate target {other:?} (slope | strip | stable)"
            )))
        }
    };
    match fl.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let w = fl.writer()?;
            table.write_csv(w)?;
            Ok(())
        }
        Format::Json => fl.emit_json(&json!({ "lmax": lmax, "table": table.to_json() })),
    }
}

fn solve(what: &str, fl: &Flags) -> Outcome<()> {
    let lmax = fl.lmax()?;
    let value = match what {
        "slope" => {
            let (m, n) = (need(fl.m, "m")?, need(fl.n, "n")?);
            let fam = qdiff::solve_slope(m, n, lmax)?;
            let slots: Vec<u32> = match fl.s {
                Some(s) if s > m * n => {
                    return Err(Failure::Usage(format!("--s must be <= mn = {}", m * n)))
                }
                Some(s) => vec![s],
                None => (0..=m * n).collect(),
            };
            let items = slots
                .into_iter()
                .map(|s| Ok(json!({ "family": "slope", "m": m, "n": n, "s": s, "lmax": lmax, "series": series_json(&fam.series(s)?) })))
                .collect::<Outcome<Vec<_>>>()?;
            Value::Array(items)
        }
        "y" => {
            let f = need(fl.f, "f")?;
            let kmax = fl.kmax.or(fl.k).unwrap_or(f + 1);
            let fam = qdiff::solve_y_family(f, kmax, lmax)?;
            Value::Array(
                fam.iter()
                    .enumerate()
                    .map(|(k, y)| json!({ "family": "strip", "m": 1, "n": f, "k": k + 1, "lmax": lmax, "series": series_json(y) }))
                    .collect(),
            )
        }
        "yinf" => {
            let f = need(fl.f, "f")?;
            let y = qdiff::solve_yinf(f, lmax, fl.qorder())?;
            json!({ "family": "strip", "m": 1, "n": f, "k": "inf", "lmax": lmax, "qorder": fl.qorder(), "series": series_json(&y) })
        }
        "h" => {
            let f = need(fl.f, "f")?;
            let h = qdiff::solve_h(f, lmax, fl.qorder())?;
            json!({ "family": "h", "m": 1, "n": f, "lmax": lmax, "qorder": fl.qorder(), "series": series_json(&h) })
        }
        other => {
            return Err(Failure::Usage(format!(
                "unknown solve target {other:?} (slope | y | yinf | h)"
            )))
        }
    };
    fl.emit_json(&value)
}

fn knot_cmd(what: &str, fl: &Flags) -> Outcome<()> {
    let q = fl.qorder();
    let value = match what {
        "homfly" => {
            let lam = fl.partition()?;
            let (m, n) = (need(fl.m, "m")?, need(fl.n, "n")?);
            let h = knot::homfly(&lam, m, n, q)?;
            json!({ "m": m, "n": n, "partition": lam.parts(), "qorder": q, "value": NuTSeriesJson::from(&h) })
        }
        "wave" => {
            let (m, n) = (need(fl.m, "m")?, need(fl.n, "n")?);
            let kmax = need(fl.kmax.or(fl.k), "kmax")?;
            let w = knot::wave(m, n, kmax, q)?;
            let items: Vec<Value> = w
                .iter()
                .enumerate()
                .map(|(k, h)| json!({ "k": k, "value": NuTSeriesJson::from(h) }))
                .collect();
            json!({ "m": m, "n": n, "qorder": q, "coefficients": items })
        }
        "adams" => {
            let lam = fl.partition()?;
            let m = need(fl.m, "m")?;
            let c = knot::adams_coeffs(&lam, m)?;
            let items: Vec<Value> = c
                .iter()
                .map(|(mu, v)| json!({ "mu": mu.parts(), "c": v.to_string() }))
                .collect();
            json!({ "partition": lam.parts(), "m": m, "coefficients": items })
        }
        "psi" => {
            let f = need(fl.f, "f")?;
            let lmax = fl.lmax()?;
            json!({ "f": f, "lmax": lmax, "qorder": q, "series": series_json(&knot::psi_substituted(f, lmax, q)?) })
        }
        "superpoly" => {
            let f = need(fl.f, "f")?;
            let rmax = need(fl.rmax.or(fl.lmax), "rmax")?;
            json!({ "f": f, "rmax": rmax, "qorder": q, "series": series_json(&knot::superpoly_series(f, rmax, q)?) })
        }
        "ytilde" => {
            let (f, i) = (need(fl.f, "f")?, need(fl.i, "i")?);
            let lmax = fl.lmax()?;
            json!({ "f": f, "i": i, "lmax": lmax, "qorder": q, "series": series_json(&knot::ytilde(f, i, lmax, q)?) })
        }
        other => {
            return Err(Failure::Usage(format!(
                "unknown knot target {other:?} (homfly | wave | adams | psi | superpoly | ytilde)"
            )))
        }
    };
    fl.emit_json(&value)
}

/// Checks for a suite from explicit flags.
fn explicit_checks(suite: &str, fl: &Flags) -> Outcome<Vec<Check>> {
    let slope =
        || -> Outcome<(u32, u32, u32)> { Ok((need(fl.m, "m")?, need(fl.n, "n")?, fl.lmax()?)) };
    let strip = || -> Outcome<(u32, u32, i64)> { Ok((need(fl.f, "f")?, fl.lmax()?, fl.qorder())) };
    Ok(match suite {
        "oracle" => {
            let (m, n, lmax) = slope()?;
            vec![Check::Oracle { m, n, lmax }]
        }
        "equations" => {
            let (m, n, lmax) = slope()?;
            vec![Check::Equations { m, n, lmax }]
        }
        "closedform" => {
            let (m, n, lmax) = slope()?;
            vec![Check::ClosedForm { m, n, lmax }]
        }
        "simpys" => {
            let (m, n, lmax) = slope()?;
            vec![Check::Simpys { m, n, lmax }]
        }
        "totals" => vec![Check::Totals { lmax: fl.lmax()? }],
        "prop22" => {
            let f = need(fl.f, "f")?;
            vec![Check::StripOracle {
                f,
                kmax: fl.kmax.unwrap_or(f + 2),
                lmax: fl.lmax()?,
            }]
        }
        "lemma21" => {
            let (f, lmax, q) = strip()?;
            vec![Check::StripBound {
                f,
                lmax,
                jmax: q - 1,
            }]
        }
        "yinf" => {
            let (f, lmax, qorder) = strip()?;
            vec![Check::Yinf { f, lmax, qorder }]
        }
        "corollary" => {
            let (f, lmax, qorder) = strip()?;
            vec![Check::Corollary { f, lmax, qorder }]
        }
        "prop12" => {
            let (f, lmax, qorder) = strip()?;
            vec![Check::HPsi { f, lmax, qorder }]
        }
        "prop13" => {
            let (f, lmax, qorder) = strip()?;
            vec![Check::YTilde { f, lmax, qorder }]
        }
        "nonneg" => {
            let (f, lmax, qorder) = strip()?;
            vec![Check::Nonneg { f, lmax, qorder }]
        }
        "pbar" => {
            let f = need(fl.f, "f")?;
            let qorder = fl.qorder();
            vec![
                Check::PbarEquation {
                    f,
                    rmax: need(fl.rmax.or(fl.lmax), "rmax")?,
                    qorder,
                },
                Check::PbarFirst { f, qorder },
            ]
        }
        "knot" => {
            let mut v = vec![
                Check::AdamsIdentity { max_size: 4 },
                Check::AdamsOracle {
                    max_size: 3,
                    max_m: 3,
                },
            ];
            if let Some(f) = fl.f {
                v.push(Check::WaveEquations {
                    f,
                    kmax: fl.kmax.unwrap_or(4),
                    qorder: fl.qorder(),
                });
            }
            if let (Some(m), Some(n)) = (fl.m, fl.n) {
                v.push(Check::HomflyGrid {
                    m,
                    n,
                    partition: fl.partition()?,
                    qorder: fl.qorder(),
                });
            }
            v
        }
        "all" => return Err(Failure::Usage("verify all needs --profile desk".into())),
        other => {
            return Err(Failure::Usage(format!(
                "unknown suite {other:?} ({})",
                verify::SUITES.join(" | ")
            )))
        }
    })
}

/// Runs the selected checks; `Ok(true)` when every one passed.
fn verify_cmd(suite: &str, fl: &Flags) -> Outcome<bool> {
    let checks = match fl.profile.as_deref() {
        Some("desk") => verify::desk_checks(suite)
            .ok_or_else(|| Failure::Usage(format!("unknown suite {suite:?}")))?,
        Some(other) => return Err(Failure::Usage(format!("unknown profile {other:?} (desk)"))),
        None => explicit_checks(suite, fl)?,
    };
    let reports = verify::run_checks(&checks);
    let mut err = io::stderr().lock();
    for r in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        writeln!(
            err,
            "{status} {} {} ({:.0} ms)",
            r.check,
            Value::Object(r.params.clone()),
            r.ms
        )?;
        if let Some(d) = &r.discrepancy {
            writeln!(err, "     {d}")?;
        }
    }
    let all = reports.iter().all(|r| r.passed());
    writeln!(
        err,
        "{} of {} checks passed",
        reports.iter().filter(|r| r.passed()).count(),
        reports.len()
    )?;
    fl.emit_json(&serde_json::to_value(&reports).map_err(|e| Failure::Runtime(e.to_string()))?)?;
    Ok(all)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Enumerate(t) => enumerate(&t.what, &t.flags).map(|_| true),
        Command::Solve(t) => solve(&t.what, &t.flags).map(|_| true),
        Command::Knot(t) => knot_cmd(&t.what, &t.flags).map(|_| true),
        Command::Verify(t) => verify_cmd(&t.what, &t.flags),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
