//! Identity-verification suites and their machine-readable reports.

mod check;

use rayon::prelude::*;

pub use check::{Check, Status, VerificationReport};

use crate::knot::Partition;

/// Suite names accepted by `verify`.
pub const SUITES: &[&str] = &[
    "oracle",
    "equations",
    "closedform",
    "totals",
    "simpys",
    "prop22",
    "lemma21",
    "yinf",
    "corollary",
    "prop12",
    "prop13",
    "nonneg",
    "knot",
    "pbar",
    "all",
];

/// Slope pairs of the desk profile with their size bound.
pub const DESK_SLOPES: &[(u32, u32, u32)] =
    &[(1, 1, 4), (1, 2, 4), (1, 3, 4), (2, 3, 3), (3, 4, 3)];
pub const DESK_STRIPS: &[u32] = &[1, 2, 3];
pub const DESK_QORDER: i64 = 40;

/// The checks a suite runs in the desk profile.
pub fn desk_checks(suite: &str) -> Option<Vec<Check>> {
    let slopes = DESK_SLOPES.iter().copied();
    let q = DESK_QORDER;
    let checks = match suite {
        "oracle" => slopes
            .map(|(m, n, lmax)| Check::Oracle { m, n, lmax })
            .collect(),
        "equations" => slopes
            .map(|(m, n, lmax)| Check::Equations { m, n, lmax })
            .collect(),
        "closedform" => slopes
            .map(|(m, n, lmax)| Check::ClosedForm { m, n, lmax })
            .collect(),
        "totals" => vec![Check::Totals { lmax: 4 }],
        "simpys" => slopes
            .filter(|&(m, _, _)| m > 1)
            .map(|(m, n, lmax)| Check::Simpys { m, n, lmax })
            .collect(),
        "prop22" => DESK_STRIPS
            .iter()
            .map(|&f| Check::StripOracle {
                f,
                kmax: f + 2,
                lmax: 3,
            })
            .collect(),
        "lemma21" => [1, 2]
            .into_iter()
            .map(|f| Check::StripBound {
                f,
                lmax: 3,
                jmax: 16,
            })
            .collect(),
        "yinf" => [1, 2]
            .into_iter()
            .flat_map(|f| {
                [
                    Check::Yinf {
                        f,
                        lmax: 3,
                        qorder: 32,
                    },
                    Check::StableOracle {
                        f,
                        lmax: 3,
                        jmax: 16,
                    },
                ]
            })
            .collect(),
        "corollary" => [1, 2]
            .into_iter()
            .map(|f| Check::Corollary {
                f,
                lmax: 3,
                qorder: 32,
            })
            .collect(),
        "prop12" => DESK_STRIPS
            .iter()
            .map(|&f| Check::HPsi {
                f,
                lmax: 5,
                qorder: q,
            })
            .collect(),
        "prop13" => DESK_STRIPS
            .iter()
            .map(|&f| Check::YTilde {
                f,
                lmax: 4,
                qorder: q,
            })
            .collect(),
        "nonneg" => DESK_STRIPS
            .iter()
            .map(|&f| Check::Nonneg {
                f,
                lmax: 5,
                qorder: q,
            })
            .collect(),
        "knot" => {
            let mut v = vec![
                Check::AdamsIdentity { max_size: 4 },
                Check::AdamsOracle {
                    max_size: 3,
                    max_m: 3,
                },
            ];
            v.extend(DESK_STRIPS.iter().map(|&f| Check::WaveEquations {
                f,
                kmax: 4,
                qorder: q,
            }));
            for (m, n) in [(2, 3), (3, 4)] {
                for k in 1..=2 {
                    v.push(Check::HomflyGrid {
                        m,
                        n,
                        partition: Partition::row(k),
                        qorder: q,
                    });
                }
            }
            v
        }
        "pbar" => DESK_STRIPS
            .iter()
            .flat_map(|&f| {
                [
                    Check::PbarEquation {
                        f,
                        rmax: 5,
                        qorder: q,
                    },
                    Check::PbarFirst { f, qorder: q },
                ]
            })
            .collect(),
        "all" => SUITES
            .iter()
            .filter(|s| **s != "all")
            .flat_map(|s| desk_checks(s).unwrap_or_default())
            .collect(),
        _ => return None,
    };
    Some(checks)
}

/// Worker count from `SCHRODER_THREADS`, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var("SCHRODER_THREADS")
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
}

/// Runs checks in a work pool; reports come back in input order.
pub fn run_checks(checks: &[Check]) -> Vec<VerificationReport> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_cap() {
        builder = builder.num_threads(n);
    }
    match builder.build() {
        Ok(pool) => pool.install(|| checks.par_iter().map(Check::run).collect()),
        Err(_) => checks.iter().map(Check::run).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_has_checks() {
        for s in SUITES {
            assert!(!desk_checks(s).unwrap().is_empty(), "{s}");
        }
        assert!(desk_checks("nope").is_none());
    }

    #[test]
    fn failure_carries_locator() {
        let r = Check::Oracle {
            m: 2,
            n: 2,
            lmax: 1,
        }
        .run();
        assert_eq!(r.status, Status::Fail);
        assert!(r.discrepancy.unwrap()["error"]
            .as_str()
            .unwrap()
            .contains("gcd(2, 2)"));
    }

    #[test]
    fn small_checks_pass_deterministically() {
        let checks = vec![
            Check::Oracle {
                m: 1,
                n: 2,
                lmax: 2,
            },
            Check::PbarFirst { f: 2, qorder: 12 },
        ];
        let a = run_checks(&checks);
        let b = run_checks(&checks);
        assert!(a.iter().all(VerificationReport::passed));
        assert_eq!(
            a.iter().map(|r| r.untimed()).collect::<Vec<_>>(),
            b.iter().map(|r| r.untimed()).collect::<Vec<_>>()
        );
    }
}
