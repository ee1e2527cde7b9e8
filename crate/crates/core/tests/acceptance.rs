//! Acceptance gate: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use schroder::knot::Partition;
use schroder::paths::count_slope_paths;
use schroder::verify::{desk_checks, run_checks, Check, VerificationReport};

const SLOPES: [(u32, u32); 5] = [(1, 1), (1, 2), (1, 3), (2, 3), (3, 4)];

fn slope_lmax(m: u32) -> u32 {
    if m == 1 {
        4
    } else {
        3
    }
}

struct Criterion {
    id: u32,
    name: &'static str,
    checks: Vec<Check>,
    budget: Option<Duration>,
}

fn criteria() -> Vec<Criterion> {
    let q = 40;
    let mut knot = vec![
        Check::AdamsIdentity { max_size: 4 },
        Check::AdamsOracle {
            max_size: 3,
            max_m: 3,
        },
    ];
    knot.extend((1..=3).map(|f| Check::WaveEquations {
        f,
        kmax: 4,
        qorder: q,
    }));
    for (m, n) in [(2, 3), (3, 4)] {
        for k in 1..=2 {
            knot.push(Check::HomflyGrid {
                m,
                n,
                partition: Partition::row(k),
                qorder: q,
            });
        }
    }
    vec![
        Criterion {
            id: 1,
            name: "slope solver equals enumerator",
            checks: SLOPES
                .iter()
                .map(|&(m, n)| Check::Oracle {
                    m,
                    n,
                    lmax: slope_lmax(m),
                })
                .collect(),
            budget: Some(Duration::from_secs(60)),
        },
        Criterion {
            id: 2,
            name: "empty-midway closed form",
            checks: SLOPES
                .iter()
                .map(|&(m, n)| Check::ClosedForm {
                    m,
                    n,
                    lmax: slope_lmax(m),
                })
                .collect(),
            budget: None,
        },
        Criterion {
            id: 3,
            name: "unit-slope totals",
            checks: vec![Check::Totals { lmax: 4 }],
            budget: None,
        },
        Criterion {
            id: 4,
            name: "factorization at multiples of m or n",
            checks: vec![
                Check::Simpys {
                    m: 2,
                    n: 3,
                    lmax: 3,
                },
                Check::Simpys {
                    m: 3,
                    n: 4,
                    lmax: 3,
                },
            ],
            budget: None,
        },
        Criterion {
            id: 5,
            name: "strip solver equals enumerator",
            checks: (1..=3)
                .map(|f| Check::StripOracle {
                    f,
                    kmax: f + 2,
                    lmax: 3,
                })
                .collect(),
            budget: None,
        },
        Criterion {
            id: 6,
            name: "strip monotonicity and bound",
            checks: (1..=2)
                .map(|f| Check::StripBound {
                    f,
                    lmax: 3,
                    jmax: 16,
                })
                .collect(),
            budget: None,
        },
        Criterion {
            id: 7,
            name: "y_inf functional equation and h y_inf(-x) = 1",
            checks: (1..=2)
                .flat_map(|f| {
                    [
                        Check::Yinf {
                            f,
                            lmax: 3,
                            qorder: 32,
                        },
                        Check::Corollary {
                            f,
                            lmax: 3,
                            qorder: 32,
                        },
                    ]
                })
                .collect(),
            budget: None,
        },
        Criterion {
            id: 8,
            name: "h equals specialized wave function",
            checks: (1..=3)
                .map(|f| Check::HPsi {
                    f,
                    lmax: 5,
                    qorder: q,
                })
                .collect(),
            budget: Some(Duration::from_secs(30)),
        },
        Criterion {
            id: 9,
            name: "strip family equals superpolynomial ratios",
            checks: (1..=3)
                .map(|f| Check::YTilde {
                    f,
                    lmax: 4,
                    qorder: q,
                })
                .collect(),
            budget: None,
        },
        Criterion {
            id: 10,
            name: "non-negativity of h and psi",
            checks: (1..=3)
                .map(|f| Check::Nonneg {
                    f,
                    lmax: 5,
                    qorder: q,
                })
                .collect(),
            budget: None,
        },
        Criterion {
            id: 11,
            name: "knot-side internal checks",
            checks: knot,
            budget: None,
        },
        Criterion {
            id: 12,
            name: "superpolynomial equation and first term",
            checks: (1..=3)
                .flat_map(|f| {
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
            budget: None,
        },
    ]
}

fn describe_failures(reports: &[VerificationReport]) -> String {
    reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| {
            format!(
                "{} {} -> {}",
                r.check,
                serde_json::Value::Object(r.params.clone()),
                r.discrepancy.clone().unwrap_or_default()
            )
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn main() -> ExitCode {
    let mut all_ok = true;
    for c in criteria() {
        let start = Instant::now();
        let reports = run_checks(&c.checks);
        let elapsed = start.elapsed();
        let mut ok = reports.iter().all(VerificationReport::passed);
        let mut note = String::new();
        if c.id == 3 {
            // Large Schröder numbers, counted path by path without weights.
            let counted: Vec<String> = (0..=4)
                .map(|l| count_slope_paths(1, 1, 0, l).unwrap().to_string())
                .collect();
            note = format!(" totals {}", counted.join(","));
        }
        if let Some(b) = c.budget {
            if elapsed > b {
                ok = false;
                note.push_str(&format!(" over budget {b:?}"));
            }
        }
        if !ok {
            note.push_str(&format!(" {}", describe_failures(&reports)));
        }
        println!(
            "criterion {:>2} {}: {} ({} checks, {:.2?}){}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.name,
            reports.len(),
            elapsed,
            note
        );
        all_ok &= ok;
    }

    let start = Instant::now();
    let desk = run_checks(&desk_checks("all").expect("desk profile"));
    let elapsed = start.elapsed();
    let ok = desk.iter().all(VerificationReport::passed) && elapsed < Duration::from_secs(120);
    println!(
        "desk profile {}: {} checks in {:.2?}{}",
        if ok { "PASS" } else { "FAIL" },
        desk.len(),
        elapsed,
        if ok {
            String::new()
        } else {
            format!(" {}", describe_failures(&desk))
        }
    );
    all_ok &= ok;

    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
