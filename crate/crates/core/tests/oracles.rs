//! Solver output against a separate, deliberately naive enumeration written
//! here: every step word is generated, then filtered, and areas come from the
//! shoelace formula rather than incremental tallies.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use schroder::knot;
use schroder::qdiff::{solve_h, solve_slope, solve_y_family};
use schroder::series::{first_discrepancy, AQCoeff, XSeries};

type Counts = BTreeMap<(i64, i64), i64>;

/// All words over R=(1,0), U=(0,1), D=(1,1) from the origin to `(ex, ey)`.
fn words(ex: i64, ey: i64) -> Vec<Vec<(i64, i64)>> {
    if ex == 0 && ey == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (dx, dy) in [(1, 0), (0, 1), (1, 1)] {
        if dx <= ex && dy <= ey {
            for mut w in words(ex - dx, ey - dy) {
                w.insert(0, (dx, dy));
                out.push(w);
            }
        }
    }
    out
}

fn vertices(w: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut v = vec![(0, 0)];
    for (dx, dy) in w {
        let (x, y) = *v.last().unwrap();
        v.push((x + dx, y + dy));
    }
    v
}

/// Twice the area enclosed by the path and the x-axis/right edge (shoelace).
fn twice_area_under(v: &[(i64, i64)]) -> i64 {
    let (ex, _) = *v.last().unwrap();
    let mut poly = v.to_vec();
    poly.push((ex, 0));
    let mut s = 0;
    for i in 0..poly.len() {
        let (x1, y1) = poly[i];
        let (x2, y2) = poly[(i + 1) % poly.len()];
        s += x1 * y2 - x2 * y1;
    }
    s.abs()
}

/// `(2·#D, j)` counts below slope `m/n` with midway shift `s`.
fn naive_slope(m: i64, n: i64, s: i64, l: i64) -> Counts {
    let (ex, ey) = (n * l, m * l);
    let mut out = Counts::new();
    for w in words(ex, ey) {
        let v = vertices(&w);
        let ok = v
            .iter()
            .all(|&(x, y)| n * y <= m * x && (x == ex || y == 0 || n * y <= m * x - s));
        if ok {
            let d = w.iter().filter(|s| **s == (1, 1)).count() as i64;
            let j = m * n * l * l - twice_area_under(&v);
            *out.entry((2 * d, j)).or_default() += 1;
        }
    }
    out
}

/// Strip paths below `x = f y` ending at `(f l + k − 1, l)`; `j` is twice the
/// area between the path and the line, found as
/// `2·(area left of the path) − f l^2`.
fn naive_strip(f: i64, k: i64, l: i64) -> Counts {
    let (ex, ey) = (f * l + k - 1, l);
    let mut out = Counts::new();
    for w in words(ex, ey) {
        let v = vertices(&w);
        if v.iter().all(|&(x, y)| f * y <= x) {
            let d = w.iter().filter(|s| **s == (1, 1)).count() as i64;
            // twice area left of the path within 0 <= y <= l: ex·l·2 − 2·under
            let left2 = 2 * ex * ey - twice_area_under(&v);
            *out.entry((2 * d, left2 - f * l * l)).or_default() += 1;
        }
    }
    out
}

fn coeff_counts(c: &AQCoeff) -> Counts {
    c.monomials()
        .map(|(a, q, v)| ((a, q), i64::try_from(v).unwrap()))
        .collect()
}

#[test]
fn slope_solver_against_word_enumeration() {
    for (m, n, lmax) in [(1u32, 1u32, 4u32), (1, 2, 3), (2, 3, 2), (3, 4, 1)] {
        let fam = solve_slope(m, n, lmax).unwrap();
        for s in 0..=m * n {
            let y = fam.series(s).unwrap();
            for l in 0..=lmax {
                let want = if (s as i64) > (m * n * l) as i64 {
                    Counts::new()
                } else {
                    naive_slope(m as i64, n as i64, s as i64, l as i64)
                };
                assert_eq!(
                    coeff_counts(y.coeff(l as usize)),
                    want,
                    "(m,n,s,l)=({m},{n},{s},{l})"
                );
            }
        }
    }
}

#[test]
fn strip_solver_against_word_enumeration() {
    for f in 1..=3u32 {
        let fam = solve_y_family(f, f + 2, 3).unwrap();
        for k in 1..=f + 2 {
            for l in 0..=3u32 {
                let want = naive_strip(f as i64, k as i64, l as i64);
                assert_eq!(
                    coeff_counts(fam[k as usize - 1].coeff(l as usize)),
                    want,
                    "(f,k,l)=({f},{k},{l})"
                );
            }
        }
    }
}

#[test]
fn large_schroder_numbers() {
    let y = solve_slope(1, 1, 5).unwrap().series(0).unwrap();
    let naive: Vec<BigInt> = (0..=5)
        .map(|l| naive_slope(1, 1, 0, l).values().sum::<i64>().into())
        .collect();
    assert_eq!(y.totals(), naive);
}

#[test]
fn mismatched_parameters_are_located() {
    let h = solve_h(1, 2, 10).unwrap();
    let psi = knot::psi_substituted(2, 2, 10).unwrap();
    let d = first_discrepancy(&h, &psi, Some(10))
        .unwrap()
        .expect("different f must differ");
    assert_eq!(d.x, 1);
    let zero = XSeries::zero(3).with_q_window(10);
    assert!(first_discrepancy(&zero, &h, Some(11)).is_err());
}
