use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::table::{Family, WeightTable};
use super::Step;
use crate::error::{Error, Result};

type Tally = BTreeMap<(u32, i64), BigInt>;

struct StripGeometry {
    f: i64,
    end_x: i64,
    end_y: i64,
    jmax: Option<i64>,
}

impl StripGeometry {
    fn admits(&self, x: i64, y: i64) -> bool {
        x <= self.end_x && y <= self.end_y && self.f * y <= x
    }

    /// Twice the area between the line `x = f y` and the step, within the
    /// height band the step crosses. Right steps cross no band.
    fn band_area(&self, step: Step, x: i64, y: i64) -> i64 {
        match step {
            Step::Up => 2 * x - self.f * (2 * y + 1),
            Step::Diag => 2 * x + 1 - self.f * (2 * y + 1),
            Step::Right | Step::Left => 0,
        }
    }
}

fn check_strip(f: u32, k: u32) -> Result<()> {
    if f == 0 || k == 0 {
        return Err(Error::InvalidParameter(format!(
            "strip needs f, k >= 1 (got f = {f}, k = {k})"
        )));
    }
    Ok(())
}

/// Counts `n_{i,j,l;k}` for every size `l <= lmax`: paths below `y = x/f`
/// from the origin to `(fl + k − 1, l)`, keyed by `(d, j, l)`.
pub fn enum_strip(f: u32, k: u32, lmax: u32) -> Result<WeightTable> {
    enum_strip_window(f, k, lmax, None)
}

/// As [`enum_strip`], keeping only areas `j <= jmax`. Band areas are
/// non-negative, so partial paths beyond the bound are pruned.
pub fn enum_strip_window(f: u32, k: u32, lmax: u32, jmax: Option<i64>) -> Result<WeightTable> {
    check_strip(f, k)?;
    let mut table = WeightTable::new(Family::Strip { f, k });
    for l in 0..=lmax {
        let geo = StripGeometry {
            f: f as i64,
            end_x: (f * l + k - 1) as i64,
            end_y: l as i64,
            jmax,
        };
        let mut memo = HashMap::new();
        for ((d, j), c) in suffix_tally(&geo, 0, 0, &mut memo).iter() {
            table.add(*d, *j, l, c.clone());
        }
    }
    Ok(table)
}

fn suffix_tally(
    geo: &StripGeometry,
    x: i64,
    y: i64,
    memo: &mut HashMap<(i64, i64), Rc<Tally>>,
) -> Rc<Tally> {
    if let Some(t) = memo.get(&(x, y)) {
        return t.clone();
    }
    let mut out = Tally::new();
    if x == geo.end_x && y == geo.end_y {
        out.insert((0, 0), BigInt::from(1));
    } else {
        for step in [Step::Right, Step::Up, Step::Diag] {
            let (dx, dy) = step.delta();
            if !geo.admits(x + dx, y + dy) {
                continue;
            }
            let area = geo.band_area(step, x, y);
            let dd = u32::from(step == Step::Diag);
            for ((d, j), c) in suffix_tally(geo, x + dx, y + dy, memo).iter() {
                let total = j + area;
                if geo.jmax.is_some_and(|b| total > b) {
                    continue;
                }
                *out.entry((d + dd, total)).or_default() += c;
            }
        }
    }
    let out = Rc::new(out);
    memo.insert((x, y), out.clone());
    out
}

/// Visits every size-`l` path of the strip family one by one.
pub fn walk_strip_paths(f: u32, k: u32, l: u32, visit: &mut dyn FnMut(&[Step])) -> Result<()> {
    check_strip(f, k)?;
    let geo = StripGeometry {
        f: f as i64,
        end_x: (f * l + k - 1) as i64,
        end_y: l as i64,
        jmax: None,
    };
    let mut steps = Vec::new();
    walk(&geo, 0, 0, &mut steps, visit);
    Ok(())
}

fn walk(
    geo: &StripGeometry,
    x: i64,
    y: i64,
    steps: &mut Vec<Step>,
    visit: &mut dyn FnMut(&[Step]),
) {
    if x == geo.end_x && y == geo.end_y {
        visit(steps);
        return;
    }
    for step in [Step::Right, Step::Up, Step::Diag] {
        let (dx, dy) = step.delta();
        if geo.admits(x + dx, y + dy) {
            steps.push(step);
            walk(geo, x + dx, y + dy, steps, visit);
            steps.pop();
        }
    }
}

/// `(diagonal steps, j)` of a strip path, from its steps.
pub fn strip_path_weight(f: u32, steps: &[Step]) -> (u32, i64) {
    let geo = StripGeometry {
        f: f as i64,
        end_x: i64::MAX,
        end_y: i64::MAX,
        jmax: None,
    };
    let (mut x, mut y, mut d, mut j) = (0i64, 0i64, 0u32, 0i64);
    for &step in steps {
        j += geo.band_area(step, x, y);
        d += u32::from(step == Step::Diag);
        let (dx, dy) = step.delta();
        x += dx;
        y += dy;
    }
    (d, j)
}

/// `max{(j − f + 2)^l, 0}`.
pub fn lemma_bound(f: u32, j: i64, l: u32) -> BigInt {
    let base = BigInt::from(j - f as i64 + 2);
    let p = num_traits::pow(base, l as usize);
    if p > BigInt::zero() {
        p
    } else {
        BigInt::zero()
    }
}

/// Stabilized counts `n_{i,j,l;∞}` for `j <= jmax`, `l <= lmax`.
///
/// Runs the strip enumeration for `k = 1, 2, …` until two consecutive tables
/// agree on the window, checking along the way that counts never decrease in
/// `k`. Gives up past `k = jmax + f + 2`.
pub fn enum_strip_stable(f: u32, lmax: u32, jmax: i64) -> Result<WeightTable> {
    let (table, _) = stabilize_strip(f, lmax, jmax)?;
    Ok(table)
}

/// Returns the stable table and the first `k` at which it was reached.
pub(crate) fn stabilize_strip(f: u32, lmax: u32, jmax: i64) -> Result<(WeightTable, u32)> {
    if jmax < 0 {
        return Err(Error::InvalidParameter(format!(
            "jmax must be >= 0 (got {jmax})"
        )));
    }
    let k_limit = (jmax + f as i64 + 2) as u32;
    let mut prev = enum_strip_window(f, 1, lmax, Some(jmax))?;
    for k in 2..=k_limit {
        let next = enum_strip_window(f, k, lmax, Some(jmax))?;
        for (key, c) in &prev.entries {
            if next.entries.get(key).is_none_or(|n| n < c) {
                return Err(Error::MonotonicityViolation(format!(
                    "f = {f}, k = {}, (d, j, l) = {key:?}",
                    k - 1
                )));
            }
        }
        if next.entries == prev.entries {
            let mut table = WeightTable::new(Family::StripStable { f, jmax });
            table.entries = next.entries;
            return Ok((table, k - 1));
        }
        prev = next;
    }
    Err(Error::StabilizationFailure { f, k_max: k_limit })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weights(f: u32, k: u32, l: u32) -> BTreeMap<(u32, i64), BigInt> {
        enum_strip(f, k, l)
            .unwrap()
            .entries
            .into_iter()
            .filter(|((_, _, ll), _)| *ll == l)
            .map(|((d, j, _), c)| ((d, j), c))
            .collect()
    }

    fn expect(pairs: &[((u32, i64), i64)]) -> BTreeMap<(u32, i64), BigInt> {
        pairs.iter().map(|(k, c)| (*k, BigInt::from(*c))).collect()
    }

    #[test]
    fn unit_strip_size_one_matches_slope() {
        assert_eq!(weights(1, 1, 1), expect(&[((0, 1), 1), ((1, 0), 1)]));
    }

    #[test]
    fn unit_strip_k2_size_one() {
        // a^2 + q + a^2 q^2 + q^3
        assert_eq!(
            weights(1, 2, 1),
            expect(&[((0, 1), 1), ((0, 3), 1), ((1, 0), 1), ((1, 2), 1)])
        );
    }

    #[test]
    fn figure_example_present() {
        // n_{4,10,2;5} for f = 2
        assert!(enum_strip(2, 5, 2).unwrap().get(2, 10, 2) >= BigInt::from(1));
        assert!(enum_strip_stable(2, 2, 12).unwrap().get(2, 10, 2) >= BigInt::from(1));
    }

    #[test]
    fn size_zero_is_single_empty_path() {
        let t = enum_strip_stable(3, 0, 5).unwrap();
        assert_eq!(t.entries.len(), 1);
        assert_eq!(t.get(0, 0, 0), BigInt::from(1));
    }

    #[test]
    fn memoized_tally_matches_path_walk() {
        for (f, k) in [(1u32, 1u32), (1, 3), (2, 1), (2, 4), (3, 2)] {
            for l in 0..=3u32 {
                let mut walked: BTreeMap<(u32, i64), BigInt> = BTreeMap::new();
                walk_strip_paths(f, k, l, &mut |steps| {
                    *walked.entry(strip_path_weight(f, steps)).or_default() += 1;
                })
                .unwrap();
                assert_eq!(weights(f, k, l), walked, "(f,k,l)=({f},{k},{l})");
            }
        }
    }

    #[test]
    fn window_prunes_consistently() {
        let full = enum_strip(2, 3, 3).unwrap();
        let cut = enum_strip_window(2, 3, 3, Some(9)).unwrap();
        let expected: BTreeMap<_, _> = full
            .entries
            .into_iter()
            .filter(|((_, j, _), _)| *j <= 9)
            .collect();
        assert_eq!(cut.entries, expected);
    }

    #[test]
    fn bound_formula() {
        assert_eq!(lemma_bound(2, 10, 2), BigInt::from(100));
        assert_eq!(lemma_bound(3, 0, 0), BigInt::from(1));
        assert_eq!(lemma_bound(3, 0, 1), BigInt::zero());
    }
}
