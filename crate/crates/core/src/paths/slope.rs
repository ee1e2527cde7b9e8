use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_bigint::BigInt;

use super::table::{Family, WeightTable};
use super::{gcd, Step};
use crate::error::{Error, Result};

type Tally = BTreeMap<(u32, i64), BigInt>;

struct SlopeGeometry {
    m: i64,
    n: i64,
    s: i64,
    end_x: i64,
    end_y: i64,
}

impl SlopeGeometry {
    fn new(m: u32, n: u32, s: u32, l: u32) -> Self {
        Self {
            m: m as i64,
            n: n as i64,
            s: s as i64,
            end_x: (n * l) as i64,
            end_y: (m * l) as i64,
        }
    }

    /// Vertex admissible: weakly below the line, and midway vertices
    /// (x != nl and y != 0) weakly below the line shifted by `s`.
    fn admits(&self, x: i64, y: i64) -> bool {
        if x > self.end_x || y > self.end_y || self.n * y > self.m * x {
            return false;
        }
        let midway = x != self.end_x && y != 0;
        !midway || self.n * y <= self.m * x - self.s
    }
}

fn check_slope(m: u32, n: u32) -> Result<()> {
    if m == 0 || n == 0 || gcd(m, n) != 1 {
        return Err(Error::InvalidSlope { m, n });
    }
    Ok(())
}

/// Counts `n^{[s]}` for every size `l <= lmax`.
///
/// Entries are keyed by `(d, A, l)` with `A = mn·j` (area in units of
/// `1/(2mn)`), where `j = mnl² − 2·(area under the path)`. Sizes with
/// `s > mnl` contribute nothing.
pub fn enum_slope(m: u32, n: u32, s: u32, lmax: u32) -> Result<WeightTable> {
    check_slope(m, n)?;
    let mut table = WeightTable::new(Family::Slope { m, n, s });
    let mn = (m * n) as i64;
    for l in 0..=lmax {
        if s as i64 > mn * l as i64 {
            continue;
        }
        let geo = SlopeGeometry::new(m, n, s, l);
        let mut memo = HashMap::new();
        let tally = suffix_tally(&geo, 0, 0, &mut memo);
        let full = mn * (l as i64).pow(2);
        for ((d, under2), count) in tally.iter() {
            let j = full - under2;
            if j < 0 {
                return Err(Error::NegativeCount(format!(
                    "area j = {j} for (m,n,s,l) = ({m},{n},{s},{l})"
                )));
            }
            table.add(*d, mn * j, l, count.clone());
        }
    }
    Ok(table)
}

/// Tally over all admissible continuations from `(x, y)` to the endpoint, of
/// `(diagonal steps, 2·area under the path)`.
fn suffix_tally(
    geo: &SlopeGeometry,
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
            let (nx, ny) = (x + dx, y + dy);
            if !geo.admits(nx, ny) {
                continue;
            }
            let (dd, da) = match step {
                Step::Right => (0, 2 * y),
                Step::Diag => (1, 2 * y + 1),
                _ => (0, 0),
            };
            for ((d, a), c) in suffix_tally(geo, nx, ny, memo).iter() {
                *out.entry((d + dd, a + da)).or_default() += c;
            }
        }
    }
    let out = Rc::new(out);
    memo.insert((x, y), out.clone());
    out
}

/// Visits every admissible step sequence of size `l` one by one.
pub fn walk_slope_paths(
    m: u32,
    n: u32,
    s: u32,
    l: u32,
    visit: &mut dyn FnMut(&[Step]),
) -> Result<()> {
    check_slope(m, n)?;
    if s as u64 > (m * n) as u64 * l as u64 {
        return Ok(());
    }
    let geo = SlopeGeometry::new(m, n, s, l);
    let mut steps = Vec::new();
    walk(&geo, 0, 0, &mut steps, visit);
    Ok(())
}

fn walk(
    geo: &SlopeGeometry,
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

/// Path count with weights disabled, by walking every path.
pub fn count_slope_paths(m: u32, n: u32, s: u32, l: u32) -> Result<BigInt> {
    let mut count = BigInt::from(0);
    walk_slope_paths(m, n, s, l, &mut |_| count += 1)?;
    Ok(count)
}

/// `(diagonal steps, j)` of a size-`l` path below slope `m/n`, from its steps.
pub fn slope_path_weight(m: u32, n: u32, l: u32, steps: &[Step]) -> (u32, i64) {
    let mut y = 0i64;
    let mut under2 = 0i64;
    let mut d = 0;
    for step in steps {
        match step {
            Step::Right => under2 += 2 * y,
            Step::Diag => {
                under2 += 2 * y + 1;
                d += 1;
            }
            Step::Up | Step::Left => {}
        }
        y += step.delta().1;
    }
    (d, (m * n) as i64 * (l as i64).pow(2) - under2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weights(m: u32, n: u32, s: u32, l: u32) -> BTreeMap<(u32, i64), BigInt> {
        let t = enum_slope(m, n, s, l).unwrap();
        t.entries
            .iter()
            .filter(|((_, _, ll), _)| *ll == l)
            .map(|((d, a, _), c)| ((*d, a / (m * n) as i64), c.clone()))
            .collect()
    }

    fn expect(pairs: &[((u32, i64), i64)]) -> BTreeMap<(u32, i64), BigInt> {
        pairs.iter().map(|(k, c)| (*k, BigInt::from(*c))).collect()
    }

    #[test]
    fn unit_slope_size_one() {
        // RU and D: q + a^2
        assert_eq!(weights(1, 1, 0, 1), expect(&[((0, 1), 1), ((1, 0), 1)]));
    }

    #[test]
    fn unit_slope_size_two() {
        // a^4 + 2a^2 q + a^2 q^3 + q^2 + q^4
        assert_eq!(
            weights(1, 1, 0, 2),
            expect(&[
                ((0, 2), 1),
                ((0, 4), 1),
                ((1, 1), 2),
                ((1, 3), 1),
                ((2, 0), 1)
            ])
        );
        assert_eq!(count_slope_paths(1, 1, 0, 2).unwrap(), BigInt::from(6));
    }

    #[test]
    fn empty_midway_closed_form() {
        for (m, n) in [(1u32, 1u32), (1, 2), (2, 3), (3, 4)] {
            let mn = m * n;
            for l in 0..=3u32 {
                let hi = mn * l;
                let lo = (mn * l) as i64 - (m + n) as i64;
                for s in (lo + 1).max(0) as u32..=hi {
                    let mut want = vec![((0u32, (mn * l * l) as i64), 1)];
                    if l >= 1 {
                        want.push(((1, (mn * l * l) as i64 - 1), 1));
                    }
                    assert_eq!(
                        weights(m, n, s, l),
                        expect(&want),
                        "(m,n,s,l)=({m},{n},{s},{l})"
                    );
                }
            }
        }
    }

    #[test]
    fn s_beyond_mnl_is_absent() {
        let t = enum_slope(2, 3, 7, 1).unwrap();
        assert!(t.entries.is_empty());
    }

    #[test]
    fn invalid_slope() {
        assert!(matches!(
            enum_slope(2, 2, 0, 1),
            Err(Error::InvalidSlope { m: 2, n: 2 })
        ));
    }

    #[test]
    fn memoized_tally_matches_path_walk() {
        for (m, n, s) in [
            (1u32, 1u32, 0u32),
            (1, 2, 1),
            (2, 3, 0),
            (2, 3, 4),
            (3, 4, 5),
        ] {
            for l in 0..=2u32 {
                let mut walked: BTreeMap<(u32, i64), BigInt> = BTreeMap::new();
                walk_slope_paths(m, n, s, l, &mut |steps| {
                    *walked.entry(slope_path_weight(m, n, l, steps)).or_default() += 1;
                })
                .unwrap();
                assert_eq!(weights(m, n, s, l), walked, "(m,n,s,l)=({m},{n},{s},{l})");
            }
        }
    }
}
