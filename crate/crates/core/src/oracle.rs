//! Ground truth by exhaustive enumeration.
//!
//! Everything here follows the combinatorial definition literally: build the
//! optimization set of every column, count memberships per row, apply the
//! mask, and tally. Nothing in this module touches the recurrence or the
//! weights, so agreement with [`crate::numbers`] is a real cross-check.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numbers::{factorial, Mask};

pub const DEFAULT_BUDGET: u64 = 10_000_000;
pub const BRUTE_FORCE_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Less,
    LessEq,
    Greater,
    GreaterEq,
}

impl Relation {
    pub fn holds(self, a: i64, b: i64) -> bool {
        match self {
            Relation::Less => a < b,
            Relation::LessEq => a <= b,
            Relation::Greater => a > b,
            Relation::GreaterEq => a >= b,
        }
    }
}

fn validate_permutation(perm: &[usize]) -> Result<()> {
    let n = perm.len();
    let mut seen = vec![false; n + 1];
    for &v in perm {
        if v == 0 || v > n {
            return Err(Error::NotAPermutation {
                n,
                detail: format!("value {v} out of range"),
            });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotAPermutation {
                n,
                detail: format!("value {v} repeated"),
            });
        }
    }
    Ok(())
}

/// Prefix minima as a bitmask over 0-based positions.
fn record_bits(perm: &[usize]) -> u64 {
    let mut bits = 0u64;
    let mut low = usize::MAX;
    for (i, &v) in perm.iter().enumerate() {
        if v < low {
            low = v;
            bits |= 1 << i;
        }
    }
    bits
}

/// 1-based positions `i` with `perm[i] < perm[t]` for every earlier `t`.
///
/// This is the optimization set of `{(i, perm_i)}` under `(<=, <)`: a prefix
/// minimum is dominated by nothing, and every other point is dominated by
/// the prefix minimum before it.
pub fn prefix_min_records(perm: &[usize]) -> Result<BTreeSet<usize>> {
    validate_permutation(perm)?;
    let bits = record_bits(perm);
    Ok((0..perm.len())
        .filter(|i| bits >> i & 1 == 1)
        .map(|i| i + 1)
        .collect())
}

/// Smallest majorization set of `points`: every point is either chosen or
/// related to some chosen point, `(a, u)` related when
/// `relations.0(a.0, u.0) && relations.1(a.1, u.1)`.
///
/// Searches subsets in order of increasing size and, within a size, in
/// increasing bitmask order; the first hit is returned in input order.
pub fn optimization_set_bruteforce(
    points: &[(i64, i64)],
    relations: (Relation, Relation),
) -> Result<Vec<(i64, i64)>> {
    let len = points.len();
    if len > BRUTE_FORCE_LIMIT {
        return Err(Error::PointLimit {
            len,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let related =
        |a: (i64, i64), u: (i64, i64)| relations.0.holds(a.0, u.0) && relations.1.holds(a.1, u.1);
    let covers = |subset: u32| {
        points.iter().enumerate().all(|(ui, &u)| {
            subset >> ui & 1 == 1
                || points
                    .iter()
                    .enumerate()
                    .any(|(ai, &a)| subset >> ai & 1 == 1 && related(a, u))
        })
    };
    let mut by_size: Vec<u32> = (0..1u32 << len).collect();
    by_size.sort_by_key(|s| (s.count_ones(), *s));
    let best = by_size
        .into_iter()
        .find(|&s| covers(s))
        .expect("the full set is always a majorization set");
    Ok((0..len)
        .filter(|i| best >> i & 1 == 1)
        .map(|i| points[i])
        .collect())
}

/// Exact distribution of the selected-row count over all `(n!)^k` tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Histogram {
    pub n: usize,
    pub mask: Mask,
    /// Nonzero counts keyed by the number of selected rows.
    pub counts: BTreeMap<usize, BigUint>,
}

impl Histogram {
    pub fn k(&self) -> usize {
        self.mask.k()
    }

    pub fn count(&self, m: i64) -> BigUint {
        usize::try_from(m)
            .ok()
            .and_then(|m| self.counts.get(&m))
            .cloned()
            .unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }
}

fn selected_rows(mask: &Mask, columns: &[u64], n: usize) -> usize {
    (0..n)
        .filter(|&i| {
            let l = columns.iter().filter(|&&c| c >> i & 1 == 1).count();
            mask.bit(l)
        })
        .count()
}

/// Enumerates every tuple of `k` permutations of `1..=n` and tallies how many
/// rows the mask selects. Refuses when `(n!)^k` exceeds `budget`.
///
/// Work is split on the first column's permutation and partial tallies are
/// summed, so the result does not depend on scheduling.
pub fn histogram(mask: &Mask, n: usize, budget: u64) -> Result<Histogram> {
    if n < 1 {
        return Err(Error::RowIndex { n, min: 1 });
    }
    let k = mask.k();
    let required = factorial(n).pow(k as u32);
    if required > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            required: required.to_string(),
            budget,
        });
    }

    let records: Vec<u64> = (1..=n).permutations(n).map(|p| record_bits(&p)).collect();
    let per_column = records.len();

    let tally = (0..per_column)
        .into_par_iter()
        .map(|first| {
            let mut counts = vec![0u64; n + 1];
            // Mixed-radix counter over the remaining k - 1 columns.
            let mut digits = vec![0usize; k - 1];
            let mut columns = vec![records[first]; k];
            loop {
                for (slot, &d) in columns[1..].iter_mut().zip(&digits) {
                    *slot = records[d];
                }
                counts[selected_rows(mask, &columns, n)] += 1;
                let Some(pos) = digits.iter().rposition(|&d| d + 1 < per_column) else {
                    break;
                };
                digits[pos] += 1;
                digits[pos + 1..].iter_mut().for_each(|d| *d = 0);
            }
            counts
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );

    let counts = tally
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(m, c)| (m, BigUint::from(c)))
        .collect();
    Ok(Histogram {
        n,
        mask: mask.clone(),
        counts,
    })
}

/// Colours visible in one configuration of the k-dimensional colour boards
/// problem.
///
/// `heights[w][i]` is the height of board `i`'s piece in group `w`. Colour `i`
/// is seen in group `w` when its piece is taller than every earlier piece of
/// that group; it counts when `c_l = 1` for `l` the number of groups where it
/// is seen.
pub fn color_boards_count(heights: &[Vec<usize>], mask: &Mask) -> Result<usize> {
    let k = mask.k();
    if heights.len() != k {
        return Err(Error::NotAPermutation {
            n: heights.first().map_or(0, Vec::len),
            detail: format!("expected {k} groups of heights, got {}", heights.len()),
        });
    }
    let n = heights[0].len();
    let mut seen = vec![0usize; n];
    for group in heights {
        if group.len() != n {
            return Err(Error::NotAPermutation {
                n,
                detail: format!("group of length {} among groups of length {n}", group.len()),
            });
        }
        validate_permutation(group)?;
        // Tallest-so-far in heights is lowest-so-far after a = n + 1 - h.
        let flipped: Vec<usize> = group.iter().map(|&h| n + 1 - h).collect();
        for i in prefix_min_records(&flipped)? {
            seen[i - 1] += 1;
        }
    }
    Ok(seen.into_iter().filter(|&l| mask.bit(l)).count())
}

/// Number of tuples `(n!)^k` as `u64`, if it fits.
pub fn tuple_count(mask: &Mask, n: usize) -> Option<u64> {
    factorial(n).pow(mask.k() as u32).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::Triangle;
    use num_traits::Zero;

    fn m(s: &str) -> Mask {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    fn counts(h: &Histogram) -> Vec<(usize, u64)> {
        h.counts
            .iter()
            .map(|(&k, v)| (k, v.to_u64().unwrap()))
            .collect()
    }

    const PREFIX: (Relation, Relation) = (Relation::LessEq, Relation::Less);

    #[test]
    fn records_examples() {
        assert_eq!(prefix_min_records(&[1, 2, 3]).unwrap(), set(&[1]));
        assert_eq!(prefix_min_records(&[3, 2, 1]).unwrap(), set(&[1, 2, 3]));
        assert_eq!(prefix_min_records(&[2, 3, 1]).unwrap(), set(&[1, 3]));
        assert!(prefix_min_records(&[1, 1, 2]).is_err());
        assert!(prefix_min_records(&[0, 1]).is_err());
        assert!(prefix_min_records(&[1, 4, 2]).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(
            optimization_set_bruteforce(&[(1, 2), (2, 3), (3, 1)], PREFIX).unwrap(),
            [(1, 2), (3, 1)]
        );
        assert_eq!(
            optimization_set_bruteforce(&[(1, 1)], PREFIX).unwrap(),
            [(1, 1)]
        );
        let decreasing = [(1, 4), (2, 3), (3, 2), (4, 1)];
        assert_eq!(
            optimization_set_bruteforce(&decreasing, PREFIX).unwrap(),
            decreasing
        );
        assert_eq!(optimization_set_bruteforce(&[], PREFIX).unwrap(), []);
        let too_many: Vec<_> = (0..13).map(|i| (i, -i)).collect();
        assert_eq!(
            optimization_set_bruteforce(&too_many, PREFIX),
            Err(Error::PointLimit { len: 13, limit: 12 })
        );
    }

    #[test]
    fn records_match_bruteforce_up_to_six() {
        for n in 1..=6 {
            for perm in (1..=n).permutations(n) {
                let points: Vec<(i64, i64)> = perm
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| (i as i64 + 1, v as i64))
                    .collect();
                let brute: BTreeSet<usize> = optimization_set_bruteforce(&points, PREFIX)
                    .unwrap()
                    .into_iter()
                    .map(|(i, _)| i as usize)
                    .collect();
                let records = prefix_min_records(&perm).unwrap();
                assert!(records.contains(&1));
                assert_eq!(records, brute, "{perm:?}");
            }
        }
    }

    #[test]
    fn histogram_examples() {
        assert_eq!(
            counts(&histogram(&m("01"), 3, DEFAULT_BUDGET).unwrap()),
            [(1, 2), (2, 3), (3, 1)]
        );
        assert_eq!(
            counts(&histogram(&m("011"), 2, DEFAULT_BUDGET).unwrap()),
            [(1, 1), (2, 3)]
        );
        assert_eq!(
            counts(&histogram(&m("10"), 3, DEFAULT_BUDGET).unwrap()),
            [(0, 1), (1, 3), (2, 2)]
        );
    }

    #[test]
    fn histogram_budget() {
        let err = histogram(&m("011"), 4, 575).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                required: "576".into(),
                budget: 575
            }
        );
        assert!(histogram(&m("011"), 4, 576).is_ok());
        assert_eq!(tuple_count(&m("011"), 4), Some(576));
    }

    #[test]
    fn histogram_totals_and_support() {
        for mask in Mask::all(2) {
            for n in 1..=4 {
                let h = histogram(&mask, n, DEFAULT_BUDGET).unwrap();
                assert_eq!(h.total(), factorial(n).pow(2));
                let lo = mask.last() as usize;
                assert!(h.counts.keys().all(|&k| k >= lo && k < n + lo));
            }
        }
    }

    #[test]
    fn histogram_matches_triangle() {
        for mask in Mask::all(2) {
            let t = Triangle::new(&mask, 4).unwrap();
            for n in 1..=4 {
                let h = histogram(&mask, n, DEFAULT_BUDGET).unwrap();
                for mm in -1..=n as i64 + 1 {
                    assert_eq!(h.count(mm), t.value(n, mm), "{mask} n={n} m={mm}");
                }
            }
        }
    }

    #[test]
    fn color_board_examples() {
        for k in 1..=3 {
            for mask in Mask::all(k) {
                let heights = vec![vec![1]; k];
                let expected = mask.last() as usize;
                assert_eq!(color_boards_count(&heights, &mask).unwrap(), expected);
            }
        }
        assert_eq!(
            color_boards_count(&[(1..=5).collect()], &m("01")).unwrap(),
            5
        );
        assert_eq!(color_boards_count(&[vec![2, 3, 1]], &m("01")).unwrap(), 2);
    }

    #[test]
    fn color_boards_reject_malformed() {
        assert!(color_boards_count(&[vec![1, 1]], &m("01")).is_err());
        assert!(color_boards_count(&[vec![1, 2]], &m("011")).is_err());
        assert!(color_boards_count(&[vec![1, 2], vec![1]], &m("011")).is_err());
    }

    #[test]
    fn color_boards_aggregate_to_histogram() {
        for mask in Mask::all(2) {
            for n in 1..=3 {
                let mut tally: BTreeMap<usize, BigUint> = BTreeMap::new();
                let groups = (0..mask.k()).map(|_| (1..=n).permutations(n));
                for config in groups.multi_cartesian_product() {
                    let seen = color_boards_count(&config, &mask).unwrap();
                    *tally.entry(seen).or_default() += 1u32;
                }
                let h = histogram(&mask, n, DEFAULT_BUDGET).unwrap();
                assert_eq!(tally, h.counts, "{mask} n={n}");
            }
        }
    }

    #[test]
    fn empty_tally_is_zero() {
        let h = histogram(&m("00"), 3, DEFAULT_BUDGET).unwrap();
        assert!(h.count(1).is_zero());
        assert!(h.count(-1).is_zero());
    }
}
