use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::Zero;

use super::mask::Mask;
use super::weight::g_weight_unchecked;
use crate::error::{Error, Result};

/// Exact table of `O_C(n, m)` for `n = 1..=max_n`.
///
/// Row `n` is stored only on its support `m in [c_k, n - 1 + c_k]`; every
/// other `m` reads as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    mask: Mask,
    rows: Vec<Vec<BigUint>>,
}

impl Triangle {
    /// Builds rows `1..=max_n` with the integer recurrence
    /// `O(n+1, m+1) = G_{n+1}(C) O(n, m) + G_{n+1}(C') O(n, m+1)`
    /// from `O(1, c_k) = 1`.
    pub fn new(mask: &Mask, max_n: usize) -> Result<Self> {
        if max_n < 1 {
            return Err(Error::RowIndex { n: max_n, min: 1 });
        }
        let complement = mask.complement();
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n);
        rows.push(vec![BigUint::from(1u32)]);
        for n in 1..max_n {
            let j = (n + 1) as u64;
            let selected = g_weight_unchecked(j, mask);
            let rejected = g_weight_unchecked(j, &complement);
            let prev = &rows[n - 1];
            let mut next = Vec::with_capacity(n + 1);
            for u in 0..=n {
                let mut cell = BigUint::zero();
                if u >= 1 {
                    cell += &selected * &prev[u - 1];
                }
                if u < n {
                    cell += &rejected * &prev[u];
                }
                next.push(cell);
            }
            rows.push(next);
        }
        Ok(Triangle {
            mask: mask.clone(),
            rows,
        })
    }

    /// Wraps externally supplied rows (e.g. parsed from a file). Only the
    /// shape is validated: row `n` must hold exactly `n` support entries.
    pub fn from_rows(mask: Mask, rows: Vec<Vec<BigUint>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Parse("triangle has no rows".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    i + 1
                )));
            }
        }
        Ok(Triangle { mask, rows })
    }

    pub fn mask(&self) -> &Mask {
        &self.mask
    }

    pub fn max_n(&self) -> usize {
        self.rows.len()
    }

    pub fn support(&self, n: usize) -> RangeInclusive<i64> {
        let lo = self.mask.last() as i64;
        lo..=lo + n as i64 - 1
    }

    /// Support entries of row `n`, starting at `m = c_k`.
    ///
    /// Panics if `n` is not in `1..=max_n`.
    pub fn row(&self, n: usize) -> &[BigUint] {
        assert!(
            (1..=self.max_n()).contains(&n),
            "row {n} outside 1..={}",
            self.max_n()
        );
        &self.rows[n - 1]
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    /// `O_C(n, m)`, zero off the support. Panics if `n` is not in `1..=max_n`.
    pub fn value(&self, n: usize, m: i64) -> BigUint {
        let row = self.row(n);
        let u = m - self.mask.last() as i64;
        if u < 0 || u >= n as i64 {
            return BigUint::zero();
        }
        row[u as usize].clone()
    }

    pub fn row_sum(&self, n: usize) -> BigUint {
        self.row(n).iter().sum()
    }

    /// All stored cells as `(n, m, value)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, i64, &BigUint)> + '_ {
        let offset = self.mask.last() as i64;
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(u, v)| (i + 1, u as i64 + offset, v))
        })
    }
}

/// `O_C(n, m)` for a single cell. Builds the triangle up to row `n`.
pub fn value(mask: &Mask, n: usize, m: i64) -> Result<BigUint> {
    Ok(Triangle::new(mask, n)?.value(n, m))
}
