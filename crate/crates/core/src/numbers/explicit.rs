use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use super::mask::Mask;
use super::weight::f_weight;
use super::Rational;
use crate::error::{Error, Result};

pub const DEFAULT_SUBSET_LIMIT: usize = 12;

/// Fixed-popcount subsets of `{0, .., width - 1}` as bitmasks, in increasing
/// numeric order (Gosper's hack).
fn subsets_of_size(width: usize, size: usize) -> impl Iterator<Item = u64> {
    let end = 1u64 << width;
    let first = if size == 0 { 0 } else { (1u64 << size) - 1 };
    let mut next = Some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= end {
            next = None;
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            Some((((ripple ^ cur) >> 2) / low) | ripple)
        };
        Some(cur)
    })
}

/// `O_C(n, m)` from the combination sum
/// `(n-1)!^k * sum over (t-1)-subsets J of {2..n} of prod_{j in J} F_j(C) * prod_{j not in J} F_j(C')`
/// with `t = m - c_k + 1`, evaluated in exact rationals.
///
/// The sum has `binom(n - 1, t - 1)` terms, so `n` is capped by `limit`.
pub fn explicit_value(mask: &Mask, n: usize, m: i64, limit: usize) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::RowIndex { n, min: 1 });
    }
    if n > limit {
        return Err(Error::SubsetLimit { n, limit });
    }
    let t = m - mask.last() as i64 + 1;
    if t < 1 || t > n as i64 {
        return Ok(BigUint::zero());
    }
    let chosen = (t - 1) as usize;

    let complement = mask.complement();
    let mut selected = Vec::with_capacity(n - 1);
    let mut rejected = Vec::with_capacity(n - 1);
    for j in 2..=n as u64 {
        selected.push(f_weight(j, mask)?);
        rejected.push(f_weight(j, &complement)?);
    }

    let mut sum = Rational::zero();
    for subset in subsets_of_size(n - 1, chosen) {
        let mut term = Rational::one();
        for (i, (f, f_prime)) in selected.iter().zip(&rejected).enumerate() {
            term *= if subset >> i & 1 == 1 { f } else { f_prime };
        }
        sum += term;
    }

    let scale: BigInt = (1..n)
        .map(BigInt::from)
        .product::<BigInt>()
        .pow(mask.k() as u32);
    let total = sum * Rational::from_integer(scale);
    if !total.is_integer() {
        return Err(Error::NonIntegral { n, m });
    }
    let (sign, magnitude) = total.to_integer().into_parts();
    debug_assert!(sign != Sign::Minus);
    Ok(magnitude)
}
