//! Rigorous rational enclosures of `e^x` for rational `x`.
//!
//! Inequalities of the form `q <= e^x` are decided without rounding `q`:
//! `e^x` is bracketed by two rationals from a fixed-point Taylor sum whose
//! terms are rounded down for the lower end and up for the upper end.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::numbers::Rational;

/// Fractional bits of the fixed-point evaluation, roughly 90 decimal digits.
const PRECISION_BITS: u64 = 300;

/// Additive slack allowed on the transcendental side of every comparison.
pub fn margin() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u64).pow(12))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
}

impl Enclosure {
    pub fn midpoint_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / Rational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::INFINITY)
    }
}

/// Fixed-point bounds on `e^x` for `x >= 0`, scaled by `2^PRECISION_BITS`.
fn exp_nonnegative_scaled(x: &Rational) -> (BigUint, BigUint) {
    debug_assert!(!x.is_negative());
    let num = x.numer().magnitude().clone();
    let den = x.denom().magnitude().clone();
    let scale = BigUint::one() << PRECISION_BITS;

    let mut lo_term = scale.clone();
    let mut hi_term = scale.clone();
    let mut lo_sum = BigUint::zero();
    let mut hi_sum = BigUint::zero();
    let mut i = 0u64;
    loop {
        lo_sum += &lo_term;
        hi_sum += &hi_term;
        i += 1;
        let divisor = &den * i;
        lo_term = (&lo_term * &num) / &divisor;
        hi_term = (&hi_term * &num).div_ceil(&divisor);
        // Once i > 2x, the remaining tail is below the current term.
        if BigUint::from(i) * &den > &num * 2u32 && hi_term <= BigUint::one() {
            hi_sum += &hi_term * 2u32;
            break;
        }
    }
    (lo_sum, hi_sum)
}

/// Rational `lo <= e^x <= hi`.
pub fn exp_enclosure(x: &Rational) -> Enclosure {
    let scale = BigInt::one() << PRECISION_BITS;
    let (lo, hi) = exp_nonnegative_scaled(&x.abs());
    let (lo, hi) = (BigInt::from(lo), BigInt::from(hi));
    if x.is_negative() {
        Enclosure {
            lo: Rational::new(scale.clone(), hi),
            hi: Rational::new(scale, lo),
        }
    } else {
        Enclosure {
            lo: Rational::new(lo, scale.clone()),
            hi: Rational::new(hi, scale),
        }
    }
}

pub fn exp_of_integer(x: i64) -> Enclosure {
    exp_enclosure(&Rational::from_integer(x.into()))
}

/// `lhs <= e^x + 10^-12`, decided against the lower end of the enclosure so
/// a `true` answer is never an artifact of the approximation.
pub fn le_exp(lhs: &Rational, x: &Rational) -> bool {
    *lhs <= exp_enclosure(x).lo + margin()
}

/// Best-effort decimal rendering of a rational, for reports.
pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
