//! Exact `O_C(n, m)`: the recurrence triangle, the explicit combination sum,
//! the row weights and the generating polynomials.

mod explicit;
mod mask;
mod poly;
mod stirling;
mod triangle;
mod weight;

pub use explicit::{explicit_value, DEFAULT_SUBSET_LIMIT};
pub use mask::Mask;
pub use poly::{falling_poly, poly_zeros, rising_poly, IntPolynomial, PolyKind, Root};
pub use stirling::{stirling_ref, StirlingTable};
pub use triangle::{value, Triangle};
pub use weight::{binomial, f_weight, g_weight};

/// Exact rational scalar, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn complement(mask: &Mask) -> Mask {
    mask.complement()
}

pub fn factorial(n: usize) -> num_bigint::BigUint {
    (1..=n).map(num_bigint::BigUint::from).product()
}
