use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::mask::Mask;
use super::weight::g_weight_unchecked;
use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyKind {
    /// `x * prod_{j=2}^{n} (G_j(C) x + G_j(C'))`
    Rising,
    /// `x * prod_{j=2}^{n} (G_j(C) x - G_j(C'))`
    Falling,
}

impl fmt::Display for PolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolyKind::Rising => "rising",
            PolyKind::Falling => "falling",
        })
    }
}

/// Integer polynomial; `coefficients[i]` multiplies `x^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
    kind: PolyKind,
}

impl IntPolynomial {
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn kind(&self) -> PolyKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| {
                acc * x + Rational::from_integer(c.clone())
            })
    }
}

fn expand(mask: &Mask, n: usize, kind: PolyKind) -> Result<IntPolynomial> {
    if n < 1 {
        return Err(Error::RowIndex { n, min: 1 });
    }
    let complement = mask.complement();
    // x^1
    let mut coefficients = vec![BigInt::zero(), BigInt::one()];
    for j in 2..=n as u64 {
        let lead = BigInt::from(g_weight_unchecked(j, mask));
        let mut constant = BigInt::from(g_weight_unchecked(j, &complement));
        if kind == PolyKind::Falling {
            constant = -constant;
        }
        let mut next = vec![BigInt::zero(); coefficients.len() + 1];
        for (i, c) in coefficients.iter().enumerate() {
            next[i + 1] += &lead * c;
            next[i] += &constant * c;
        }
        coefficients = next;
    }
    Ok(IntPolynomial { coefficients, kind })
}

/// Generating polynomial whose `x^m` coefficient is `O_C(n, m + c_k - 1)`.
pub fn rising_poly(mask: &Mask, n: usize) -> Result<IntPolynomial> {
    expand(mask, n, PolyKind::Rising)
}

/// Signed counterpart: `x^m` coefficient is `(-1)^(n+m) O_C(n, m + c_k - 1)`.
pub fn falling_poly(mask: &Mask, n: usize) -> Result<IntPolynomial> {
    expand(mask, n, PolyKind::Falling)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Root {
    Value(Rational),
    /// The linear factor for this `m` has no `x` term (`F_m(C) = 0`).
    Undefined,
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Root::Value(r) => write!(f, "{r}"),
            Root::Undefined => f.write_str("undef"),
        }
    }
}

/// Zeros of the rising or falling polynomial: `0`, then for `m = 2..=n`
/// the root `∓F_m(C') / F_m(C)` of the `m`-th linear factor.
pub fn poly_zeros(mask: &Mask, n: usize, kind: PolyKind) -> Result<Vec<Root>> {
    if n < 1 {
        return Err(Error::RowIndex { n, min: 1 });
    }
    let complement = mask.complement();
    let mut roots = vec![Root::Value(Rational::zero())];
    for j in 2..=n as u64 {
        // F_m(C') / F_m(C) = G_m(C') / G_m(C): the (m - 1)^k scale cancels.
        let lead = g_weight_unchecked(j, mask);
        if lead.is_zero() {
            roots.push(Root::Undefined);
            continue;
        }
        let constant = g_weight_unchecked(j, &complement);
        let ratio = Rational::new(constant.into(), lead.into());
        roots.push(Root::Value(match kind {
            PolyKind::Rising => -ratio,
            PolyKind::Falling => ratio,
        }));
    }
    Ok(roots)
}
