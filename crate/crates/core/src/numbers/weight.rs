//! Per-row weights of a mask.
//!
//! For row `j >= 2` of a uniformly random tuple of `k` permutations, row `j` is
//! a prefix minimum of exactly `p` columns in `binom(k, p) * (j - 1)^(k - p)`
//! of the `j^k` equally likely relative orders. Summing over the `p` with
//! `x_p = 1` gives the integer weight [`g_weight`]; dividing by `(j - 1)^k`
//! gives the rational weight [`f_weight`].

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::mask::Mask;
use super::Rational;
use crate::error::{Error, Result};

pub fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn check_index(j: u64) -> Result<()> {
    if j < 2 {
        return Err(Error::WeightIndex { j });
    }
    Ok(())
}

/// `F_j(X) = sum_p binom(k, p) * x_p / (j - 1)^p`.
pub fn f_weight(j: u64, vec: &Mask) -> Result<Rational> {
    check_index(j)?;
    let k = vec.k();
    let base = BigUint::from(j - 1);
    let mut num = BigUint::zero();
    // Common denominator (j - 1)^k; term p contributes binom(k, p) * (j - 1)^(k - p).
    for p in (0..=k).filter(|&p| vec.bit(p)) {
        num += binomial(k, p) * base.pow((k - p) as u32);
    }
    Ok(Rational::new(num.into(), base.pow(k as u32).into()))
}

/// `G_j(X) = (j - 1)^k * F_j(X)`, always an integer.
pub fn g_weight(j: u64, vec: &Mask) -> Result<BigUint> {
    check_index(j)?;
    Ok(g_weight_unchecked(j, vec))
}

pub(crate) fn g_weight_unchecked(j: u64, vec: &Mask) -> BigUint {
    let k = vec.k();
    let base = BigUint::from(j - 1);
    (0..=k)
        .filter(|&p| vec.bit(p))
        .map(|p| binomial(k, p) * base.pow((k - p) as u32))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn m(s: &str) -> Mask {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    // Literal sum of b_{j,p} * x_p, one rational per term.
    fn f_by_terms(j: u64, x: &Mask) -> Rational {
        let k = x.k();
        (0..=k)
            .filter(|&p| x.bit(p))
            .map(|p| Rational::new(binomial(k, p).into(), BigInt::from(j - 1).pow(p as u32)))
            .fold(Rational::zero(), |a, b| a + b)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(3, 0), BigUint::one());
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial(40, 20), BigUint::from(137_846_528_820u64));
    }

    #[test]
    fn f_weight_examples() {
        assert_eq!(f_weight(5, &m("01")).unwrap(), q(1, 4));
        assert_eq!(f_weight(3, &m("11")).unwrap(), q(3, 2));
        for x in Mask::all(2) {
            let total = f_weight(3, &x).unwrap() + f_weight(3, &x.complement()).unwrap();
            assert_eq!(total, q(9, 4), "mask {x}");
            assert_eq!(f_weight(3, &x).unwrap(), f_by_terms(3, &x));
        }
    }

    #[test]
    fn g_weight_examples() {
        for n in 1..20u64 {
            assert_eq!(g_weight(n + 1, &m("01")).unwrap(), BigUint::one());
        }
        assert_eq!(g_weight(2, &m("011")).unwrap(), BigUint::from(3u32));
        assert_eq!(g_weight(2, &m("100")).unwrap(), BigUint::one());
    }

    #[test]
    fn rejects_j_below_two() {
        assert_eq!(f_weight(1, &m("01")), Err(Error::WeightIndex { j: 1 }));
        assert_eq!(g_weight(0, &m("01")), Err(Error::WeightIndex { j: 0 }));
    }

    fn any_mask() -> impl Strategy<Value = Mask> {
        prop::collection::vec(any::<bool>(), 2..=6).prop_map(|b| Mask::new(b).unwrap())
    }

    proptest! {
        #[test]
        fn complement_sums(x in any_mask(), j in 2u64..200) {
            let k = x.k() as u32;
            let f = f_weight(j, &x).unwrap() + f_weight(j, &x.complement()).unwrap();
            prop_assert_eq!(f, q(j as i64, j as i64 - 1).pow(k as i32));
            let g = g_weight(j, &x).unwrap() + g_weight(j, &x.complement()).unwrap();
            prop_assert_eq!(g, BigUint::from(j).pow(k));
        }

        #[test]
        fn scaled_weight_matches_rational(x in any_mask(), j in 2u64..200) {
            let scale = Rational::from_integer(BigInt::from(j - 1).pow(x.k() as u32));
            let f = f_weight(j, &x).unwrap();
            prop_assert_eq!(&f, &f_by_terms(j, &x));
            prop_assert_eq!(f * scale, Rational::from_integer(g_weight(j, &x).unwrap().into()));
        }
    }
}
