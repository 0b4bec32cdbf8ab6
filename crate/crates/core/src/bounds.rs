//! Closed-form upper bound, concentration and ratio checks.
//!
//! Every quantity is an exact rational. The transcendental side of an
//! inequality (`e^x`) is bracketed by [`crate::real::exp_enclosure`]; the
//! only floating-point step is the threshold `M`, which is an integer by
//! construction.

use std::collections::BTreeMap;
use std::f64::consts::{E, PI};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numbers::{binomial, f_weight, factorial, g_weight, Mask, Rational, Triangle};
use crate::real::{exp_enclosure, exp_of_integer, margin, Enclosure};

/// `H_n = (h_0, ..., h_k)` with `h_p = binom(k, p) * sum_{j=1}^{n-1} j^-p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector {
    pub n: usize,
    pub k: usize,
    pub entries: Vec<Rational>,
}

impl HVector {
    pub fn dot(&self, mask: &Mask) -> Rational {
        assert_eq!(mask.k(), self.k, "mask dimension differs from H vector");
        self.entries
            .iter()
            .enumerate()
            .filter(|&(p, _)| mask.bit(p))
            .fold(Rational::zero(), |acc, (_, h)| acc + h)
    }
}

pub fn h_vector(n: usize, k: usize) -> Result<HVector> {
    if n < 1 {
        return Err(Error::RowIndex { n, min: 1 });
    }
    let entries = (0..=k)
        .map(|p| {
            let partial = (1..n).fold(Rational::zero(), |acc, j| {
                acc + Rational::new(BigInt::one(), BigInt::from(j).pow(p as u32))
            });
            partial * Rational::from_integer(binomial(k, p).into())
        })
        .collect();
    Ok(HVector { n, k, entries })
}

/// `H_n · C^T`, the `p = 0` term included.
pub fn h_dot(n: usize, mask: &Mask) -> Result<Rational> {
    Ok(h_vector(n, mask.k())?.dot(mask))
}

fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// Upper bounds for the whole row, keyed by absolute `m` over the support.
///
/// Position `t = m - c_k + 1` holds
/// `(n-1)!^k / (t-1)! * λ^(t-1) * prod_{i=1}^{n-t} F_{i+1}(C')`.
pub fn ocmax_row(mask: &Mask, n: usize) -> Result<BTreeMap<i64, Rational>> {
    if n < 1 {
        return Err(Error::RowIndex { n, min: 1 });
    }
    let lambda = h_dot(n, mask)?;
    let complement = mask.complement();
    // prefix[r] = prod_{i=1}^{r} F_{i+1}(C')
    let mut prefix = vec![Rational::one()];
    for i in 1..n {
        let next = &prefix[i - 1] * f_weight(i as u64 + 1, &complement)?;
        prefix.push(next);
    }
    let lead = int(factorial(n - 1).pow(mask.k() as u32));
    let offset = mask.last() as i64 - 1;
    let mut power = Rational::one(); // λ^(t-1) / (t-1)!
    let mut row = BTreeMap::new();
    for t in 1..=n {
        if t > 1 {
            power = power * &lambda / int(t as u64 - 1);
        }
        row.insert(t as i64 + offset, &lead * &power * &prefix[n - t]);
    }
    Ok(row)
}

/// `O_Cmax(n, m)` at absolute `m`; zero off the support.
pub fn ocmax(mask: &Mask, n: usize, m: i64) -> Result<Rational> {
    Ok(ocmax_row(mask, n)?
        .remove(&m)
        .unwrap_or_else(Rational::zero))
}

/// `sum_m O_Cmax(n, m) / (n!)^k` as an unreduced `(numerator, denominator)`.
///
/// Uses a single common denominator `b^(n-1) (n-1)! (n!)^k`, where
/// `λ = a / b`, so no intermediate gcd is ever taken. This keeps large `n`
/// (hundreds) cheap where [`ocmax_row`] would normalise thousands of
/// huge fractions.
fn ratio_parts(mask: &Mask, n: usize) -> Result<(BigUint, BigUint)> {
    if n < 1 {
        return Err(Error::RowIndex { n, min: 1 });
    }
    let k = mask.k() as u32;
    let lambda = h_dot(n, mask)?;
    let a = lambda.numer().magnitude().clone();
    let b = lambda.denom().magnitude().clone();
    let complement = mask.complement();

    // scaled[r] = prod_{j=2}^{r+1} G_j(C')
    let mut scaled = vec![BigUint::one()];
    for j in 2..=n as u64 {
        let next = scaled.last().unwrap() * g_weight(j, &complement)?;
        scaled.push(next);
    }
    let fact = factorial(n - 1);
    let b_powers: Vec<BigUint> = {
        let mut v = vec![BigUint::one()];
        for _ in 1..n {
            let next = v.last().unwrap() * &b;
            v.push(next);
        }
        v
    };

    let mut numerator = BigUint::zero();
    let mut a_power = BigUint::one(); // a^(t-1)
    let mut falling = BigUint::one(); // (n-1)! / (n-t)!
    let mut fact_over = fact.clone(); // (n-1)! / (t-1)!
    for t in 1..=n {
        if t > 1 {
            a_power *= &a;
            falling *= n - t + 1;
            fact_over /= t - 1;
        }
        let integral = &scaled[n - t] * falling.pow(k);
        numerator += integral * &a_power * &b_powers[n - t] * &fact_over;
    }
    let denominator = &b_powers[n - 1] * fact * factorial(n).pow(k);
    Ok((numerator, denominator))
}

/// `sum_m O_Cmax(n, m) / (n!)^k`, which equals the ratio of the bound's row
/// sum to the true row sum.
pub fn ocmax_ratio(mask: &Mask, n: usize) -> Result<Rational> {
    let (num, den) = ratio_parts(mask, n)?;
    Ok(Rational::new(num.into(), den.into()))
}

/// `ocmax_ratio(mask, n) <= bound`, by cross-multiplication.
pub fn ocmax_ratio_at_most(mask: &Mask, n: usize, bound: &Rational) -> Result<bool> {
    let (num, den) = ratio_parts(mask, n)?;
    Ok(BigInt::from(num) * bound.denom() <= BigInt::from(den) * bound.numer())
}

/// `1.7811`, the rational ceiling on `e^γ`.
pub fn e_gamma_ceiling() -> Rational {
    Rational::new(17811.into(), 10000.into())
}

/// `a_n = e^{sum_{j=2}^{n} 1/(j-1)} / n`, the increasing sequence that caps
/// the Stirling ratio and converges to `e^γ`.
pub fn stirling_bounding_term(n: usize) -> Result<Enclosure> {
    if n < 1 {
        return Err(Error::RowIndex { n, min: 1 });
    }
    let harmonic = (1..n).fold(Rational::zero(), |acc, j| {
        acc + Rational::new(BigInt::one(), BigInt::from(j))
    });
    let enc = exp_enclosure(&harmonic);
    let scale = int(n as u64);
    Ok(Enclosure {
        lo: enc.lo / &scale,
        hi: enc.hi / scale,
    })
}

/// `M = ceil(e k c_1 (ln(n-1) + 1) + e π²/6 sum_{p>=2} c_p binom(k, p)) + M1`
/// for masks with `c_0 = 0`.
pub fn tail_threshold(mask: &Mask, n: usize, m1: u64) -> Result<u64> {
    if mask.first() == 1 {
        return Err(Error::TailBranch {
            expected: 0,
            use_instead: "mirrored_tail",
        });
    }
    if n < 2 {
        return Err(Error::RowIndex { n, min: 2 });
    }
    if m1 == 0 {
        return Err(Error::TailOffset);
    }
    let k = mask.k();
    let linear = if mask.bit(1) {
        E * k as f64 * (((n - 1) as f64).ln() + 1.0)
    } else {
        0.0
    };
    let quadratic: f64 = (2..=k)
        .filter(|&p| mask.bit(p))
        .map(|p| {
            let c: u64 = binomial(k, p).try_into().expect("binomial fits in u64");
            c as f64
        })
        .sum::<f64>()
        * E
        * PI
        * PI
        / 6.0;
    Ok((linear + quadratic).ceil() as u64 + m1)
}

fn row_mass<'a>(tri: &'a Triangle, n: usize, keep: impl Fn(i64) -> bool + 'a) -> Rational {
    let offset = tri.mask().last() as i64;
    let mass: BigUint = tri
        .row(n)
        .iter()
        .enumerate()
        .filter(|&(u, _)| keep(u as i64 + offset))
        .map(|(_, v)| v)
        .sum();
    let total = factorial(n).pow(tri.mask().k() as u32);
    Rational::new(mass.into(), total.into())
}

/// `Pr[m > threshold_m]` under the uniform measure `O_C(n, m) / (n!)^k`.
pub fn upper_tail(tri: &Triangle, n: usize, threshold_m: i64) -> Rational {
    row_mass(tri, n, move |m| m > threshold_m)
}

/// `Pr[m < bound]` under the uniform measure.
pub fn lower_tail(tri: &Triangle, n: usize, bound: i64) -> Rational {
    row_mass(tri, n, move |m| m < bound)
}

pub fn tail_probability(mask: &Mask, n: usize, threshold_m: i64) -> Result<Rational> {
    let tri = Triangle::new(mask, n)?;
    Ok(upper_tail(&tri, n, threshold_m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirroredTail {
    /// `M` computed from the complement mask.
    pub threshold: u64,
    /// The event is `m < boundary` with `boundary = n - M + c_k`.
    pub boundary: i64,
    pub probability: Rational,
}

/// Concentration for masks with `c_0 = 1`, obtained from the complement.
///
/// `C'` has `c'_0 = 0`, so its upper tail above `M + c'_k - 1` is bounded.
/// Reflecting `m -> n - m` turns that event into the *lower* tail
/// `m < n - M + c_k` of `C`, which is what is computed here.
pub fn mirrored_tail(mask: &Mask, n: usize, m1: u64) -> Result<MirroredTail> {
    let tri = Triangle::new(mask, n)?;
    mirrored_tail_on(&tri, n, m1)
}

fn mirrored_tail_on(tri: &Triangle, n: usize, m1: u64) -> Result<MirroredTail> {
    let mask = tri.mask();
    if mask.first() == 0 {
        return Err(Error::TailBranch {
            expected: 1,
            use_instead: "tail_threshold",
        });
    }
    let threshold = tail_threshold(&mask.complement(), n, m1)?;
    let boundary = n as i64 - threshold as i64 + mask.last() as i64;
    Ok(MirroredTail {
        threshold,
        boundary,
        probability: lower_tail(tri, n, boundary),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailSide {
    /// `c_0 = 0`: event `m > M + c_k - 1`.
    Upper,
    /// `c_0 = 1`: event `m < n - M + c_k`.
    Lower,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailCheck {
    pub m1: u64,
    pub threshold: u64,
    pub side: TailSide,
    /// Upper end of the upper event, lower end of the lower one.
    pub boundary: i64,
    pub probability: Rational,
    /// Enclosure of `e^{-M1}`.
    pub bound: Enclosure,
    pub holds: bool,
}

/// Picks the branch by `c_0` and compares the exact tail mass with `e^{-M1}`.
pub fn tail_check(tri: &Triangle, n: usize, m1: u64) -> Result<TailCheck> {
    let mask = tri.mask();
    let (side, threshold, boundary, probability) = if mask.first() == 0 {
        let threshold = tail_threshold(mask, n, m1)?;
        let boundary = threshold as i64 + mask.last() as i64 - 1;
        (
            TailSide::Upper,
            threshold,
            boundary,
            upper_tail(tri, n, boundary),
        )
    } else {
        let t = mirrored_tail_on(tri, n, m1)?;
        (TailSide::Lower, t.threshold, t.boundary, t.probability)
    };
    let bound = exp_of_integer(-(m1 as i64));
    let holds = probability <= &bound.lo + margin();
    Ok(TailCheck {
        m1,
        threshold,
        side,
        boundary,
        probability,
        bound,
        holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub mask: Mask,
    pub n: usize,
    pub values: BTreeMap<i64, BigUint>,
    pub upper_bounds: BTreeMap<i64, Rational>,
    /// `H_n · C^T`
    pub lambda: Rational,
    /// `H_n · C'^T`
    pub lambda_prime: Rational,
    /// `sum_m O_Cmax(n, m) / (n!)^k`
    pub ratio: Rational,
    /// Same with the complement's bound, `sum_m O_C'max(n, m) / (n!)^k`.
    pub ratio_prime: Rational,
    pub exp_lambda: Enclosure,
    pub exp_lambda_prime: Enclosure,
    pub ratio_within_exp_lambda: bool,
    pub ratio_prime_within_exp_lambda_prime: bool,
    /// Only for the Stirling mask `01`: `ratio <= 1.7811`.
    pub ratio_within_e_gamma: Option<bool>,
    pub tails: Vec<TailCheck>,
}

impl BoundReport {
    pub fn dominance(&self, m: i64) -> bool {
        let value = self.values.get(&m).cloned().unwrap_or_default();
        let bound = self
            .upper_bounds
            .get(&m)
            .cloned()
            .unwrap_or_else(Rational::zero);
        int(value) <= bound
    }

    pub fn all_dominated(&self) -> bool {
        self.values.keys().all(|&m| self.dominance(m))
    }

    pub fn all_hold(&self) -> bool {
        self.all_dominated()
            && self.ratio >= Rational::one()
            && self.ratio_within_exp_lambda
            && self.ratio_prime_within_exp_lambda_prime
            && self.ratio_within_e_gamma != Some(false)
            && self.tails.iter().all(|t| t.holds)
    }

    /// Adds one [`TailCheck`] per `M1`.
    pub fn with_tails(mut self, tri: &Triangle, m1s: &[u64]) -> Result<Self> {
        for &m1 in m1s {
            self.tails.push(tail_check(tri, self.n, m1)?);
        }
        Ok(self)
    }
}

pub fn ratio_report(mask: &Mask, n: usize) -> Result<BoundReport> {
    let tri = Triangle::new(mask, n)?;
    ratio_report_on(&tri, n)
}

pub fn ratio_report_on(tri: &Triangle, n: usize) -> Result<BoundReport> {
    if n < 2 {
        return Err(Error::RowIndex { n, min: 2 });
    }
    let mask = tri.mask();
    let complement = mask.complement();
    let values = tri.support(n).map(|m| (m, tri.value(n, m))).collect();
    let upper_bounds = ocmax_row(mask, n)?;
    let lambda = h_dot(n, mask)?;
    let lambda_prime = h_dot(n, &complement)?;
    let ratio = ocmax_ratio(mask, n)?;
    let ratio_prime = ocmax_ratio(&complement, n)?;
    let exp_lambda = exp_enclosure(&lambda);
    let exp_lambda_prime = exp_enclosure(&lambda_prime);
    let ratio_within_exp_lambda = ratio <= &exp_lambda.lo + margin();
    let ratio_prime_within_exp_lambda_prime = ratio_prime <= &exp_lambda_prime.lo + margin();
    let ratio_within_e_gamma = (*mask == Mask::stirling()).then(|| ratio <= e_gamma_ceiling());
    Ok(BoundReport {
        mask: mask.clone(),
        n,
        values,
        upper_bounds,
        lambda,
        lambda_prime,
        ratio,
        ratio_prime,
        exp_lambda,
        exp_lambda_prime,
        ratio_within_exp_lambda,
        ratio_prime_within_exp_lambda_prime,
        ratio_within_e_gamma,
        tails: Vec::new(),
    })
}

/// Full report for the CLI: bounds, ratios and one tail check per `M1`.
pub fn bound_report(mask: &Mask, n: usize, m1s: &[u64]) -> Result<BoundReport> {
    let tri = Triangle::new(mask, n)?;
    ratio_report_on(&tri, n)?.with_tails(&tri, m1s)
}
