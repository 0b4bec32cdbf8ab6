//! Identity checks run by `seqopt verify` against a computed (or supplied)
//! triangle.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::bounds::{h_dot, ocmax_row};
use crate::numbers::{
    explicit_value, f_weight, factorial, falling_poly, g_weight, poly_zeros, rising_poly,
    stirling_ref, Mask, PolyKind, Rational, Root, Triangle,
};
use crate::oracle::{histogram, tuple_count};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn from_failures(name: &'static str, scope: String, failures: Vec<String>) -> Check {
        match failures.first() {
            None => Check {
                name,
                status: Status::Pass,
                detail: scope,
            },
            Some(first) => Check {
                name,
                status: Status::Fail,
                detail: format!("{} failure(s); first: {first}", failures.len()),
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub oracle: bool,
    pub budget: u64,
    pub subset_limit: usize,
}

/// Runs every identity on `subject`, whose mask and row count define the
/// scope. Also returns warnings for skipped oracle rows.
pub fn run_checks(subject: &Triangle, opts: &VerifyOptions) -> (Vec<Check>, Vec<String>) {
    let mask = subject.mask();
    let max_n = subject.max_n();
    let mut warnings = Vec::new();
    let mut checks = vec![
        boundary(subject),
        row_sums(subject),
        symmetry(subject),
        explicit_sum(subject, opts.subset_limit),
        polynomials(subject),
        weights(mask, max_n),
        h_identity(mask, max_n),
        dominance(subject),
    ];
    if *mask == Mask::stirling() {
        checks.push(stirling(subject));
    }
    if opts.oracle {
        checks.push(oracle(subject, opts.budget, &mut warnings));
    }
    (checks, warnings)
}

fn boundary(tri: &Triangle) -> Check {
    let ok = tri.row(1) == [BigUint::one()];
    let failures = if ok {
        vec![]
    } else {
        vec![format!("row 1 is {:?}", tri.row(1))]
    };
    Check::from_failures(
        "boundary",
        format!("O(1, {}) = 1", tri.mask().last()),
        failures,
    )
}

fn row_sums(tri: &Triangle) -> Check {
    let k = tri.mask().k() as u32;
    let failures = (1..=tri.max_n())
        .filter_map(|n| {
            let (got, want) = (tri.row_sum(n), factorial(n).pow(k));
            (got != want).then(|| format!("n={n}: {got} != {want}"))
        })
        .collect();
    Check::from_failures("row-sum", format!("n=1..={}", tri.max_n()), failures)
}

fn symmetry(tri: &Triangle) -> Check {
    let mirror = Triangle::new(&tri.mask().complement(), tri.max_n()).expect("max_n >= 1");
    let mut failures = Vec::new();
    for n in 1..=tri.max_n() {
        for m in -1..=n as i64 + 1 {
            if tri.value(n, m) != mirror.value(n, n as i64 - m) {
                failures.push(format!("n={n}, m={m}"));
            }
        }
    }
    Check::from_failures("symmetry", format!("against {}", mirror.mask()), failures)
}

fn explicit_sum(tri: &Triangle, limit: usize) -> Check {
    let top = tri.max_n().min(limit);
    let mut failures = Vec::new();
    for n in 1..=top {
        for m in tri.support(n) {
            match explicit_value(tri.mask(), n, m, limit) {
                Ok(v) if v == tri.value(n, m) => {}
                Ok(v) => failures.push(format!("n={n}, m={m}: {v} != {}", tri.value(n, m))),
                Err(e) => failures.push(format!("n={n}, m={m}: {e}")),
            }
        }
    }
    let mut scope = format!("n=1..={top}");
    if top < tri.max_n() {
        scope.push_str(&format!(" (subset limit {limit})"));
    }
    Check::from_failures("explicit-sum", scope, failures)
}

fn polynomials(tri: &Triangle) -> Check {
    let mask = tri.mask();
    let offset = mask.last() as i64 - 1;
    let mut failures = Vec::new();
    for n in 1..=tri.max_n() {
        let rising = rising_poly(mask, n).expect("n >= 1");
        let falling = falling_poly(mask, n).expect("n >= 1");
        for (p, (r, f)) in rising
            .coefficients()
            .iter()
            .zip(falling.coefficients())
            .enumerate()
        {
            let value = BigInt::from(tri.value(n, p as i64 + offset));
            let signed = if (n + p) % 2 == 0 {
                value.clone()
            } else {
                -value.clone()
            };
            if *r != value || *f != signed {
                failures.push(format!("n={n}, x^{p}"));
            }
        }
        for (poly, kind) in [(&rising, PolyKind::Rising), (&falling, PolyKind::Falling)] {
            for root in poly_zeros(mask, n, kind).expect("n >= 1") {
                if let Root::Value(x) = root {
                    if !poly.eval(&x).is_zero() {
                        failures.push(format!("n={n}, {kind} zero {x}"));
                    }
                }
            }
        }
    }
    Check::from_failures("polynomial", format!("n=1..={}", tri.max_n()), failures)
}

fn weights(mask: &Mask, max_n: usize) -> Check {
    let k = mask.k() as u32;
    let top = max_n.max(2) as u64;
    let complement = mask.complement();
    let f: Vec<Rational> = (2..=top).map(|j| f_weight(j, mask).unwrap()).collect();
    let mut failures = Vec::new();
    for (i, fj) in f.iter().enumerate() {
        let j = i as u64 + 2;
        if f.get(i + 1).is_some_and(|next| next > fj) {
            failures.push(format!("F_{} > F_{j}", j + 1));
        }
        if mask.first() == 1 && *fj < Rational::one() {
            failures.push(format!("F_{j} < 1 with c_0 = 1"));
        }
        let pair = fj + f_weight(j, &complement).unwrap();
        let want = Rational::new(BigInt::from(j), BigInt::from(j - 1)).pow(k as i32);
        if pair != want {
            failures.push(format!("F_{j}(C) + F_{j}(C') != (j/(j-1))^k"));
        }
        let g_pair = g_weight(j, mask).unwrap() + g_weight(j, &complement).unwrap();
        if g_pair != BigUint::from(j).pow(k) {
            failures.push(format!("G_{j}(C) + G_{j}(C') != j^k"));
        }
    }
    let mut product = Rational::one();
    for (i, fj) in f.iter().enumerate() {
        product *= fj;
        let n = i as u64 + 2;
        if product > Rational::from_integer(BigInt::from(n).pow(k)) {
            failures.push(format!("prod F_j > n^k at n={n}"));
        }
    }
    Check::from_failures("weights", format!("j=2..={top}"), failures)
}

fn h_identity(mask: &Mask, max_n: usize) -> Check {
    let mut failures = Vec::new();
    let mut running = Rational::zero();
    for n in 1..=max_n {
        if n >= 2 {
            running += f_weight(n as u64, mask).unwrap();
        }
        if h_dot(n, mask).unwrap() != running {
            failures.push(format!("n={n}"));
        }
    }
    Check::from_failures("h-dot", format!("n=1..={max_n}"), failures)
}

fn dominance(tri: &Triangle) -> Check {
    let mut failures = Vec::new();
    for n in 1..=tri.max_n() {
        let bounds = ocmax_row(tri.mask(), n).expect("n >= 1");
        for m in tri.support(n) {
            let value = Rational::from_integer(tri.value(n, m).into());
            if bounds.get(&m).is_none_or(|b| *b < value) {
                failures.push(format!("n={n}, m={m}"));
            }
        }
    }
    Check::from_failures("upper-bound", format!("n=1..={}", tri.max_n()), failures)
}

fn stirling(tri: &Triangle) -> Check {
    let reference = stirling_ref(tri.max_n());
    let failures = stirling_diff(tri, &reference);
    Check::from_failures("stirling", format!("n=1..={}", tri.max_n()), failures)
}

/// Cells where the `01` triangle and the classic table disagree.
pub fn stirling_diff(tri: &Triangle, reference: &crate::numbers::StirlingTable) -> Vec<String> {
    let mut diffs = Vec::new();
    for n in 1..=tri.max_n() {
        for m in 0..=n as i64 {
            let (ours, theirs) = (tri.value(n, m), reference.get(n, m));
            if ours != theirs {
                diffs.push(format!("n={n}, m={m}: triangle={ours} reference={theirs}"));
            }
        }
    }
    diffs
}

fn oracle(tri: &Triangle, budget: u64, warnings: &mut Vec<String>) -> Check {
    let mask = tri.mask();
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=tri.max_n() {
        match tuple_count(mask, n) {
            Some(count) if count <= budget => {}
            _ => {
                warnings.push(format!(
                    "oracle skipped for n={n}..={}: (n!)^k exceeds the budget of {budget}",
                    tri.max_n()
                ));
                break;
            }
        }
        let hist = histogram(mask, n, budget).expect("within budget");
        for m in -1..=n as i64 + 1 {
            if hist.count(m) != tri.value(n, m) {
                failures.push(format!(
                    "n={n}, m={m}: oracle {} != {}",
                    hist.count(m),
                    tri.value(n, m)
                ));
            }
        }
        checked = n;
    }
    if checked == 0 {
        return Check {
            name: "oracle",
            status: Status::Skip,
            detail: format!("budget {budget} too small for n=1"),
        };
    }
    Check::from_failures("oracle", format!("n=1..={checked}"), failures)
}
