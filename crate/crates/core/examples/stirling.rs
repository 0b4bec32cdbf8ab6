// With C = 01 the triangle is the unsigned Stirling numbers of the first
// kind, and the bounded ratio stays under 1.7811.

use std::fmt::Write;

use seqopt::bounds::{e_gamma_ceiling, ocmax_ratio, stirling_bounding_term};
use seqopt::numbers::stirling_ref;
use seqopt::real::to_f64;
use seqopt::{Mask, Triangle};

pub fn run_example() -> seqopt::Result<String> {
    let tri = Triangle::new(&Mask::stirling(), 30)?;
    let reference = stirling_ref(30);
    let mismatches = (1..=30)
        .flat_map(|n| (1..=n as i64).map(move |m| (n, m)))
        .filter(|&(n, m)| tri.value(n, m) != reference.get(n, m))
        .count();
    let mut out = format!("rows 1..=30 against the classic recurrence: {mismatches} mismatches\n");
    writeln!(out, "s(30, 15) = {}", tri.value(30, 15)).unwrap();
    let ceiling = to_f64(&e_gamma_ceiling());
    for n in [2, 10, 50, 100] {
        let ratio = to_f64(&ocmax_ratio(&Mask::stirling(), n)?);
        let a = stirling_bounding_term(n)?.midpoint_f64();
        writeln!(
            out,
            "n={n:<4} ratio {ratio:.6}  e^H/n {a:.6}  ceiling {ceiling}"
        )
        .unwrap();
    }
    Ok(out)
}

fn main() -> seqopt::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
