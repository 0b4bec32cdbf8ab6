// Upper bounds, ratio bounds and tail checks for one mask.
//
// cargo run --example bounds_report -- 0101 12

use std::fmt::Write;

use seqopt::bounds::bound_report;
use seqopt::real::to_f64;
use seqopt::Mask;

pub fn run_example(mask: &Mask, n: usize) -> seqopt::Result<String> {
    let report = bound_report(mask, n, &[1, 2, 3])?;
    let mut out = format!("C = {mask}, n = {n}\n");
    for (m, v) in &report.values {
        let bound = &report.upper_bounds[m];
        writeln!(
            out,
            "  m={m:<3} value {v:<14} ocmax ~ {:.4e}",
            to_f64(bound)
        )
        .unwrap();
    }
    writeln!(
        out,
        "ratio {:.6} vs e^lambda {:.6}; ratio' {:.6} vs e^lambda' {:.6}",
        to_f64(&report.ratio),
        report.exp_lambda.midpoint_f64(),
        to_f64(&report.ratio_prime),
        report.exp_lambda_prime.midpoint_f64()
    )
    .unwrap();
    for t in &report.tails {
        writeln!(
            out,
            "tail M1={} ({:?}, M={}): mass {:.3e} <= {:.3e}: {}",
            t.m1,
            t.side,
            t.threshold,
            to_f64(&t.probability),
            t.bound.midpoint_f64(),
            t.holds
        )
        .unwrap();
    }
    writeln!(out, "all bounds hold: {}", report.all_hold()).unwrap();
    Ok(out)
}

fn main() -> seqopt::Result<()> {
    let mut args = std::env::args().skip(1);
    let mask: Mask = args.next().as_deref().unwrap_or("0101").parse()?;
    let n = args.next().and_then(|s| s.parse().ok()).unwrap_or(12);
    print!("{}", run_example(&mask, n)?);
    Ok(())
}
