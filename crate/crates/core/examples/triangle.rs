// Prints the first rows of a triangle and its row sums.
//
// cargo run --example triangle -- 011 6

use std::fmt::Write;

use seqopt::numbers::factorial;
use seqopt::{Mask, Triangle};

pub fn run_example(mask: &Mask, max_n: usize) -> seqopt::Result<String> {
    let tri = Triangle::new(mask, max_n)?;
    let mut out = format!("O_C(n, m) for C = {mask}\n");
    for n in 1..=max_n {
        let row: Vec<String> = tri.row(n).iter().map(ToString::to_string).collect();
        let sum = tri.row_sum(n);
        assert_eq!(sum, factorial(n).pow(mask.k() as u32));
        writeln!(
            out,
            "n={n:<3} m={:?}  [{}]  sum={sum}",
            tri.support(n),
            row.join(", ")
        )
        .unwrap();
    }
    Ok(out)
}

fn main() -> seqopt::Result<()> {
    let mut args = std::env::args().skip(1);
    let mask: Mask = args.next().as_deref().unwrap_or("011").parse()?;
    let max_n = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    print!("{}", run_example(&mask, max_n)?);
    Ok(())
}
