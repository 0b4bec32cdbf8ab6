// Evaluates single cells through the combination sum and checks them
// against the recurrence.

use std::fmt::Write;

use seqopt::numbers::{explicit_value, value, DEFAULT_SUBSET_LIMIT};
use seqopt::Mask;

pub fn run_example() -> seqopt::Result<String> {
    let mut out = String::new();
    for (mask, n, m) in [("01", 8, 3), ("011", 7, 4), ("110", 9, 2), ("0101", 6, 3)] {
        let mask: Mask = mask.parse()?;
        let direct = explicit_value(&mask, n, m, DEFAULT_SUBSET_LIMIT)?;
        let recurrence = value(&mask, n, m)?;
        assert_eq!(direct, recurrence);
        writeln!(out, "O_{mask}({n}, {m}) = {direct}").unwrap();
    }
    // Past the subset limit the sum refuses instead of running for hours.
    let refused = explicit_value(&Mask::stirling(), 20, 10, DEFAULT_SUBSET_LIMIT);
    writeln!(out, "n=20: {}", refused.unwrap_err()).unwrap();
    Ok(out)
}

fn main() -> seqopt::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
