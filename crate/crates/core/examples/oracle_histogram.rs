// Enumerates every tuple of permutations and compares the tally with the
// recurrence.

use std::fmt::Write;

use seqopt::oracle::{
    histogram, optimization_set_bruteforce, prefix_min_records, Relation, DEFAULT_BUDGET,
};
use seqopt::{Mask, Triangle};

pub fn run_example() -> seqopt::Result<String> {
    let mut out = String::new();
    for mask in ["01", "011", "010", "1011"] {
        let mask: Mask = mask.parse()?;
        let n = if mask.k() >= 3 { 4 } else { 5 };
        let hist = histogram(&mask, n, DEFAULT_BUDGET)?;
        let tri = Triangle::new(&mask, n)?;
        writeln!(out, "C = {mask}, n = {n}, {} tuples", hist.total()).unwrap();
        for (&m, count) in &hist.counts {
            let same = *count == tri.value(n, m as i64);
            writeln!(
                out,
                "  m={m}: {count}{}",
                if same { "" } else { "  MISMATCH" }
            )
            .unwrap();
        }
    }

    // For a single permutation the optimization set is its prefix minima.
    let perm = [4, 6, 2, 5, 1, 3];
    let points: Vec<(i64, i64)> = perm
        .iter()
        .enumerate()
        .map(|(i, &v)| (i as i64 + 1, v as i64))
        .collect();
    let kept = optimization_set_bruteforce(&points, (Relation::LessEq, Relation::Less))?;
    let records = prefix_min_records(&perm)?;
    writeln!(
        out,
        "perm {perm:?}: optimization set {kept:?}, records at {records:?}"
    )
    .unwrap();
    Ok(out)
}

fn main() -> seqopt::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
