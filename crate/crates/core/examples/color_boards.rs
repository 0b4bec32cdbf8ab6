// k-dimensional colour boards: for every arrangement of heights, count the
// colours that the mask selects, then compare the totals with the triangle.

use std::fmt::Write;

use itertools::Itertools;
use seqopt::oracle::color_boards_count;
use seqopt::{Mask, Triangle};

pub fn run_example() -> seqopt::Result<String> {
    let (mask, n): (Mask, usize) = ("011".parse()?, 4);
    let perms: Vec<Vec<usize>> = (1..=n).permutations(n).collect();
    let mut tally = vec![0u64; n + 1];
    for (a, b) in perms.iter().cartesian_product(&perms) {
        tally[color_boards_count(&[a.clone(), b.clone()], &mask)?] += 1;
    }
    let tri = Triangle::new(&mask, n)?;
    let mut out = format!("C = {mask}, {n} boards, 2 groups\n");
    for (m, count) in tally.iter().enumerate().filter(|(_, &c)| c > 0) {
        writeln!(
            out,
            "  {m} colours: {count} (triangle {})",
            tri.value(n, m as i64)
        )
        .unwrap();
    }
    let one = color_boards_count(&[vec![2, 4, 1, 3], vec![1, 2, 3, 4]], &mask)?;
    writeln!(
        out,
        "heights [2,4,1,3] and [1,2,3,4]: {one} colour(s) counted"
    )
    .unwrap();
    Ok(out)
}

fn main() -> seqopt::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
