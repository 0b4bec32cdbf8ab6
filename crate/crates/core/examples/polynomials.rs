// Rising and falling generating polynomials and their zeros.

use std::fmt::Write;

use seqopt::numbers::{falling_poly, poly_zeros, rising_poly, PolyKind, Root};
use seqopt::{Mask, Rational};

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn run_example() -> seqopt::Result<String> {
    let mut out = String::new();
    for mask in ["01", "011", "101", "00"] {
        let mask: Mask = mask.parse()?;
        let n = 4;
        for (poly, kind) in [
            (rising_poly(&mask, n)?, PolyKind::Rising),
            (falling_poly(&mask, n)?, PolyKind::Falling),
        ] {
            let zeros = poly_zeros(&mask, n, kind)?;
            let residuals: Vec<Rational> = zeros
                .iter()
                .filter_map(|z| match z {
                    Root::Value(x) => Some(poly.eval(x)),
                    Root::Undefined => None,
                })
                .collect();
            writeln!(
                out,
                "{mask} {kind:<7} [{}]  zeros [{}]  p(zero) [{}]",
                join(poly.coefficients()),
                join(&zeros),
                join(&residuals)
            )
            .unwrap();
        }
    }
    Ok(out)
}

fn main() -> seqopt::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
