//! Exact computation of C sequential optimization numbers.
//!
//! For a mask `C = (c_0, ..., c_k)` and a tuple of `k` permutations of
//! `1..=n`, let `l(i)` be the number of permutations in which position `i` is
//! a prefix minimum. `O_C(n, m)` counts the `(n!)^k` tuples in which exactly
//! `m` positions have `c_{l(i)} = 1`. The mask `(0, 1)` gives the unsigned
//! Stirling numbers of the first kind.
//!
//! * [`numbers`] computes the table by recurrence and by explicit sum, and
//!   expands the generating polynomials.
//! * [`oracle`] enumerates permutation tuples literally.
//! * [`bounds`] evaluates the closed upper bound, tail and ratio checks.
//! * [`cli`] renders all of it for the `seqopt` binary.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod numbers;
pub mod oracle;
pub mod real;

pub use error::{Error, Result};
pub use numbers::{Mask, Rational, Triangle};
