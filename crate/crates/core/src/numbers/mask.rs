use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The selection vector `C = (c_0, ..., c_k)`.
///
/// Row `i` of a permutation tuple is selected when `c_l = 1`, where `l` is the
/// number of columns in which row `i` is a prefix minimum. The dimension `k`
/// (number of permutation columns) is `len - 1`, so every mask has at least
/// two entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mask {
    bits: Vec<bool>,
}

impl Mask {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.len() < 2 {
            return Err(Error::InvalidMask {
                input: bits.iter().map(|&b| if b { '1' } else { '0' }).collect(),
                reason: "need at least two entries (k >= 1)",
            });
        }
        Ok(Mask { bits })
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidMask {
                input: format!("{bits:?}"),
                reason: "entries must be 0 or 1",
            });
        }
        Mask::new(bits.iter().map(|&b| b == 1).collect())
    }

    /// `(0, 1)`: the mask whose numbers are the unsigned Stirling numbers of
    /// the first kind.
    pub fn stirling() -> Self {
        Mask {
            bits: vec![false, true],
        }
    }

    /// `(0, 1, ..., 1)` with `k` ones: the k-dimensional sequential
    /// optimization numbers.
    pub fn k_dimensional(k: usize) -> Result<Self> {
        let mut bits = vec![true; k + 1];
        bits[0] = false;
        Mask::new(bits)
    }

    /// Every mask of dimension `k`, in increasing binary order of `c_0 c_1 ... c_k`.
    pub fn all(k: usize) -> impl Iterator<Item = Mask> {
        let len = k + 1;
        (0u64..(1u64 << len)).map(move |code| Mask {
            bits: (0..len).map(|p| (code >> (len - 1 - p)) & 1 == 1).collect(),
        })
    }

    pub fn k(&self) -> usize {
        self.bits.len() - 1
    }

    pub fn bit(&self, p: usize) -> bool {
        self.bits[p]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// `c_0`.
    pub fn first(&self) -> u8 {
        self.bits[0] as u8
    }

    /// `c_k`, the offset of the support `[c_k, n - 1 + c_k]`.
    pub fn last(&self) -> u8 {
        self.bits[self.k()] as u8
    }

    pub fn complement(&self) -> Mask {
        Mask {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn is_all_zeros(&self) -> bool {
        self.bits.iter().all(|b| !b)
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Mask {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = |reason| Error::InvalidMask {
            input: s.to_string(),
            reason,
        };
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(invalid("characters must be 0 or 1")),
            })
            .collect::<Result<Vec<_>>>()?;
        if bits.len() < 2 {
            return Err(invalid("need at least two characters (k >= 1)"));
        }
        Ok(Mask { bits })
    }
}
