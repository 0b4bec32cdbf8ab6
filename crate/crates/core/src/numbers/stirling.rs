use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Unsigned Stirling numbers of the first kind, `s_u(n, m)` for
/// `0 <= m <= n <= max_n`, from the textbook recurrence
/// `s_u(n+1, m) = s_u(n, m-1) + n s_u(n, m)`.
///
/// Kept deliberately separate from the mask machinery so it can serve as an
/// independent reference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows = vec![vec![BigUint::one()]];
        for n in 0..max_n {
            let prev = &rows[n];
            let next: Vec<BigUint> = (0..=n + 1)
                .map(|m| {
                    let mut s = BigUint::zero();
                    if m >= 1 {
                        s += &prev[m - 1];
                    }
                    if m <= n {
                        s += &prev[m] * n;
                    }
                    s
                })
                .collect();
            rows.push(next);
        }
        StirlingTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `s_u(n, m)`; zero when `m` is outside `0..=n` or `n > max_n`.
    pub fn get(&self, n: usize, m: i64) -> BigUint {
        if m < 0 {
            return BigUint::zero();
        }
        self.rows
            .get(n)
            .and_then(|row| row.get(m as usize))
            .cloned()
            .unwrap_or_default()
    }
}

pub fn stirling_ref(max_n: usize) -> StirlingTable {
    StirlingTable::new(max_n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let s = stirling_ref(10);
        assert_eq!(s.get(1, 1), BigUint::one());
        assert_eq!(s.get(4, 2), BigUint::from(11u32));
        assert_eq!(s.get(4, 1), BigUint::from(6u32));
        assert_eq!(s.get(10, 3), BigUint::from(1_172_700u32));
        assert_eq!(s.get(5, 0), BigUint::zero());
        assert_eq!(s.get(0, 0), BigUint::one());
        assert_eq!(s.get(4, 5), BigUint::zero());
        assert_eq!(s.get(11, 1), BigUint::zero());
        for n in 1..=10 {
            assert_eq!(s.get(n, n as i64), BigUint::one());
        }
    }
}
