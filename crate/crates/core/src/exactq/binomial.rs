use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::BigRat;

/// Rows of Pascal's triangle, grown on demand.
static PASCAL: RwLock<Vec<Vec<BigInt>>> = RwLock::new(Vec::new());

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    {
        let rows = PASCAL.read().unwrap_or_else(|e| e.into_inner());
        if let Some(row) = rows.get(n) {
            return row[k].clone();
        }
    }
    let mut rows = PASCAL.write().unwrap_or_else(|e| e.into_inner());
    while rows.len() <= n {
        let next = match rows.last() {
            None => vec![BigInt::one()],
            Some(prev) => {
                let mut row = Vec::with_capacity(prev.len() + 1);
                row.push(BigInt::one());
                for w in prev.windows(2) {
                    row.push(&w[0] + &w[1]);
                }
                row.push(BigInt::one());
                row
            }
        };
        rows.push(next);
    }
    rows[n][k].clone()
}

pub fn binomial_rat(n: usize, k: usize) -> BigRat {
    BigRat::from_integer(binomial(n, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: usize) -> BigInt {
        (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
    }

    #[test]
    fn matches_factorial_formula() {
        for n in 0..40 {
            for k in 0..=n {
                let expected = factorial(n) / (factorial(k) * factorial(n - k));
                assert_eq!(binomial(n, k), expected, "C({n},{k})");
            }
        }
        assert_eq!(binomial(3, 4), BigInt::zero());
    }
}
