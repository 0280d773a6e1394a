//! Closed-form rows for patterns with trivially described distributions.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{binomial, fact};
use crate::error::{Error, Result};
use crate::oracle::trim;

/// Pattern numbers with a closed-form row.
pub const TRIVIAL_NRS: [u32; 10] = [5, 10, 11, 12, 13, 18, 19, 20, 21, 22];

/// Row `(T[n][0], T[n][1], ...)` for the pattern `nr`.
pub fn dist_trivial(nr: u32, n: usize) -> Result<Vec<BigInt>> {
    let row = match nr {
        // first letter a gives n - a occurrences
        5 => (0..n.max(1)).map(|_| fact(n.saturating_sub(1))).collect(),
        10 if n >= 2 => {
            let half: BigInt = fact(n) / 2;
            vec![half.clone(), half]
        }
        11 if n == 2 => vec![BigInt::from(1), BigInt::from(1)],
        // a leading 1 pairs with each of the other n - 1 letters
        12 if n >= 2 => {
            let mut r = vec![BigInt::zero(); n];
            r[0] = fact(n) - fact(n - 1);
            r[n - 1] = fact(n - 1);
            r
        }
        13 if n >= 2 => split(n, fact(n - 2)),
        18 => split(n, (1..n).map(|i| fact(n - 1) / i).sum()),
        19 => split(
            n,
            (0..n.saturating_sub(1))
                .map(|i| fact(i) * fact(n - i - 1))
                .sum(),
        ),
        20 => split(n, (1..n).map(|i| fact(i - 1) * fact(n - i - 1)).sum()),
        21 => split(n, nr21_containing(n)),
        22 => split(
            n,
            (0..n.saturating_sub(1))
                .flat_map(|i| (0..=i).map(move |l| fact(l) * fact(i - l) * fact(n - 2 - i)))
                .sum(),
        ),
        10..=13 => vec![fact(n)],
        _ => {
            return Err(Error::InvalidInput(format!(
                "pattern nr={nr} has no closed-form row"
            )))
        }
    };
    Ok(trim(row))
}

/// `(n! - c, c)`: `c` permutations contain exactly one occurrence.
fn split(n: usize, containing: BigInt) -> Vec<BigInt> {
    vec![fact(n) - &containing, containing]
}

/// Permutations of length `n` containing Nr. 21:
/// `sum_{j + l <= n-2} j! l! (n-2-j-l)! C(n-j-1, l+1)`, checked against the oracle.
pub fn nr21_containing(n: usize) -> BigInt {
    if n < 2 {
        return BigInt::zero();
    }
    let m = n - 2;
    let mut total = BigInt::zero();
    for j in 0..=m {
        for l in 0..=(m - j) {
            total += fact(j) * fact(l) * fact(m - j - l) * binomial(n - j - 1, l + 1);
        }
    }
    total
}

/// Avoider count for Nr. 21 exactly as the double sum
/// `n! - sum_{i=1}^{n-1} sum_{l=1}^{i} l! (i-l)! (n-i-l)!` reads, with terms
/// whose factorial argument is negative dropped. Agrees with enumeration
/// only for `n <= 2`; kept to document the discrepancy.
pub fn nr21_avoiders_printed(n: usize) -> BigInt {
    let mut s = BigInt::zero();
    for i in 1..n {
        for l in 1..=i {
            if i + l <= n {
                s += fact(l) * fact(i - l) * fact(n - i - l);
            }
        }
    }
    fact(n) - s
}
