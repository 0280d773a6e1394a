//! Row recurrences `T[n][k]`; out-of-range indices contribute zero.

use num_bigint::BigInt;
use num_traits::Zero;

use super::fact;
use crate::error::{Error, Result};
use crate::oracle::{trim, DistributionTable};

/// Pattern numbers whose distribution comes from a recurrence.
pub const RECURRENCE_NRS: [u32; 6] = [8, 9, 14, 15, 36, 45];

/// How the Nr. 45 table is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nr45Route {
    /// Two-step recurrence in `T` alone.
    Main,
    /// Recurrence on row polynomials `T_n(x)` with formal derivatives.
    Polynomial,
    /// `T[n][k] = B[n][k] + (k+1) T[n-1][k+1] + (n-k-1) T[n-1][k]` with the helper `B`.
    Helper,
}

struct Rows(Vec<Vec<BigInt>>);

impl Rows {
    fn get(&self, n: usize, k: isize) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        self.0
            .get(n)
            .and_then(|r| r.get(k as usize))
            .cloned()
            .unwrap_or_default()
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn run(
    seed: Vec<Vec<BigInt>>,
    n_max: usize,
    step: impl Fn(&Rows, usize, isize) -> BigInt,
) -> Vec<Vec<BigInt>> {
    let mut rows = Rows(seed);
    rows.0.truncate(n_max + 1);
    for n in rows.0.len()..=n_max {
        let row: Vec<BigInt> = (0..=n as isize).map(|k| step(&rows, n, k)).collect();
        rows.0.push(trim(row));
    }
    rows.0
}

fn stirling_rows(n_max: usize) -> Vec<Vec<BigInt>> {
    run(vec![ints(&[1]), ints(&[1])], n_max, |t, n, k| {
        if k == 0 {
            fact(n - 1)
        } else {
            t.get(n - 1, k - 1) + t.get(n - 1, k) * (n - 1)
        }
    })
}

fn nr14_rows(n_max: usize) -> Vec<Vec<BigInt>> {
    run(
        vec![ints(&[1]), ints(&[1]), ints(&[1, 1])],
        n_max,
        |t, n, k| {
            let nk = n as isize - k - 1;
            t.get(n - 1, k - 1) + t.get(n - 1, k + 1) * (k + 1) + t.get(n - 1, k) * nk
        },
    )
}

fn nr36_rows(n_max: usize) -> Vec<Vec<BigInt>> {
    run(
        vec![ints(&[1]), ints(&[1]), ints(&[1, 1])],
        n_max,
        |t, n, k| {
            t.get(n - 1, k + 1) * (k + 1) + t.get(n - 1, k) * (n as isize - k) - t.get(n - 2, k)
                + t.get(n - 2, k - 1)
        },
    )
}

fn nr45_main(n_max: usize) -> Vec<Vec<BigInt>> {
    run(
        vec![ints(&[1]), ints(&[1]), ints(&[1, 1])],
        n_max,
        |t, n, k| {
            let n = n as isize;
            t.get(n as usize - 1, k + 1) * (k + 1)
                + t.get(n as usize - 1, k) * (n - k - 1)
                + t.get(n as usize - 1, k - 1)
                + t.get(n as usize - 2, k + 1) * (k + 1)
                + t.get(n as usize - 2, k) * (n - 2 * k - 2)
                - t.get(n as usize - 2, k - 1) * (n - k - 1)
        },
    )
}

fn poly_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i] += v;
    }
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_derivative(a: &[BigInt]) -> Vec<BigInt> {
    a.iter().enumerate().skip(1).map(|(i, v)| v * i).collect()
}

/// `T_n = (x+n-1) T_{n-1} + (1-x) T'_{n-1} + (n-2)(1-x) T_{n-2} + (1-x)^2 T'_{n-2}`.
fn nr45_polynomial(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![ints(&[1]), ints(&[1]), ints(&[1, 1])];
    rows.truncate(n_max + 1);
    let one_minus_x = ints(&[1, -1]);
    for n in rows.len()..=n_max {
        let (t1, t2) = (&rows[n - 1], &rows[n - 2]);
        let lin = ints(&[n as i64 - 1, 1]);
        let mut acc = poly_mul(&lin, t1);
        acc = poly_add(&acc, &poly_mul(&one_minus_x, &poly_derivative(t1)));
        acc = poly_add(&acc, &poly_mul(&ints(&[n as i64 - 2, 2 - n as i64]), t2));
        let sq = poly_mul(&one_minus_x, &one_minus_x);
        acc = poly_add(&acc, &poly_mul(&sq, &poly_derivative(t2)));
        rows.push(trim(acc));
    }
    rows
}

/// `B[n][k]`: `n`-permutations beginning with `1` that have `k` occurrences of Nr. 45,
/// computed with `B[n][k] = B[n-1][k-1] + T[n-1][k] - B[n-1][k]` alongside `T`.
///
/// Returns `(T, B)` for rows `0..=n_max`; row `0` of `B` is `[0]`.
pub fn nr45_with_helper(n_max: usize) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let mut t = Rows(vec![ints(&[1]), ints(&[1]), ints(&[1, 1])]);
    let mut b = Rows(vec![ints(&[0]), ints(&[1]), ints(&[0, 1])]);
    t.0.truncate(n_max + 1);
    b.0.truncate(n_max + 1);
    for n in t.0.len()..=n_max {
        let brow: Vec<BigInt> = (0..=n as isize)
            .map(|k| b.get(n - 1, k - 1) + t.get(n - 1, k) - b.get(n - 1, k))
            .collect();
        b.0.push(trim(brow));
        let trow: Vec<BigInt> = (0..=n as isize)
            .map(|k| {
                b.get(n, k) + t.get(n - 1, k + 1) * (k + 1) + t.get(n - 1, k) * (n as isize - k - 1)
            })
            .collect();
        t.0.push(trim(trow));
    }
    (t.0, b.0)
}

pub fn dist_recurrence_45(route: Nr45Route, n_max: usize) -> DistributionTable {
    let rows = match route {
        Nr45Route::Main => nr45_main(n_max),
        Nr45Route::Polynomial => nr45_polynomial(n_max),
        Nr45Route::Helper => nr45_with_helper(n_max).0,
    };
    DistributionTable::new("nr=45", rows)
}

/// Distribution table for rows `0..=n_max` of the patterns in [`RECURRENCE_NRS`].
pub fn dist_recurrence(nr: u32, n_max: usize) -> Result<DistributionTable> {
    let rows = match nr {
        8 | 9 => stirling_rows(n_max),
        14 | 15 => nr14_rows(n_max),
        36 => nr36_rows(n_max),
        45 => nr45_main(n_max),
        _ => {
            return Err(Error::InvalidInput(format!(
                "pattern nr={nr} has no recurrence"
            )))
        }
    };
    Ok(DistributionTable::new(format!("nr={nr}"), rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rising_product_coeffs;

    #[test]
    fn stirling_rows_match_product() {
        let t = dist_recurrence(8, 9).unwrap();
        assert_eq!(t.rows[4], ints(&[6, 11, 6, 1]));
        for n in 1..=9 {
            assert_eq!(t.rows[n], rising_product_coeffs(n));
        }
    }

    #[test]
    fn small_rows() {
        assert_eq!(dist_recurrence(14, 4).unwrap().rows[2], ints(&[1, 1]));
        assert_eq!(
            dist_recurrence(14, 4).unwrap().rows[4],
            ints(&[11, 9, 3, 1])
        );
        assert_eq!(dist_recurrence(36, 4).unwrap().rows[4], ints(&[14, 9, 1]));
        assert_eq!(dist_recurrence(45, 4).unwrap().rows[3], ints(&[4, 1, 1]));
        assert!(dist_recurrence(10, 4).is_err());
    }

    #[test]
    fn nr45_routes_agree() {
        let main = dist_recurrence_45(Nr45Route::Main, 10);
        assert_eq!(main, dist_recurrence_45(Nr45Route::Polynomial, 10));
        assert_eq!(main, dist_recurrence_45(Nr45Route::Helper, 10));
        main.check_row_sums().unwrap();
    }

    #[test]
    fn helper_rows() {
        let (_, b) = nr45_with_helper(5);
        let want: Vec<Vec<BigInt>> = [
            &[1][..],
            &[0, 1],
            &[1, 0, 1],
            &[3, 2, 0, 1],
            &[13, 7, 3, 0, 1],
        ]
        .iter()
        .map(|r| ints(r))
        .collect();
        assert_eq!(&b[1..], &want[..]);
    }
}
