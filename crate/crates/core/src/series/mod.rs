//! Exact truncated power series in `x` over `Z[q, t]`.

mod qpoly;
mod truncated;

pub use qpoly::QPoly;
pub use truncated::TruncatedSeries;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 12;

/// `F(x) = sum n! x^n`.
pub fn factorial_series(order: usize) -> TruncatedSeries {
    let mut f = BigInt::one();
    TruncatedSeries::new(
        order,
        (0..=order).map(|n| {
            if n > 0 {
                f *= n;
            }
            QPoly::from(f.clone())
        }),
    )
}

/// Rows of the Eulerian triangle `A(n, d)`, the number of `n`-permutations with `d` descents.
pub fn eulerian_rows(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let get = |d: usize| prev.get(d).cloned().unwrap_or_default();
        let row = (0..n)
            .map(|d| {
                let mut v = get(d) * (d + 1);
                if d > 0 {
                    v += get(d - 1) * (n - d);
                }
                v
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `F(x, t) = sum A_n(t) x^n` with `A_n` the Eulerian polynomials.
pub fn eulerian_series(order: usize) -> TruncatedSeries {
    TruncatedSeries::new(
        order,
        eulerian_rows(order).into_iter().map(QPoly::from_t_coeffs),
    )
}

/// Evaluates `1/(1 - (r0 x + s0 x y)/(1 - (r1 x + s1 x y)/(1 - ...)))` modulo `x^(order+1)`.
///
/// The variable `y` is carried in the `q` slot of the coefficients. Level `k`
/// first contributes at `x^k`, so `order + 1` terms of each sequence are used.
pub fn delta_cf_series(r: &[i64], s: &[i64], order: usize) -> Result<TruncatedSeries> {
    let need = order + 1;
    if r.len() < need || s.len() < need {
        return Err(Error::InvalidInput(format!(
            "continued fraction to order {order} needs {need} terms of r and s, got {} and {}",
            r.len(),
            s.len()
        )));
    }
    let one = TruncatedSeries::one(order);
    let mut tail = one.clone();
    for lvl in (0..need).rev() {
        let step = QPoly::from_q_coeffs([r[lvl], s[lvl]]);
        let num = TruncatedSeries::monomial(order, step, 1);
        tail = one.sub(&num.mul(&tail)?)?.reciprocal()?;
    }
    Ok(tail)
}

/// Coefficients of `prod_{i=1}^{n-1} (x + i)` in ascending powers of `x`.
pub fn rising_product_coeffs(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::one()];
    for i in 1..n {
        let mut next = vec![BigInt::zero(); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            next[k] += c * i;
            next[k + 1] += c;
        }
        p = next;
    }
    p
}
