use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Polynomial in `q` and `t` with exact integer coefficients.
///
/// `c[i][j]` is the coefficient of `q^i t^j`. Every inner row and the outer
/// vector carry no trailing zeros, so the zero polynomial is `c = []`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QPoly {
    #[serde(with = "crate::json::matrix")]
    c: Vec<Vec<BigInt>>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigInt::one())
    }

    pub fn constant(v: impl Into<BigInt>) -> Self {
        QPoly::from_rows(vec![vec![v.into()]])
    }

    /// `c * q^i * t^j`.
    pub fn monomial(c: impl Into<BigInt>, i: usize, j: usize) -> Self {
        let mut rows = vec![Vec::new(); i + 1];
        rows[i] = vec![BigInt::zero(); j + 1];
        rows[i][j] = c.into();
        QPoly::from_rows(rows)
    }

    pub fn q() -> Self {
        QPoly::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        QPoly::monomial(1, 0, 1)
    }

    /// Univariate polynomial in `q` from ascending coefficients.
    pub fn from_q_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        QPoly::from_rows(coeffs.into_iter().map(|v| vec![v.into()]).collect())
    }

    /// Univariate polynomial in `t` from ascending coefficients.
    pub fn from_t_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        QPoly::from_rows(vec![coeffs.into_iter().map(Into::into).collect()])
    }

    /// Builds from a `[q power][t power]` matrix, trimming trailing zeros.
    pub fn from_rows(mut c: Vec<Vec<BigInt>>) -> Self {
        for row in &mut c {
            while row.last().is_some_and(Zero::is_zero) {
                row.pop();
            }
        }
        while c.last().is_some_and(Vec::is_empty) {
            c.pop();
        }
        QPoly { c }
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].len() == 1 && self.c[0][0].is_one()
    }

    /// True when the polynomial is `1` or `-1`, the units of `Z[q, t]`.
    pub fn is_unit(&self) -> bool {
        self.c.len() == 1 && self.c[0].len() == 1 && self.c[0][0].abs().is_one()
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.c
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_default()
    }

    /// Coefficient of `q^i` when the polynomial does not involve `t`.
    pub fn q_coeff(&self, i: usize) -> BigInt {
        self.coeff(i, 0)
    }

    /// Degree in `q`, or `None` for the zero polynomial.
    pub fn deg_q(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg_t(&self) -> Option<usize> {
        self.c
            .iter()
            .map(Vec::len)
            .max()
            .and_then(|l| l.checked_sub(1))
    }

    pub fn has_t(&self) -> bool {
        self.c.iter().any(|r| r.len() > 1)
    }

    /// Ascending `q` coefficients after setting `t = 1`.
    pub fn q_coeffs(&self) -> Vec<BigInt> {
        self.c.iter().map(|r| r.iter().sum()).collect()
    }

    /// Ascending `t` coefficients after setting `q = 1`.
    pub fn t_coeffs(&self) -> Vec<BigInt> {
        let len = self.c.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = vec![BigInt::zero(); len];
        for row in &self.c {
            for (j, v) in row.iter().enumerate() {
                out[j] += v;
            }
        }
        out
    }

    pub fn eval_q_one(&self) -> QPoly {
        QPoly::from_t_coeffs(self.t_coeffs())
    }

    pub fn eval_t_one(&self) -> QPoly {
        QPoly::from_q_coeffs(self.q_coeffs())
    }

    /// Value at `q = 1, t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.c.iter().flatten().sum()
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![Vec::new(); k];
        c.extend(self.c.iter().cloned());
        QPoly { c }
    }

    pub fn scale(&self, s: &BigInt) -> QPoly {
        QPoly::from_rows(
            self.c
                .iter()
                .map(|r| r.iter().map(|v| v * s).collect())
                .collect(),
        )
    }

    fn zip_with(&self, other: &QPoly, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> QPoly {
        let zero = BigInt::zero();
        let rows = self.c.len().max(other.c.len());
        let empty = Vec::new();
        let c = (0..rows)
            .map(|i| {
                let a = self.c.get(i).unwrap_or(&empty);
                let b = other.c.get(i).unwrap_or(&empty);
                (0..a.len().max(b.len()))
                    .map(|j| f(a.get(j).unwrap_or(&zero), b.get(j).unwrap_or(&zero)))
                    .collect()
            })
            .collect();
        QPoly::from_rows(c)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            c: self
                .c
                .iter()
                .map(|r| r.iter().map(|v| -v).collect())
                .collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let tw = self.deg_t().unwrap_or(0) + rhs.deg_t().unwrap_or(0) + 1;
        let mut c = vec![vec![BigInt::zero(); tw]; self.c.len() + rhs.c.len() - 1];
        for (i1, r1) in self.c.iter().enumerate() {
            for (j1, a) in r1.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (i2, r2) in rhs.c.iter().enumerate() {
                    let row = &mut c[i1 + i2];
                    for (j2, b) in r2.iter().enumerate() {
                        if !b.is_zero() {
                            row[j1 + j2] += a * b;
                        }
                    }
                }
            }
        }
        QPoly::from_rows(c)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for QPoly {
    fn from(v: i64) -> Self {
        QPoly::constant(v)
    }
}

impl From<BigInt> for QPoly {
    fn from(v: BigInt) -> Self {
        QPoly::constant(v)
    }
}

impl fmt::Display for QPoly {
    /// Ascending powers, e.g. `3 + 2*q + q^2*t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, row) in self.c.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let mono = monomial_name(i, j);
                let (neg, mag) = (v.is_negative(), v.abs());
                if first {
                    if neg {
                        f.write_str("-")?;
                    }
                } else {
                    f.write_str(if neg { " - " } else { " + " })?;
                }
                first = false;
                match (mono.is_empty(), mag.is_one()) {
                    (true, _) => write!(f, "{mag}")?,
                    (false, true) => f.write_str(&mono)?,
                    (false, false) => write!(f, "{mag}*{mono}")?,
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn monomial_name(i: usize, j: usize) -> String {
    let var = |name: &str, p: usize| match p {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{p}"),
    };
    match (var("q", i), var("t", j)) {
        (a, b) if a.is_empty() => b,
        (a, b) if b.is_empty() => a,
        (a, b) => format!("{a}*{b}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trimming_and_zero() {
        let p = QPoly::from_q_coeffs([1, 0, 0]);
        assert_eq!(p, QPoly::one());
        assert!(QPoly::from_q_coeffs([0, 0]).is_zero());
        assert_eq!((&QPoly::q() - &QPoly::q()), QPoly::zero());
    }

    #[test]
    fn multiplication() {
        let a = &QPoly::one() + &QPoly::q();
        let sq = &a * &a;
        assert_eq!(sq, QPoly::from_q_coeffs([1, 2, 1]));
        let qt = &QPoly::q() * &QPoly::t();
        assert_eq!(qt.coeff(1, 1), BigInt::from(1));
        assert_eq!(qt.eval_one(), BigInt::from(1));
    }

    #[test]
    fn display() {
        assert_eq!(QPoly::from_q_coeffs([3, 2, 1]).to_string(), "3 + 2*q + q^2");
        assert_eq!(QPoly::from_q_coeffs([0, -1]).to_string(), "-q");
        assert_eq!((&QPoly::q() * &QPoly::t()).to_string(), "q*t");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from_q_coeffs([1, -2]).to_string(), "1 - 2*q");
    }
}
