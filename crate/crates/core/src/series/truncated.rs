use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::QPoly;
use crate::error::{Error, Result};

/// Power series in `x` known exactly modulo `x^(order + 1)`, with
/// coefficients in `Z[q, t]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<QPoly>,
}

impl TruncatedSeries {
    /// Takes the first `order + 1` coefficients, padding with zeros.
    pub fn new(order: usize, coeffs: impl IntoIterator<Item = QPoly>) -> Self {
        let mut coeffs: Vec<QPoly> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, QPoly::zero());
        TruncatedSeries { order, coeffs }
    }

    /// Series with integer coefficients, e.g. `from_ints(2, [1, -1])` is `1 - x`.
    pub fn from_ints(order: usize, coeffs: impl IntoIterator<Item = i64>) -> Self {
        TruncatedSeries::new(order, coeffs.into_iter().map(QPoly::from))
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::new(order, [])
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::constant(order, QPoly::one())
    }

    pub fn constant(order: usize, c: QPoly) -> Self {
        TruncatedSeries::new(order, [c])
    }

    /// `c * x^k`.
    pub fn monomial(order: usize, c: QPoly, k: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn x(order: usize) -> Self {
        TruncatedSeries::monomial(order, QPoly::one(), 1)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    /// Coefficient of `x^n`; zero past the truncation order.
    pub fn coeff(&self, n: usize) -> QPoly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    fn map(&self, f: impl Fn(&QPoly) -> QPoly) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let n = self.order;
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(QPoly::zero(), |acc, i| {
                    let (a, b) = (&self.coeffs[i], &other.coeffs[k - i]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        &acc + &(a * b)
                    }
                })
            })
            .collect();
        Ok(TruncatedSeries { order: n, coeffs })
    }

    /// Multiplies every coefficient by the polynomial `c`.
    pub fn scale(&self, c: &QPoly) -> Self {
        self.map(|a| a * c)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = TruncatedSeries::one(self.order);
        for _ in 0..e {
            out = out.mul(self).expect("same order");
        }
        out
    }

    /// Multiplies by `x^k`, dropping terms beyond the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![QPoly::zero(); k.min(self.order + 1)];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries::new(self.order, coeffs)
    }

    /// Multiplicative inverse modulo `x^(order + 1)`; the constant term must be `1` or `-1`.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if !a0.is_unit() {
            return Err(Error::SingularSeries(a0.to_string()));
        }
        // a0 is its own inverse
        let mut r: Vec<QPoly> = Vec::with_capacity(self.order + 1);
        r.push(a0.clone());
        for n in 1..=self.order {
            let mut acc = QPoly::zero();
            for i in 1..=n {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc = &acc + &(a * &r[n - i]);
                }
            }
            r.push(-&(&acc * a0));
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: r,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        self.mul(&other.reciprocal()?)
    }

    /// `a(q^j x)`: the coefficient of `x^n` is multiplied by `q^(j n)`.
    pub fn substitute_x_scale(&self, j: usize) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.shift_q(j * n))
                .collect(),
        }
    }

    pub fn eval_q_one(&self) -> Self {
        self.map(QPoly::eval_q_one)
    }

    pub fn eval_t_one(&self) -> Self {
        self.map(QPoly::eval_t_one)
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order {
            return Err(Error::OrderMismatch(self.order, order));
        }
        Ok(TruncatedSeries::new(order, self.coeffs.iter().cloned()))
    }

    /// `[n][k]` matrix of `q^k` coefficients (after `t = 1`).
    pub fn q_matrix(&self) -> Vec<Vec<BigInt>> {
        self.coeffs.iter().map(QPoly::q_coeffs).collect()
    }

    /// JSON `[n][k]` matrix of `q^k` coefficients.
    pub fn to_json_matrix(&self) -> String {
        let m: Vec<Vec<serde_json::Number>> = self
            .q_matrix()
            .iter()
            .map(|r| r.iter().map(crate::json::to_number).collect())
            .collect();
        serde_json::to_string(&m).expect("serializable")
    }

    /// Checks that the coefficient of `x^n` has `q`-degree at most `C(n,2) + n`.
    pub fn check_degree_bound(&self) -> Result<()> {
        for (n, c) in self.coeffs.iter().enumerate() {
            let bound = n * (n.saturating_sub(1)) / 2 + n;
            if let Some(d) = c.deg_q() {
                if d > bound {
                    return Err(Error::InvalidInput(format!(
                        "coefficient of x^{n} has q-degree {d} above the bound {bound}"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for TruncatedSeries {
    /// `c0 + c1*x + c2*x^2 + ... + O(x^(N+1))`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let xs = match n {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{n}"),
            };
            let cs = c.to_string();
            let simple = !cs.contains(" + ") && !cs.contains(" - ");
            match (xs.is_empty(), c.is_one(), simple) {
                (true, _, _) => f.write_str(&cs)?,
                (false, true, _) => f.write_str(&xs)?,
                (false, false, true) => write!(f, "{cs}*{xs}")?,
                (false, false, false) => write!(f, "({cs})*{xs}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(order: usize, v: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_ints(order, v.iter().copied())
    }

    #[test]
    fn ring_examples() {
        let a = ints(4, &[1, 1]);
        let b = ints(4, &[1, -1]);
        assert_eq!(a.mul(&b).unwrap(), ints(4, &[1, 0, -1]));
        let f = super::super::factorial_series(6);
        assert_eq!(f.mul(&TruncatedSeries::one(6)).unwrap(), f);
        let qx = TruncatedSeries::monomial(3, QPoly::q(), 1);
        let s = TruncatedSeries::one(3).add(&qx).unwrap().pow(2);
        assert_eq!(s.coeff(1), QPoly::monomial(2, 1, 0));
        assert_eq!(s.coeff(2), QPoly::monomial(1, 2, 0));
        assert!(a.add(&ints(3, &[1])).is_err());
    }

    #[test]
    fn reciprocal_examples() {
        let r = ints(5, &[1, -1]).reciprocal().unwrap();
        assert_eq!(r, ints(5, &[1, 1, 1, 1, 1, 1]));
        let f = super::super::factorial_series(4);
        assert_eq!(f.reciprocal().unwrap(), ints(4, &[1, -1, -1, -3, -13]));
        let one_xf = TruncatedSeries::one(4).add(&f.shift(1)).unwrap();
        assert_eq!(one_xf.reciprocal().unwrap(), ints(4, &[1, -1, 0, -1, -3]));
        assert!(matches!(
            ints(3, &[2, 1]).reciprocal(),
            Err(Error::SingularSeries(_))
        ));
        assert!(TruncatedSeries::x(3).reciprocal().is_err());
    }

    #[test]
    fn substitution_and_evaluation() {
        let f = super::super::factorial_series(4);
        assert_eq!(f.substitute_x_scale(1).coeff(2), QPoly::monomial(2, 2, 0));
        assert_eq!(f.substitute_x_scale(0), f);
        let s = ints(2, &[1, 1]).substitute_x_scale(3);
        assert_eq!(s.coeff(1), QPoly::monomial(1, 3, 0));
        let p = TruncatedSeries::new(
            2,
            [QPoly::one(), QPoly::zero(), QPoly::from_q_coeffs([0, 1, 1])],
        );
        assert_eq!(p.eval_q_one(), ints(2, &[1, 0, 2]));
        assert_eq!(f.eval_q_one(), f);
    }

    #[test]
    fn display() {
        let s = TruncatedSeries::new(
            3,
            [
                QPoly::one(),
                QPoly::from(2),
                QPoly::from_q_coeffs([3, 2, 1]),
            ],
        );
        assert_eq!(s.to_string(), "1 + 2*x + (3 + 2*q + q^2)*x^2 + O(x^4)");
        assert_eq!(TruncatedSeries::zero(1).to_string(), "0 + O(x^2)");
        assert_eq!(s.to_json_matrix(), "[[1],[2],[3,2,1],[]]");
        let back: TruncatedSeries =
            serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-5i64..=5, 0..4).prop_map(QPoly::from_q_coeffs)
    }

    fn arb_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec(arb_poly(), order + 1)
            .prop_map(move |c| TruncatedSeries::new(order, c))
    }

    fn arb_unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        (any::<bool>(), arb_series(order)).prop_map(|(neg, mut s)| {
            s.coeffs[0] = QPoly::from(if neg { -1 } else { 1 });
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(a in arb_series(6), b in arb_series(6), c in arb_series(6)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(a.add(&b).unwrap().sub(&b).unwrap(), a.clone());
        }

        #[test]
        fn reciprocal_inverts(a in arb_unit_series(10)) {
            prop_assert_eq!(a.mul(&a.reciprocal().unwrap()).unwrap(), TruncatedSeries::one(10));
        }
    }
}
