//! Generating-function distributions `F(x, q) = sum_n sum_pi q^{p(pi)} x^n`.

use super::check_order;
use crate::error::{Error, Result};
use crate::series::{delta_cf_series, eulerian_series, factorial_series, QPoly, TruncatedSeries};

/// Pattern numbers whose distribution comes from a generating function.
pub const GF_NRS: [u32; 12] = [16, 17, 27, 28, 30, 33, 34, 55, 56, 63, 64, 65];

fn one_minus_q() -> QPoly {
    QPoly::from_q_coeffs([1, -1])
}

/// `F / (1 + x (1 - q) F)` for an arbitrary base series `F`.
fn sfp_shape(f: &TruncatedSeries) -> Result<TruncatedSeries> {
    let n = f.order();
    let den = TruncatedSeries::one(n).add(&f.shift(1).scale(&one_minus_q()))?;
    f.div(&den)
}

/// Distribution of strong fixed points: `F(x) / (1 + x (1 - q) F(x))`.
pub fn dist_strong_fixed_points(order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    sfp_shape(&factorial_series(order))
}

/// Permutations without strong fixed points: `A(x) = F(x) / (1 + x F(x))`.
pub fn sfp_avoiders_series(order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    let f = factorial_series(order);
    f.div(&TruncatedSeries::one(order).add(&f.shift(1))?)
}

/// Non-inversions: coefficient of `x^n` is `prod_{i=1}^{n} (1 + q + ... + q^{i-1})`.
pub fn dist_inversions(order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    let mut acc = QPoly::one();
    let mut coeffs = vec![acc.clone()];
    for i in 1..=order {
        acc = &acc * &QPoly::from_q_coeffs(vec![1; i]);
        coeffs.push(acc.clone());
    }
    Ok(TruncatedSeries::new(order, coeffs))
}

/// Joint distribution of strong fixed points (`q`) and descents (`t`):
/// `F(x, t) / (1 + x (1 - q) F(x, t))` with `F(x, t)` the Eulerian series.
pub fn dist_joint_sfp_des(order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    sfp_shape(&eulerian_series(order))
}

/// Continued-fraction triangle for Nr. 3 with `r = (1,0,2,1,3,2,...)` and `s = (0,1,0,1,...)`.
///
/// The coefficient of `x^n q^k` is the conjectured number of `n`-permutations
/// with `k` occurrences.
pub fn dist_conjecture_nr3(order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    let len = order + 1;
    let r: Vec<i64> = (0..len as i64)
        .map(|i| if i % 2 == 0 { i / 2 + 1 } else { i / 2 })
        .collect();
    let s: Vec<i64> = (0..len as i64).map(|i| i % 2).collect();
    delta_cf_series(&r, &s, order)
}

/// `F(x, q)` for the patterns in [`GF_NRS`].
pub fn dist_gf(nr: u32, order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    let n = order;
    let one = TruncatedSeries::one(n);
    let f = factorial_series(n);
    let omq = one_minus_q();
    let x = TruncatedSeries::x(n);
    let s = match nr {
        16 => {
            // sum_i q^C(i,2) x^i prod_{j=0}^{i} A(q^j x)
            let a = sfp_avoiders_series(n)?;
            let mut total = TruncatedSeries::zero(n);
            let mut prod = one.clone();
            for i in 0..=n {
                prod = prod.mul(&a.substitute_x_scale(i))?;
                let term = prod
                    .shift(i)
                    .scale(&QPoly::monomial(1, i * i.saturating_sub(1) / 2, 0));
                total = total.add(&term)?;
            }
            total
        }
        17 => {
            // (1 - x + x / (1 + x (1-q) F)) F
            let den = one.add(&f.shift(1).scale(&omq))?;
            one.sub(&x)?.add(&x.div(&den)?)?.mul(&f)?
        }
        27 => {
            // F - (1-q) x^2 F^3 / (1 + x (1-q) F)
            let den = one.add(&f.shift(1).scale(&omq))?;
            let num = f.pow(3).shift(2).scale(&omq);
            f.sub(&num.div(&den)?)?
        }
        28 => {
            // F / (1 + x^2 (1-q) F^2)
            f.div(&one.add(&f.pow(2).shift(2).scale(&omq))?)?
        }
        30 => {
            // (1 + x - qx) F / (1 + (1-q) x + (1-q) x^2 F)
            let lin = one.add(&x.scale(&omq))?;
            lin.mul(&f)?.div(&lin.add(&f.shift(2).scale(&omq))?)?
        }
        33 => {
            // sum_i q^C(i,2) x^i A^{i+1}
            let a = sfp_avoiders_series(n)?;
            let mut total = TruncatedSeries::zero(n);
            let mut pow = a.clone();
            for i in 0..=n {
                let term = pow
                    .shift(i)
                    .scale(&QPoly::monomial(1, i * i.saturating_sub(1) / 2, 0));
                total = total.add(&term)?;
                pow = pow.mul(&a)?;
            }
            total
        }
        34 => {
            // F / (1 + (1-q) x^2 F)
            f.div(&one.add(&f.shift(2).scale(&omq))?)?
        }
        55 | 56 => {
            // F / (1 + (1-q) x (F - 1))
            f.div(&one.add(&f.sub(&one)?.shift(1).scale(&omq))?)?
        }
        63..=65 => {
            // ((2-q) F + q - 1) / ((1-q) F + q)
            let q = TruncatedSeries::constant(n, QPoly::q());
            let num = f.scale(&QPoly::from_q_coeffs([2, -1])).add(&q)?.sub(&one)?;
            let den = f.scale(&omq).add(&q)?;
            num.div(&den)?
        }
        _ => {
            return Err(Error::InvalidInput(format!(
                "pattern nr={nr} has no generating-function formula"
            )))
        }
    };
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn strong_fixed_points() {
        let a = sfp_avoiders_series(4).unwrap();
        assert_eq!(a, TruncatedSeries::from_ints(4, [1, 0, 1, 3, 14]));
        let s = dist_strong_fixed_points(3).unwrap();
        assert_eq!(s.coeff(3).q_coeffs(), ints(&[3, 2, 0, 1]));
        assert_eq!(s.eval_q_one(), factorial_series(3));
    }

    #[test]
    fn inversions() {
        let s = dist_inversions(3).unwrap();
        assert_eq!(s.coeff(3).q_coeffs(), ints(&[1, 2, 2, 1]));
        assert!(s.coeff(0).is_one() && s.coeff(1).is_one());
    }

    #[test]
    fn component_patterns() {
        let a = dist_gf(63, 4).unwrap();
        let avoid: Vec<BigInt> = (0..=4).map(|n| a.coeff(n).q_coeff(0)).collect();
        assert_eq!(avoid, ints(&[1, 1, 1, 3, 13]));
        assert_eq!(
            dist_gf(64, 3).unwrap().coeff(3).q_coeffs(),
            ints(&[3, 2, 1])
        );
        assert_eq!(dist_gf(63, 12).unwrap(), dist_gf(65, 12).unwrap());
        assert!(dist_gf(8, 3).is_err());
    }

    #[test]
    fn joint_low_order() {
        let j = dist_joint_sfp_des(4).unwrap();
        assert_eq!(j.coeff(2), &QPoly::monomial(1, 2, 0) + &QPoly::t());
        assert_eq!(j.eval_t_one(), dist_strong_fixed_points(4).unwrap());
        assert_eq!(j.eval_t_one().eval_q_one(), factorial_series(4));
    }

    #[test]
    fn conjecture_triangle_head() {
        let c = dist_conjecture_nr3(4).unwrap();
        assert_eq!(c.coeff(3).q_coeffs(), ints(&[1, 4, 1]));
        assert_eq!(c.coeff(4).q_coeffs(), ints(&[1, 13, 9, 1]));
        assert_eq!(dist_conjecture_nr3(0).unwrap(), TruncatedSeries::one(0));
    }

    #[test]
    fn q_one_gives_factorials() {
        for nr in GF_NRS {
            assert_eq!(
                dist_gf(nr, 9).unwrap().eval_q_one(),
                factorial_series(9),
                "nr {nr}"
            );
        }
    }
}
