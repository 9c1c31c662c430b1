//! q-analogues of multiple zeta values: bracket series, Okounkov's Z,
//! Eisenstein series and a generic evaluator for nested Lambert-type sums.

mod catalog;
mod nested;

pub use catalog::{builtin_sums, sum_by_name, SUM_NAMES};
pub use nested::{eval_components, Constraint, IndexPoly, LinearForm, NestedSum, SumTerm};

use crate::ring::{int, Coeff, QSeries, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QZetaError {
    #[error("Okounkov index must be ≥ 2 (got {0})")]
    OkounkovIndex(u32),
    #[error("bracket index must be ≥ 1 (got {0})")]
    BracketIndex(u32),
    #[error("Eisenstein weight must be even and ≥ 2 (got {0})")]
    EisensteinWeight(u32),
    #[error("nested sum does not terminate: index {index} of term {term} is unbounded")]
    Unbounded { term: usize, index: usize },
    #[error("malformed nested sum: {0}")]
    Malformed(String),
    #[error("unknown named sum {0:?}")]
    UnknownSum(String),
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

/// Coefficients (index = power of t) of `t P_{s-1}(t)`, where
/// `t P_{s-1}(t) / (1-t)^s = sum_d d^(s-1) t^d`.
pub fn eulerian(s: u32) -> Vec<BigInt> {
    let s = s as usize;
    // sum_{d=1}^{s} d^(s-1) t^d, then multiply by (1-t)^s and keep degree <= s
    let mut c: Vec<BigInt> =
        (0..=s).map(|d| if d == 0 { BigInt::zero() } else { BigInt::from(d).pow(s as u32 - 1) }).collect();
    for _ in 0..s {
        for k in (1..=s).rev() {
            let prev = c[k - 1].clone();
            c[k] -= prev;
        }
    }
    while c.len() > 1 && c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

/// `Q^E_s(t) = t P_{s-1}(t) / (s-1)!`, the numerators of bracket series.
pub fn bracket_numerator(s: u32) -> Result<Vec<Rational>, QZetaError> {
    if s == 0 {
        return Err(QZetaError::BracketIndex(s));
    }
    let f = Rational::from_integer(factorial(s - 1));
    Ok(eulerian(s).into_iter().map(|c| Rational::from_integer(c) / &f).collect())
}

/// Okounkov's numerators: `t^(s/2)` for even `s`, `t^((s-1)/2)(1+t)` for odd.
pub fn okounkov_numerator(s: u32) -> Result<Vec<Rational>, QZetaError> {
    if s < 2 {
        return Err(QZetaError::OkounkovIndex(s));
    }
    let h = (s / 2) as usize;
    let mut v = vec![Rational::zero(); h + 1 + (s % 2) as usize];
    if s.is_multiple_of(2) {
        v[h] = One::one();
    } else {
        v[h] = One::one();
        v[h + 1] = One::one();
    }
    Ok(v)
}

/// `sum_{n1 > ... > nl >= 1} prod_i Q_{s_i}(q^{n_i}) / (1 - q^{n_i})^{s_i}`.
///
/// `numerators[i]` is the coefficient list of `Q_{s_i}`; an empty index gives 1.
pub fn nested_chain(numerators: &[(Vec<Rational>, u32)], order: usize) -> QSeries<Rational> {
    if numerators.is_empty() {
        return QSeries::one(order);
    }
    let factor = |(poly, s): &(Vec<Rational>, u32), n: usize| -> QSeries<Rational> {
        let mut acc = QSeries::zero(order);
        for (k, c) in poly.iter().enumerate() {
            if !c.is_zero() && k * n <= order {
                acc.add_assign_ref(&crate::ring::lambert_term((k * n) as u32, n as u32, *s, c, order));
            }
        }
        acc
    };
    // tail[n] = sum over chains of the last j indices with largest index <= n
    let l = numerators.len();
    let mut tail: Vec<QSeries<Rational>> = vec![QSeries::one(order); order + 1];
    for (j, spec) in numerators.iter().enumerate().rev() {
        let depth_below = l - 1 - j;
        let mut next = vec![QSeries::zero(order); order + 1];
        let mut running = QSeries::zero(order);
        for n in 1..=order {
            if n > depth_below {
                let f = factor(spec, n);
                if !f.is_zero() {
                    let below = if j + 1 == l { QSeries::one(order) } else { tail[n - 1].clone() };
                    running.add_assign_ref(&(&f * &below));
                }
            }
            next[n] = running.clone();
        }
        tail = next;
    }
    tail[order].clone()
}

/// Bracket series `[s1, ..., sl]`.
pub fn bracket(index: &[u32], order: usize) -> Result<QSeries<Rational>, QZetaError> {
    let nums = index.iter().map(|&s| Ok((bracket_numerator(s)?, s))).collect::<Result<Vec<_>, QZetaError>>()?;
    Ok(nested_chain(&nums, order))
}

/// Okounkov's `Z(s1, ..., sl)`.
pub fn okounkov_z(index: &[u32], order: usize) -> Result<QSeries<Rational>, QZetaError> {
    let nums = index.iter().map(|&s| Ok((okounkov_numerator(s)?, s))).collect::<Result<Vec<_>, QZetaError>>()?;
    Ok(nested_chain(&nums, order))
}

/// Bernoulli numbers `B_0..=B_n` from `t/(e^t - 1)`, so `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Vec<Rational> {
    let g = QSeries::from_coeffs((0..=n).map(|k| Rational::from_integer(factorial(k as u32 + 1)).recip()).collect());
    let inv = g.inverse().expect("constant term is 1");
    (0..=n).map(|k| inv.coeff(k) * Rational::from_integer(factorial(k as u32))).collect()
}

pub fn divisor_sigma(k: u32, n: usize) -> BigInt {
    (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| BigInt::from(d).pow(k)).sum()
}

/// `G_w = (1/(w-1)!) (-B_w/(2w) + sum_n sigma_{w-1}(n) q^n)` for even `w >= 2`.
pub fn eisenstein(weight: u32, order: usize) -> Result<QSeries<Rational>, QZetaError> {
    if weight < 2 || weight % 2 == 1 {
        return Err(QZetaError::EisensteinWeight(weight));
    }
    let f = Rational::from_integer(factorial(weight - 1));
    let b = bernoulli(weight as usize)[weight as usize].clone();
    let mut c = vec![-b / int(2 * weight as i64) / &f];
    for n in 1..=order {
        c.push(Rational::from_integer(divisor_sigma(weight - 1, n)) / &f);
    }
    Ok(QSeries::from_coeffs(c))
}

/// `Z(index)` as a series in any coefficient ring.
pub fn okounkov_z_in<C: Coeff>(index: &[u32], order: usize) -> Result<QSeries<C>, QZetaError> {
    Ok(okounkov_z(index, order)?.map(|c| C::from_rational(c.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn ints(s: &QSeries<Rational>) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn eulerian_polynomials() {
        let v = |s| eulerian(s).into_iter().map(|c| c.try_into().unwrap()).collect::<Vec<i64>>();
        assert_eq!(v(1), vec![0, 1]);
        assert_eq!(v(2), vec![0, 1]);
        assert_eq!(v(3), vec![0, 1, 1]);
        assert_eq!(v(4), vec![0, 1, 4, 1]);
        assert_eq!(v(5), vec![0, 1, 11, 11, 1]);
    }

    #[test]
    fn okounkov_z2_is_sigma1() {
        let z2 = okounkov_z(&[2], 7).unwrap();
        assert_eq!(ints(&z2), vec![0, 1, 3, 4, 7, 6, 12, 8]);
        assert_eq!(okounkov_z(&[1], 5), Err(QZetaError::OkounkovIndex(1)));
        assert_eq!(okounkov_z(&[], 3).unwrap(), QSeries::one(3));
    }

    #[test]
    fn z4_and_z6_low_terms() {
        assert_eq!(ints(&okounkov_z(&[4], 7).unwrap()), vec![0, 0, 1, 4, 11, 20, 40, 56]);
        assert_eq!(ints(&okounkov_z(&[6], 7).unwrap()), vec![0, 0, 0, 1, 6, 21, 57, 126]);
    }

    #[test]
    fn bernoulli_convention() {
        let b = bernoulli(8);
        assert_eq!(b[0], int(1));
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], int(0));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[6], rat(1, 42));
        assert_eq!(b[8], rat(-1, 30));
    }

    #[test]
    fn eisenstein_constants() {
        assert_eq!(eisenstein(2, 3).unwrap().coeff(0), rat(-1, 24));
        assert_eq!(eisenstein(4, 3).unwrap().coeff(0), rat(1, 1440));
        assert_eq!(eisenstein(6, 3).unwrap().coeff(0), rat(-1, 60480));
        assert_eq!(eisenstein(4, 3).unwrap().coeff(2), rat(9, 6));
        assert!(eisenstein(3, 3).is_err());
    }

    #[test]
    fn single_bracket_is_divisor_sum() {
        // [s] = (1/(s-1)!) sum_d d^(s-1) q^d/(1-q^d)
        for s in 1..=5u32 {
            let b = bracket(&[s], 15).unwrap();
            for n in 1..=15usize {
                let want = Rational::from_integer(divisor_sigma(s - 1, n)) / Rational::from_integer(factorial(s - 1));
                assert_eq!(b.coeff(n), want, "[{s}] at q^{n}");
            }
        }
        assert_eq!(bracket(&[0], 3), Err(QZetaError::BracketIndex(0)));
    }
}
