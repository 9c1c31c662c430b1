use super::{fmt_rational, Coeff, MPoly, Rational, RingError, SymbolTable};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Truncated power series `c0 + c1 q + ... + cN q^N + O(q^(N+1))`.
///
/// Binary operations on series of different orders truncate to the smaller
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> QSeries<C> {
    pub fn zero(order: usize) -> Self {
        QSeries { coeffs: vec![C::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c q^k`, or zero when `k > order`.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Series whose order is `coeffs.len() - 1`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        QSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `q^k`; zero beyond the order.
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn set_coeff(&mut self, k: usize, c: C) {
        if k < self.coeffs.len() {
            self.coeffs[k] = c;
        }
    }

    pub fn add_to_coeff(&mut self, k: usize, c: &C) {
        if let Some(x) = self.coeffs.get_mut(k) {
            x.add_assign_ref(c);
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<C> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, C::zero());
        QSeries { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|c| c.scale(r))
    }

    pub fn mul_coeff(&self, k: &C) -> Self {
        self.map(|c| c.mul_ref(k))
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> QSeries<D> {
        QSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// `q d/dq`.
    pub fn q_derivative(&self) -> Self {
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale(&Rational::from_integer(BigInt::from(k))))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        if other.order() < self.order() {
            self.coeffs.truncate(other.coeffs.len());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_assign_ref(b);
        }
    }

    /// Renders with a custom coefficient printer.
    pub fn display_with(&self, f: impl Fn(&C) -> String) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = f(c);
            let qk = match k {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{k}"),
            };
            parts.push(match (k, body.as_str()) {
                (0, _) => body,
                (_, "1") => qk,
                _ if body.contains(' ') => format!("({body})*{qk}"),
                _ => format!("{body}*{qk}"),
            });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        format!("{} + O(q^{})", parts.join(" + "), self.order() + 1)
    }
}

impl QSeries<Rational> {
    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self, RingError> {
        let c0 = &self.coeffs[0];
        if Zero::is_zero(c0) {
            return Err(RingError::NotInvertible);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut s = Rational::from_integer(0.into());
            for j in 1..=k {
                if !Zero::is_zero(&self.coeffs[j]) {
                    s += &self.coeffs[j] * &out[k - j];
                }
            }
            out.push(-s * &inv0);
        }
        Ok(QSeries { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self, RingError> {
        Ok(self * &other.inverse()?)
    }

    pub fn to_mpoly(&self) -> QSeries<MPoly> {
        self.map(|c| MPoly::constant(c.clone()))
    }

    pub fn display(&self) -> String {
        self.display_with(|c| {
            let s = fmt_rational(c);
            if c.is_negative() {
                format!("({s})")
            } else {
                s
            }
        })
    }
}

impl QSeries<MPoly> {
    pub fn display(&self, table: &SymbolTable) -> String {
        self.display_with(|c| c.display(table))
    }
}

impl<'a, C: Coeff> Add<&'a QSeries<C>> for &'a QSeries<C> {
    type Output = QSeries<C>;
    fn add(self, rhs: &QSeries<C>) -> QSeries<C> {
        let n = self.order().min(rhs.order());
        QSeries { coeffs: (0..=n).map(|k| self.coeffs[k].add_ref(&rhs.coeffs[k])).collect() }
    }
}

impl<'a, C: Coeff> Sub<&'a QSeries<C>> for &'a QSeries<C> {
    type Output = QSeries<C>;
    fn sub(self, rhs: &QSeries<C>) -> QSeries<C> {
        let n = self.order().min(rhs.order());
        QSeries { coeffs: (0..=n).map(|k| self.coeffs[k].sub_ref(&rhs.coeffs[k])).collect() }
    }
}

impl<'a, C: Coeff> Mul<&'a QSeries<C>> for &'a QSeries<C> {
    type Output = QSeries<C>;
    fn mul(self, rhs: &QSeries<C>) -> QSeries<C> {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j].add_assign_ref(&a.mul_ref(b));
                }
            }
        }
        QSeries { coeffs }
    }
}

impl<C: Coeff> Neg for &QSeries<C> {
    type Output = QSeries<C>;
    fn neg(self) -> QSeries<C> {
        self.map(|c| c.neg_ref())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr<QSeries<C>> for QSeries<C> {
            type Output = QSeries<C>;
            fn $m(self, rhs: QSeries<C>) -> QSeries<C> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, C: Coeff> $tr<&'a QSeries<C>> for QSeries<C> {
            type Output = QSeries<C>;
            fn $m(self, rhs: &QSeries<C>) -> QSeries<C> {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> Neg for QSeries<C> {
    type Output = QSeries<C>;
    fn neg(self) -> QSeries<C> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    fn s(v: &[i64]) -> QSeries<Rational> {
        QSeries::from_coeffs(v.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = s(&[1, 1, 1, 1, 1]);
        let b = s(&[1, -1]);
        assert_eq!(&a * &b, s(&[1, 0]));
        assert_eq!((&a + &b).order(), 1);
    }

    #[test]
    fn inverse_of_one_minus_q() {
        let inv = s(&[1, -1, 0, 0, 0]).inverse().unwrap();
        assert_eq!(inv, s(&[1, 1, 1, 1, 1]));
        assert_eq!(s(&[0, 1]).inverse(), Err(RingError::NotInvertible));
    }

    #[test]
    fn q_derivative_and_display() {
        let a = QSeries::from_coeffs(vec![int(5), rat(1, 2), int(-3)]);
        assert_eq!(a.q_derivative(), QSeries::from_coeffs(vec![int(0), rat(1, 2), int(-6)]));
        assert_eq!(a.display(), "5 + 1/2*q + (-3)*q^2 + O(q^3)");
    }
}
