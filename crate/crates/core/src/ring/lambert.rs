use super::{Coeff, QSeries, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Integer coefficients of `q^shift / prod (1 - q^m)^p` up to `q^order`.
///
/// Each denominator factor is a strided prefix sum, so no multiplication is
/// involved.
pub fn expand_lambert(shift: u32, denoms: &[(u32, u32)], order: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); order + 1];
    let shift = shift as usize;
    if shift > order {
        return c;
    }
    c[shift] = BigInt::from(1);
    for &(m, p) in denoms {
        assert!(m > 0, "denominator 1 - q^0 is not invertible");
        let m = m as usize;
        for _ in 0..p {
            for k in (shift + m)..=order {
                let (lo, hi) = c.split_at_mut(k);
                hi[0] += &lo[k - m];
            }
        }
    }
    c
}

/// `scale * q^a / (1 - q^m)^p` truncated at `order`. Panics if `m == 0`.
pub fn lambert_term(a: u32, m: u32, p: u32, scale: &Rational, order: usize) -> QSeries<Rational> {
    let denoms = if p == 0 { vec![] } else { vec![(m, p)] };
    QSeries::from_coeffs(
        expand_lambert(a, &denoms, order).into_iter().map(|n| Rational::from_integer(n) * scale).collect(),
    )
}

/// `(q;q)_inf^c` truncated at `order`, any integer `c`.
pub fn euler_pow(c: i64, order: usize) -> QSeries<Rational> {
    let mut v = vec![BigInt::zero(); order + 1];
    v[0] = BigInt::from(1);
    let reps = c.unsigned_abs();
    for i in 1..=order {
        for _ in 0..reps {
            if c > 0 {
                for k in (i..=order).rev() {
                    let (lo, hi) = v.split_at_mut(k);
                    hi[0] -= &lo[k - i];
                }
            } else {
                for k in i..=order {
                    let (lo, hi) = v.split_at_mut(k);
                    hi[0] += &lo[k - i];
                }
            }
        }
    }
    QSeries::from_coeffs(v.into_iter().map(Rational::from_integer).collect())
}

/// `q^shift / prod (1 - q^m)^p` kept symbolic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LambertMonomial {
    pub shift: u32,
    denoms: Vec<(u32, u32)>,
}

impl LambertMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(shift: u32, denoms: &[(u32, u32)]) -> Self {
        let mut m = LambertMonomial { shift, denoms: Vec::new() };
        for &(d, p) in denoms {
            m.push_denom(d, p);
        }
        m
    }

    pub fn denoms(&self) -> &[(u32, u32)] {
        &self.denoms
    }

    fn push_denom(&mut self, m: u32, p: u32) {
        if p == 0 {
            return;
        }
        match self.denoms.binary_search_by_key(&m, |&(d, _)| d) {
            Ok(i) => self.denoms[i].1 += p,
            Err(i) => self.denoms.insert(i, (m, p)),
        }
    }

    pub fn mul(&self, other: &LambertMonomial) -> LambertMonomial {
        let mut out = self.clone();
        out.shift += other.shift;
        for &(d, p) in &other.denoms {
            out.push_denom(d, p);
        }
        out
    }

    pub fn expand(&self, order: usize) -> Vec<BigInt> {
        expand_lambert(self.shift, &self.denoms, order)
    }
}

/// Finite linear combination of [`LambertMonomial`]s, dropping every
/// monomial whose shift exceeds `cutoff`.
#[derive(Clone, Debug, PartialEq)]
pub struct LambertSum<C> {
    cutoff: usize,
    terms: BTreeMap<LambertMonomial, C>,
}

impl<C: Coeff> LambertSum<C> {
    pub fn zero(cutoff: usize) -> Self {
        LambertSum { cutoff, terms: BTreeMap::new() }
    }

    pub fn constant(c: C, cutoff: usize) -> Self {
        let mut s = Self::zero(cutoff);
        s.add_term(LambertMonomial::one(), c);
        s
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LambertMonomial, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: LambertMonomial, c: C) {
        if m.shift as usize > self.cutoff || c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                v.add_assign_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_sum(&mut self, other: &LambertSum<C>) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self * coef * mono`.
    pub fn mul_monomial(&self, mono: &LambertMonomial, coef: &C) -> Self {
        let mut out = Self::zero(self.cutoff);
        if mono.shift as usize > self.cutoff {
            return out;
        }
        for (m, c) in &self.terms {
            out.add_term(m.mul(mono), c.mul_ref(coef));
        }
        out
    }

    pub fn mul_coeff(&self, coef: &C) -> Self {
        self.mul_monomial(&LambertMonomial::one(), coef)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero(self.cutoff);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.scale(r));
        }
        out
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LambertSum<D> {
        let mut out = LambertSum::zero(self.cutoff);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn to_series(&self, order: usize) -> QSeries<C> {
        let mut out = QSeries::zero(order);
        for (m, c) in &self.terms {
            for (k, n) in m.expand(order).into_iter().enumerate() {
                if !n.is_zero() {
                    out.add_to_coeff(k, &c.scale(&Rational::from_integer(n)));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    fn partition_counts(n: usize) -> Vec<i64> {
        // p(k) by the usual coin-change recursion
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for part in 1..=n {
            for k in part..=n {
                p[k] += p[k - part];
            }
        }
        p
    }

    #[test]
    fn euler_inverse_counts_partitions() {
        let e = euler_pow(-1, 30);
        let p = partition_counts(30);
        for (k, &pk) in p.iter().enumerate() {
            assert_eq!(e.coeff(k), int(pk), "p({k})");
        }
        assert_eq!(&euler_pow(3, 20) * &euler_pow(-3, 20), QSeries::one(20));
        assert_eq!(euler_pow(0, 5), QSeries::one(5));
    }

    #[test]
    fn pentagonal_numbers() {
        let e = euler_pow(1, 16);
        let want = [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1, 0];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(e.coeff(k), int(*w));
        }
    }

    #[test]
    fn lambert_term_binomials() {
        // q^2/(1-q^3)^2 = q^2 + 2q^5 + 3q^8 + ...
        let t = lambert_term(2, 3, 2, &rat(1, 2), 9);
        assert_eq!(t.coeff(2), rat(1, 2));
        assert_eq!(t.coeff(5), int(1));
        assert_eq!(t.coeff(8), rat(3, 2));
        assert_eq!(t.coeff(9), int(0));
        assert!(lambert_term(12, 1, 1, &int(1), 10).is_zero());
    }

    #[test]
    fn symbolic_sum_expands_like_series_product() {
        let m = LambertMonomial::new(1, &[(1, 1), (2, 1)]);
        let mut s = LambertSum::<Rational>::zero(12);
        s.add_term(m.clone(), int(3));
        let direct = &(&lambert_term(1, 1, 1, &int(3), 12) * &lambert_term(0, 2, 1, &int(1), 12)) + &QSeries::zero(12);
        assert_eq!(s.to_series(12), direct);
        let doubled = s.mul_monomial(&LambertMonomial::new(0, &[(1, 1)]), &int(1));
        assert_eq!(doubled.terms().next().unwrap().0.denoms(), &[(1, 2), (2, 1)]);
    }
}
