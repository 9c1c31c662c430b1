use super::{fmt_rational, Coeff, Rational, RingError};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul};

/// Ordered list of symbol names. Variable `i` of an [`MPoly`] is `names[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymbolTable {
    names: Vec<String>,
}

impl SymbolTable {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        SymbolTable { names: names.iter().map(|s| s.as_ref().to_string()).collect() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Index of `name`, appending it when absent.
    pub fn intern(&mut self, name: &str) -> usize {
        match self.index_of(name) {
            Some(i) => i,
            None => {
                self.names.push(name.to_string());
                self.names.len() - 1
            }
        }
    }
}

/// Sparse exponent vector: `(variable, exponent)` pairs, variables strictly
/// increasing, exponents nonzero.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of variable 0, variable 1, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(u16, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        Monomial(vec![(i as u16, 1)])
    }

    pub fn from_dense(exps: &[u32]) -> Self {
        Monomial(exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i as u16, e)).collect())
    }

    pub fn to_dense(&self, arity: usize) -> Vec<u32> {
        let mut v = vec![0; arity.max(self.max_var().map_or(0, |m| m + 1))];
        for &(i, e) in &self.0 {
            v[i as usize] = e;
        }
        v
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0.iter().find(|(i, _)| *i as usize == var).map_or(0, |&(_, e)| e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn max_var(&self) -> Option<usize> {
        self.0.last().map(|&(i, _)| i as usize)
    }

    pub fn factors(&self) -> &[(u16, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Removes `var`, returning its exponent.
    pub fn without(&self, var: usize) -> (Monomial, u32) {
        let e = self.exponent(var);
        let rest = self.0.iter().copied().filter(|(i, _)| *i as usize != var).collect();
        (Monomial(rest), e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            let mut i = 0;
            loop {
                match (a.get(i), b.get(i)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => {
                        if va != vb {
                            // the one that has the earlier variable is larger
                            return vb.cmp(&va);
                        }
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                    }
                }
                i += 1;
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn constant(r: Rational) -> Self {
        let mut p = MPoly::default();
        p.add_term(Monomial::one(), r);
        p
    }

    pub fn var(i: usize) -> Self {
        let mut p = MPoly::default();
        p.add_term(Monomial::var(i), Rational::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = MPoly::default();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant coefficient, if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Substitutes `var := value`.
    pub fn substitute(&self, var: usize, value: &Rational) -> MPoly {
        let mut out = MPoly::default();
        for (m, c) in &self.terms {
            let (rest, e) = m.without(var);
            let mut f = c.clone();
            for _ in 0..e {
                f *= value;
            }
            out.add_term(rest, f);
        }
        out
    }

    /// Exact value under `assignment`, which must cover every symbol that
    /// occurs.
    pub fn eval(&self, table: &SymbolTable, assignment: &BTreeMap<String, Rational>) -> Result<Rational, RingError> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                let name = table.name(v as usize);
                let x = assignment.get(name).ok_or_else(|| RingError::MissingSymbol(name.to_string()))?;
                t *= x.pow(e as i32);
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn display(&self, table: &SymbolTable) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let vars: Vec<String> = m
                .factors()
                .iter()
                .map(|&(i, e)| {
                    let n =
                        if (i as usize) < table.len() { table.name(i as usize).to_string() } else { format!("x{i}") };
                    if e == 1 {
                        n
                    } else {
                        format!("{n}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                s.push_str(&fmt_rational(&a));
            } else if a.is_one() {
                s.push_str(&vars.join("*"));
            } else {
                s.push_str(&format!("{}*{}", fmt_rational(&a), vars.join("*")));
            }
        }
        s
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(Rational::one())
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        self.mul_ref(&rhs)
    }
}

impl Coeff for MPoly {
    fn add_ref(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign_ref(other);
        r
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = MPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return MPoly::default();
        }
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect() }
    }
    fn from_rational(r: Rational) -> Self {
        MPoly::constant(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    #[test]
    fn graded_lex_order() {
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        assert!(x > y);
        assert!(y.mul(&y) > x);
        assert!(x.mul(&x) > x.mul(&y));
        assert!(Monomial::one() < y);
        assert_eq!(Monomial::from_dense(&[0, 2, 1]).to_dense(3), vec![0, 2, 1]);
    }

    #[test]
    fn arithmetic_and_substitution() {
        let x = MPoly::var(0);
        let y = MPoly::var(1);
        let p = x.add_ref(&y).mul_ref(&x.sub_ref(&y));
        let q = x.mul_ref(&x).sub_ref(&y.mul_ref(&y));
        assert_eq!(p, q);
        assert!(p.sub_ref(&q).is_zero());
        let at = q.substitute(0, &int(3));
        assert_eq!(at, MPoly::constant(int(9)).sub_ref(&y.mul_ref(&y)));
        assert_eq!(MPoly::constant(rat(1, 2)).as_constant(), Some(rat(1, 2)));
    }

    #[test]
    fn display_uses_names() {
        let t = SymbolTable::new(&["chi", "K2"]);
        let p = MPoly::var(0).scale(&rat(5, 4)).sub_ref(&MPoly::var(1));
        assert_eq!(p.display(&t), "5/4*chi - K2");
    }
}
