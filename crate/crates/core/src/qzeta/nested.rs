use super::QZetaError;
use crate::ring::{expand_lambert, QSeries, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `sum_i c_i n_i` with nonnegative integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm(pub Vec<u32>);

impl LinearForm {
    pub fn eval(&self, n: &[u64]) -> u64 {
        self.0.iter().zip(n).map(|(&c, &x)| c as u64 * x).sum()
    }
}

/// Polynomial in the summation indices with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IndexPoly(pub Vec<(Rational, Vec<u32>)>);

impl IndexPoly {
    pub fn constant(c: Rational) -> Self {
        IndexPoly(vec![(c, vec![])])
    }

    pub fn eval(&self, n: &[u64]) -> Rational {
        self.0
            .iter()
            .map(|(c, e)| {
                let m: BigInt = e.iter().zip(n).map(|(&p, &x)| BigInt::from(x).pow(p)).product();
                c * Rational::from_integer(m)
            })
            .sum()
    }

    fn common_denominator(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |a, (c, _)| a.lcm(c.denom()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// every index ranges over `1..`
    Free,
    /// `n_0 > n_1 > ... > n_{k-1} >= 1`
    Chain,
    /// `sum_{lhs} n_i = sum_{rhs} n_j`
    Equal { lhs: Vec<usize>, rhs: Vec<usize> },
}

/// `coeff(n) q^{numer(n)} / prod_j (1 - q^{form_j(n)})^{p_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumTerm {
    pub coeff: IndexPoly,
    pub numer: LinearForm,
    pub denoms: Vec<(LinearForm, u32)>,
}

/// `scale * sum_{n in constraint} sum_t term_t(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedSum {
    pub arity: usize,
    pub constraint: Constraint,
    pub terms: Vec<SumTerm>,
    pub scale: Rational,
}

impl NestedSum {
    fn validate(&self) -> Result<(), QZetaError> {
        let k = self.arity;
        for t in &self.terms {
            if t.numer.0.len() != k || t.denoms.iter().any(|(f, _)| f.0.len() != k) {
                return Err(QZetaError::Malformed("linear form arity mismatch".into()));
            }
            if t.denoms.iter().any(|(f, _)| f.0.iter().all(|&c| c == 0)) {
                return Err(QZetaError::Malformed("denominator form vanishes identically".into()));
            }
            if t.coeff.0.iter().any(|(_, e)| e.len() > k) {
                return Err(QZetaError::Malformed("coefficient polynomial arity mismatch".into()));
            }
        }
        if let Constraint::Equal { lhs, rhs } = &self.constraint {
            if lhs.iter().chain(rhs).any(|&i| i >= k) {
                return Err(QZetaError::Malformed("equality constraint names a missing index".into()));
            }
        }
        Ok(())
    }

    /// Upper bound for each index of term `t` at truncation `order`, or the
    /// first index that no bound reaches.
    fn bounds(&self, t: usize, order: u64) -> Result<Vec<u64>, QZetaError> {
        let k = self.arity;
        let numer = &self.terms[t].numer.0;
        let mut ub: Vec<Option<u64>> = numer.iter().map(|&c| (c > 0).then(|| order / c as u64)).collect();
        loop {
            let mut changed = false;
            let mut tighten = |i: usize, b: u64, ub: &mut Vec<Option<u64>>| {
                if ub[i].is_none_or(|x| b < x) {
                    ub[i] = Some(b);
                    changed = true;
                }
            };
            match &self.constraint {
                Constraint::Free => {}
                Constraint::Chain => {
                    for i in 1..k {
                        if let Some(b) = ub[i - 1] {
                            tighten(i, b.saturating_sub(1), &mut ub);
                        }
                    }
                }
                Constraint::Equal { lhs, rhs } => {
                    for (a, b) in [(lhs, rhs), (rhs, lhs)] {
                        let other: Option<u64> = b.iter().map(|&j| ub[j]).sum();
                        if let Some(s) = other {
                            for &i in a {
                                tighten(i, s, &mut ub);
                            }
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        ub.into_iter().enumerate().map(|(index, b)| b.ok_or(QZetaError::Unbounded { term: t, index })).collect()
    }

    /// Checks that every term has finitely many contributions below any order.
    pub fn check_termination(&self) -> Result<(), QZetaError> {
        self.validate()?;
        for t in 0..self.terms.len() {
            self.bounds(t, 1)?;
        }
        Ok(())
    }

    pub fn eval(&self, order: usize) -> Result<QSeries<Rational>, QZetaError> {
        self.check_termination()?;
        let mut total = QSeries::zero(order);
        for (ti, term) in self.terms.iter().enumerate() {
            let ub = self.bounds(ti, order as u64)?;
            let den = term.coeff.common_denominator();
            let denr = Rational::from_integer(den.clone());
            let mut acc = vec![BigInt::zero(); order + 1];
            let mut n = vec![0u64; self.arity];
            self.walk(term, &ub, order as u64, 0, &mut n, &mut |n: &[u64]| {
                let c = term.coeff.eval(n) * &denr;
                if c.is_zero() {
                    return;
                }
                let c = c.to_integer();
                let denoms: Vec<(u32, u32)> = term.denoms.iter().map(|(f, p)| (f.eval(n) as u32, *p)).collect();
                for (k, x) in expand_lambert(term.numer.eval(n) as u32, &denoms, order).into_iter().enumerate() {
                    if !x.is_zero() {
                        acc[k] += &c * x;
                    }
                }
            });
            let part = QSeries::from_coeffs(acc.into_iter().map(|x| Rational::new(x, den.clone())).collect());
            total.add_assign_ref(&part);
        }
        Ok(total.scale(&self.scale))
    }

    fn walk(&self, term: &SumTerm, ub: &[u64], order: u64, i: usize, n: &mut Vec<u64>, f: &mut dyn FnMut(&[u64])) {
        let k = self.arity;
        if i == k {
            if let Constraint::Equal { lhs, rhs } = &self.constraint {
                let s = |v: &Vec<usize>| v.iter().map(|&j| n[j]).sum::<u64>();
                if s(lhs) != s(rhs) {
                    return;
                }
            }
            f(n);
            return;
        }
        let hi = match self.constraint {
            Constraint::Chain if i > 0 => ub[i].min(n[i - 1] - 1),
            _ => ub[i],
        };
        let lo = match self.constraint {
            Constraint::Chain => (k - i) as u64,
            _ => 1,
        };
        for x in lo..=hi {
            n[i] = x;
            // remaining indices contribute at least their minimal values
            let least: u64 = (0..k)
                .map(|j| {
                    let v = if j <= i {
                        n[j]
                    } else if self.constraint == Constraint::Chain {
                        (k - j) as u64
                    } else {
                        1
                    };
                    term.numer.0[j] as u64 * v
                })
                .sum();
            if least > order {
                break;
            }
            self.walk(term, ub, order, i + 1, n, f);
        }
        n[i] = 0;
    }
}

/// Sum of several nested sums.
pub fn eval_components(parts: &[NestedSum], order: usize) -> Result<QSeries<Rational>, QZetaError> {
    let mut total = QSeries::zero(order);
    for p in parts {
        total.add_assign_ref(&p.eval(order)?);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn geometric(numer: Vec<u32>) -> NestedSum {
        NestedSum {
            arity: 1,
            constraint: Constraint::Free,
            terms: vec![SumTerm {
                coeff: IndexPoly::constant(int(1)),
                numer: LinearForm(numer),
                denoms: vec![(LinearForm(vec![1]), 1)],
            }],
            scale: int(1),
        }
    }

    #[test]
    fn divisor_counting() {
        // sum_n q^n/(1-q^n) = sum d(k) q^k
        let s = geometric(vec![1]).eval(10).unwrap();
        let d = [0, 1, 2, 2, 3, 2, 4, 2, 4, 3, 4];
        for (k, &dk) in d.iter().enumerate() {
            assert_eq!(s.coeff(k), int(dk));
        }
    }

    #[test]
    fn unbounded_index_is_rejected() {
        assert_eq!(geometric(vec![0]).eval(5), Err(QZetaError::Unbounded { term: 0, index: 0 }));
        let free2 = NestedSum {
            arity: 2,
            constraint: Constraint::Free,
            terms: vec![SumTerm {
                coeff: IndexPoly::constant(int(1)),
                numer: LinearForm(vec![1, 0]),
                denoms: vec![(LinearForm(vec![1, 1]), 1)],
            }],
            scale: int(1),
        };
        assert_eq!(free2.check_termination(), Err(QZetaError::Unbounded { term: 0, index: 1 }));
        let chain = NestedSum { constraint: Constraint::Chain, ..free2.clone() };
        assert!(chain.check_termination().is_ok());
        let eq = NestedSum { constraint: Constraint::Equal { lhs: vec![0], rhs: vec![1] }, ..free2 };
        assert!(eq.check_termination().is_ok());
    }
}
