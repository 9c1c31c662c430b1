//! Named nested sums used by the trace identities.

use super::nested::{Constraint, IndexPoly, LinearForm, NestedSum, SumTerm};
use super::{eval_components, QZetaError};
use crate::ring::{int, rat, QSeries, Rational};
use std::collections::BTreeMap;

pub const SUM_NAMES: &[&str] =
    &["h11_0", "h11_2", "h11_4", "k2_s1", "k2_s2", "k2_s3", "brandenburg_lhs", "brandenburg_rhs", "l1l2_cubic"];

fn lf(v: &[u32]) -> LinearForm {
    LinearForm(v.to_vec())
}

fn poly(terms: &[(Rational, &[u32])]) -> IndexPoly {
    IndexPoly(terms.iter().map(|(c, e)| (c.clone(), e.to_vec())).collect())
}

/// One `SumTerm` per numerator monomial, sharing coefficient and denominators.
fn terms(coeff: IndexPoly, numers: &[&[u32]], denoms: &[(&[u32], u32)]) -> Vec<SumTerm> {
    numers
        .iter()
        .map(|n| SumTerm {
            coeff: coeff.clone(),
            numer: lf(n),
            denoms: denoms.iter().map(|(f, p)| (lf(f), *p)).collect(),
        })
        .collect()
}

fn sum(arity: usize, constraint: Constraint, scale: Rational, terms: Vec<SumTerm>) -> NestedSum {
    NestedSum { arity, constraint, terms, scale }
}

fn h11_0() -> Vec<NestedSum> {
    // ij(i+j) q^{i+j} / ((1-q^i)(1-q^j)(1-q^{i+j}))
    let c = poly(&[(int(1), &[2, 1]), (int(1), &[1, 2])]);
    vec![sum(2, Constraint::Free, int(1), terms(c, &[&[1, 1]], &[(&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 1)]))]
}

fn h11_2() -> Vec<NestedSum> {
    let a = poly(&[(int(1), &[1, 1]), (int(1), &[0, 2])]);
    let b = poly(&[(int(1), &[1, 1])]);
    vec![
        sum(2, Constraint::Free, int(-1), terms(a, &[&[1, 1], &[2, 1]], &[(&[1, 0], 2), (&[0, 1], 1), (&[1, 1], 1)])),
        sum(
            2,
            Constraint::Free,
            rat(-1, 2),
            terms(b, &[&[1, 1], &[2, 2]], &[(&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 2)]),
        ),
    ]
}

fn h11_4() -> Vec<NestedSum> {
    let ij = poly(&[(int(1), &[1]), (int(1), &[0, 1])]);
    let k = poly(&[(int(1), &[0, 0, 1])]);
    vec![
        sum(
            4,
            Constraint::Equal { lhs: vec![0, 1], rhs: vec![2, 3] },
            rat(1, 4),
            terms(
                ij.clone(),
                &[&[1, 1, 0, 0], &[2, 2, 0, 0]],
                &[(&[1, 0, 0, 0], 1), (&[0, 1, 0, 0], 1), (&[0, 0, 1, 0], 1), (&[0, 0, 0, 1], 1), (&[1, 1, 0, 0], 1)],
            ),
        ),
        sum(
            3,
            Constraint::Free,
            int(-1),
            terms(
                ij,
                &[&[1, 1, 1], &[2, 2, 1]],
                &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1), (&[1, 1, 0], 1), (&[1, 1, 1], 1)],
            ),
        ),
        sum(
            3,
            Constraint::Free,
            int(1),
            terms(
                k,
                &[&[1, 1, 1], &[1, 1, 2]],
                &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1), (&[1, 0, 1], 1), (&[0, 1, 1], 1)],
            ),
        ),
    ]
}

fn k2_s1() -> Vec<NestedSum> {
    // n > m: q^n(1+q^n)/(1-q^n)^3 (n - nm + m^2)/(1-q^m)
    let c = poly(&[(int(1), &[1]), (int(-1), &[1, 1]), (int(1), &[0, 2])]);
    vec![sum(2, Constraint::Chain, int(1), terms(c, &[&[1, 0], &[2, 0]], &[(&[1, 0], 3), (&[0, 1], 1)]))]
}

fn k2_s2() -> Vec<NestedSum> {
    // n > m > l: n q^n(1+q^n)/(1-q^n)^3 1/(1-q^m) 1/(1-q^l)
    let c = poly(&[(int(1), &[1])]);
    vec![sum(
        3,
        Constraint::Chain,
        int(1),
        terms(c, &[&[1, 0, 0], &[2, 0, 0]], &[(&[1, 0, 0], 3), (&[0, 1, 0], 1), (&[0, 0, 1], 1)]),
    )]
}

fn k2_s3() -> Vec<NestedSum> {
    // n > m > l: q^n/(1-q^n)^2 m q^m/(1-q^m)^2 1/(1-q^l)
    let c = poly(&[(int(1), &[0, 1])]);
    vec![sum(
        3,
        Constraint::Chain,
        int(1),
        terms(c, &[&[1, 1, 0]], &[(&[1, 0, 0], 2), (&[0, 1, 0], 2), (&[0, 0, 1], 1)]),
    )]
}

fn brandenburg_lhs() -> Vec<NestedSum> {
    let c = IndexPoly::constant(int(1));
    vec![sum(2, Constraint::Chain, int(1), terms(c, &[&[1, 0]], &[(&[1, 0], 2), (&[0, 1], 1)]))]
}

fn brandenburg_rhs() -> Vec<NestedSum> {
    let c = IndexPoly::constant(int(1));
    vec![sum(1, Constraint::Free, int(1), terms(c, &[&[2]], &[(&[1], 3)]))]
}

fn l1l2_cubic() -> Vec<NestedSum> {
    // n (q^{2n} + q^n)/(1-q^n)^3
    let c = poly(&[(int(1), &[1])]);
    vec![sum(1, Constraint::Free, int(1), terms(c, &[&[2], &[1]], &[(&[1], 3)]))]
}

pub fn builtin_sums() -> BTreeMap<&'static str, Vec<NestedSum>> {
    let mut m = BTreeMap::new();
    m.insert("h11_0", h11_0());
    m.insert("h11_2", h11_2());
    m.insert("h11_4", h11_4());
    m.insert("k2_s1", k2_s1());
    m.insert("k2_s2", k2_s2());
    m.insert("k2_s3", k2_s3());
    m.insert("brandenburg_lhs", brandenburg_lhs());
    m.insert("brandenburg_rhs", brandenburg_rhs());
    m.insert("l1l2_cubic", l1l2_cubic());
    m
}

pub fn sum_by_name(name: &str, order: usize) -> Result<QSeries<Rational>, QZetaError> {
    let cat = builtin_sums();
    let parts = cat.get(name).ok_or_else(|| QZetaError::UnknownSum(name.to_string()))?;
    eval_components(parts, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sums_terminate() {
        for (name, parts) in builtin_sums() {
            for p in parts {
                assert!(p.check_termination().is_ok(), "{name}");
            }
        }
        assert_eq!(builtin_sums().len(), SUM_NAMES.len());
    }

    #[test]
    fn h11_0_low_terms() {
        let h = sum_by_name("h11_0", 7).unwrap();
        let want = [0, 0, 2, 16, 60, 160, 360, 672];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(h.coeff(k), int(*w), "q^{k}");
        }
    }
}
