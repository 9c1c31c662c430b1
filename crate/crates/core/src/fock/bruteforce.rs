use super::partition::partitions_bounded;
use crate::ring::{QSeries, Rational};
use num_traits::{FromPrimitive, Num};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::AddAssign;

/// Vector in the scalar Fock space in the monomial basis
/// `prod a_{-m} |0>`, keyed by the weakly decreasing list of parts.
pub type FockVector<T> = BTreeMap<Vec<u32>, T>;

fn add_into<T: Num + Clone + AddAssign>(v: &mut FockVector<T>, key: Vec<u32>, c: T) {
    if c.is_zero() {
        return;
    }
    match v.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Applies `a_n` with `[a_m, a_n] = m delta_{m,-n}`.
pub fn apply<T: Num + Clone + AddAssign + FromPrimitive>(n: i32, v: &FockVector<T>) -> FockVector<T> {
    let mut out = FockVector::new();
    for (parts, c) in v {
        if n < 0 {
            let m = n.unsigned_abs();
            let mut p = parts.clone();
            let at = p.iter().position(|&x| x < m).unwrap_or(p.len());
            p.insert(at, m);
            add_into(&mut out, p, c.clone());
        } else if n > 0 {
            let m = n as u32;
            let mult = parts.iter().filter(|&&x| x == m).count();
            if mult == 0 {
                continue;
            }
            let mut p = parts.clone();
            let at = p.iter().position(|&x| x == m).unwrap();
            p.remove(at);
            let f = T::from_u64(m as u64 * mult as u64).unwrap();
            add_into(&mut out, p, c.clone() * f);
        }
    }
    out
}

/// Applies `word[0] word[1] ... word[k-1]` to `v`, rightmost first.
pub fn apply_word<T: Num + Clone + AddAssign + FromPrimitive>(word: &[i32], v: &FockVector<T>) -> FockVector<T> {
    word.iter().rev().fold(v.clone(), |acc, &n| apply(n, &acc))
}

/// Unreduced `Tr q^n a_{w_1} ... a_{w_k}` on the scalar Fock space by summing
/// diagonal matrix entries over all partitions of size at most `order`.
pub fn fock_trace_bruteforce(word: &[i32], order: usize) -> QSeries<Rational> {
    let mut coeffs = vec![Rational::from_integer(0.into()); order + 1];
    if word.iter().map(|&n| n as i64).sum::<i64>() != 0 || word.contains(&0) {
        return QSeries::from_coeffs(coeffs);
    }
    for (size, c) in coeffs.iter_mut().enumerate() {
        let mut total: i128 = 0;
        for lambda in partitions_bounded(size as u32, usize::MAX) {
            let v: FockVector<i128> = [(lambda.clone(), 1i128)].into_iter().collect();
            total += apply_word(word, &v).get(&lambda).copied().unwrap_or(0);
        }
        *c = Rational::from_integer(total.into());
    }
    QSeries::from_coeffs(coeffs)
}

/// Coefficient of `z^{-b}` (`plus`) or `z^b` in `Gamma_{+-}(c, z)` as a list
/// of (word, coefficient), using `a_{-n}(c) = c a_{-n}`, `a_n(c) = -c a_n`.
fn gamma_coefficient(plus: bool, c: i64, b: u32) -> Vec<(Vec<i32>, Rational)> {
    let mut out = Vec::new();
    for nu in partitions_bounded(b, usize::MAX) {
        let mut coef = Rational::from_integer(1.into());
        let mut mults: BTreeMap<u32, u32> = BTreeMap::new();
        for &n in &nu {
            *mults.entry(n).or_insert(0) += 1;
        }
        for (&n, &k) in &mults {
            let base = if plus { -c } else { c };
            for j in 1..=k {
                coef *= Rational::new(base.into(), (n as i64 * j as i64).into());
            }
        }
        let word = nu.iter().map(|&n| if plus { n as i32 } else { -(n as i32) }).collect();
        out.push((word, coef));
    }
    out
}

/// Unreduced `Tr q^n Gamma_-(z)^m Gamma_+(z)^{-m} prod factors` at `z^0`
/// computed on basis states of size at most `order`. Each factor is a list of
/// (word, coefficient).
pub fn gamma_trace_bruteforce(m: i64, factors: &[Vec<(Vec<i32>, Rational)>], order: usize) -> QSeries<Rational> {
    let mut coeffs = vec![Rational::from_integer(0.into()); order + 1];
    let plus: Vec<_> = (0..=order as u32).map(|a| gamma_coefficient(true, m, a)).collect();
    let minus: Vec<_> = (0..=order as u32).map(|a| gamma_coefficient(false, m, a)).collect();
    for (size, c) in coeffs.iter_mut().enumerate() {
        for lambda in partitions_bounded(size as u32, usize::MAX) {
            let v: FockVector<Rational> = [(lambda.clone(), Rational::from_integer(1.into()))].into_iter().collect();
            let x = factors.iter().rev().fold(v, |acc, f| apply_combination(f, &acc));
            for a in 0..=size {
                let y = apply_combination(&minus[a], &apply_combination(&plus[a], &x));
                if let Some(d) = y.get(&lambda) {
                    *c += d;
                }
            }
        }
    }
    QSeries::from_coeffs(coeffs)
}

fn apply_combination(terms: &[(Vec<i32>, Rational)], v: &FockVector<Rational>) -> FockVector<Rational> {
    let mut out = FockVector::new();
    for (w, c) in terms {
        for (k, x) in apply_word(w, v) {
            add_into(&mut out, k, x * c);
        }
    }
    out
}

fn binom_signed(k: i64, j: u32) -> Rational {
    let mut r = Rational::from_integer(1.into());
    for i in 0..j as i64 {
        r *= Rational::new((k - i).into(), (i + 1).into());
    }
    r
}

/// Checks `Gamma_+(c, x) Gamma_-(c', y) = (1 - y/x)^{c c'} Gamma_-(c', y) Gamma_+(c, x)`
/// together with the commutativity of `Gamma_-` with `Gamma_-` and of
/// `Gamma_+` with `Gamma_+`, coefficientwise for `x^{-a} y^b`, `a, b <= window`,
/// on every basis state of size at most `order`.
pub fn gamma_commutation_check(c: i64, c_prime: i64, window: u32, order: usize) -> bool {
    let k = c * c_prime;
    let plus: Vec<_> = (0..=window).map(|a| gamma_coefficient(true, c, a)).collect();
    let minus: Vec<_> = (0..=window).map(|b| gamma_coefficient(false, c_prime, b)).collect();
    let minus_c: Vec<_> = (0..=window).map(|b| gamma_coefficient(false, c, b)).collect();
    let plus_c: Vec<_> = (0..=window).map(|b| gamma_coefficient(true, c_prime, b)).collect();
    for size in 0..=order as u32 {
        for lambda in partitions_bounded(size, usize::MAX) {
            let v: FockVector<Rational> = [(lambda, Rational::from_integer(1.into()))].into_iter().collect();
            for a in 0..=window as usize {
                for b in 0..=window as usize {
                    let lhs = apply_combination(&plus[a], &apply_combination(&minus[b], &v));
                    let mut rhs = FockVector::new();
                    for j in 0..=a.min(b) {
                        let f =
                            binom_signed(k, j as u32) * Rational::from_integer(if j % 2 == 0 { 1 } else { -1 }.into());
                        if f == Rational::from_integer(0.into()) {
                            continue;
                        }
                        let t = apply_combination(&minus[b - j], &apply_combination(&plus[a - j], &v));
                        for (key, x) in t {
                            add_into(&mut rhs, key, x * &f);
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                    let mm1 = apply_combination(&minus_c[a], &apply_combination(&minus[b], &v));
                    let mm2 = apply_combination(&minus[b], &apply_combination(&minus_c[a], &v));
                    let pp1 = apply_combination(&plus[a], &apply_combination(&plus_c[b], &v));
                    let pp2 = apply_combination(&plus_c[b], &apply_combination(&plus[a], &v));
                    if mm1 != mm2 || pp1 != pp2 {
                        return false;
                    }
                }
            }
        }
    }
    true
}
