use super::algebra::{ScalarFock, TraceAlgebra};
use super::engine::TraceEngine;
use super::op::{DecoratedOp, OpSum};
use super::surface::{CohClass, SurfaceModel};
use super::FockError;
use crate::ring::{LambertMonomial, LambertSum, MPoly, QSeries, Rational};
use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// One operator after the vertex expansion: a Lambert weight times a grouped
/// operator. Terms with equal parts and weight are merged by adding classes.
type Dressed<C> = Vec<(LambertMonomial, DecoratedOp<C>)>;

fn collect<A: TraceAlgebra>(alg: &A, items: Vec<(LambertMonomial, Vec<i32>, A::Class)>) -> Dressed<A::Class> {
    let mut map: BTreeMap<(LambertMonomial, Vec<i32>), A::Class> = BTreeMap::new();
    for (mono, parts, class) in items {
        let key = (mono, parts);
        let merged = match map.remove(&key) {
            Some(c) => alg.add(&c, &class),
            None => class,
        };
        map.insert(key, merged);
    }
    map.into_iter()
        .filter(|(_, c)| !alg.is_zero(c))
        .map(|((mono, parts), class)| (mono, DecoratedOp::new(parts, class).expect("nonzero parts")))
        .collect()
}

/// Splits `a_lambda(alpha)` into the absorbed sub-partition `mu` and the
/// remaining operator `a_{lambda - mu}`. The callback turns `mu` into a
/// scalar weight and a class twist; the returned operator carries
/// `alpha lambda^! / (lambda - mu)^!` times the callback output.
fn dress<A, F>(alg: &A, factor: &OpSum<A::Class>, weight: F) -> Dressed<A::Class>
where
    A: TraceAlgebra,
    F: Fn(&super::partition::GenPartition, &A::Class) -> (Rational, A::Class),
{
    let mut items = Vec::new();
    for raw in factor.ops() {
        for op in super::op::normal_order(alg, &raw).ops() {
            let lambda = op.partition();
            let norm = alg.scale(&op.class, &Rational::from_integer(lambda.factorial()));
            for mu in lambda.sub_partitions() {
                let rest = lambda.checked_sub(&mu).expect("sub-partition");
                let shift: i64 = mu.multiplicities().filter(|(n, _)| *n > 0).map(|(n, k)| n as i64 * k as i64).sum();
                let denoms: Vec<(u32, u32)> = mu.multiplicities().map(|(n, k)| (n.unsigned_abs(), k)).collect();
                let mono = LambertMonomial::new(shift as u32, &denoms);
                let (w, twisted) = weight(&mu, &norm);
                let denom = mu.factorial() * rest.factorial();
                let class = alg.scale(&twisted, &(w / Rational::from_integer(denom)));
                items.push((mono, rest.ordered_parts(), class));
            }
        }
    }
    collect(alg, items)
}

fn homogeneous_weight<C>(factors: &[OpSum<C>]) -> Result<(), FockError>
where
    C: Clone,
{
    let mut total = 0i64;
    for f in factors {
        let mut w: Option<i64> = None;
        for op in f.ops() {
            match w {
                None => w = Some(op.weight()),
                Some(x) if x != op.weight() => return Err(FockError::ZExponent(x.max(op.weight()))),
                _ => {}
            }
        }
        total += w.unwrap_or(0);
    }
    if total != 0 {
        return Err(FockError::ZExponent(total));
    }
    Ok(())
}

/// `sum over choices prod weights * Tr q^n prod inner operators`, reduced.
fn dressed_trace<A: TraceAlgebra>(engine: &TraceEngine<'_, A>, factors: &[Dressed<A::Class>]) -> LambertSum<A::Value> {
    let order = engine.order();
    if factors.is_empty() {
        return LambertSum::constant(A::Value::one(), order);
    }
    fn go<A: TraceAlgebra>(
        engine: &TraceEngine<'_, A>,
        factors: &[Dressed<A::Class>],
        mono: &LambertMonomial,
        ops: &mut Vec<DecoratedOp<A::Class>>,
        weight: i64,
        out: &mut LambertSum<A::Value>,
    ) {
        let order = engine.order();
        let Some((first, rest)) = factors.split_first() else {
            if weight == 0 {
                let t = engine.trace_within(ops, order - mono.shift as usize);
                for (m, c) in t.terms() {
                    out.add_term(m.mul(mono), c.clone());
                }
            }
            return;
        };
        for (m, op) in first {
            let next = mono.mul(m);
            if next.shift as usize > order {
                continue;
            }
            ops.push(op.clone());
            go(engine, rest, &next, ops, weight + op.weight(), out);
            ops.pop();
        }
    }
    let (first, rest) = factors.split_first().unwrap();
    first
        .par_iter()
        .map(|(m, op)| {
            let mut out = LambertSum::zero(order);
            if m.shift as usize <= order {
                let mut ops = vec![op.clone()];
                go(engine, rest, m, &mut ops, op.weight(), &mut out);
            }
            out
        })
        .reduce(
            || LambertSum::zero(order),
            |mut a, b| {
                a.add_sum(&b);
                a
            },
        )
}

/// Reduced `Tr q^n W(L_1, z) prod_i factors[i]` for formal sums of grouped
/// operators, at `z^0`.
pub fn vertex_trace_sums(
    surface: &SurfaceModel,
    factors: &[OpSum<CohClass>],
    order: usize,
) -> Result<QSeries<MPoly>, FockError> {
    homogeneous_weight(factors)?;
    let one_minus_k = surface.one().sub(&surface.k());
    let dressed: Vec<_> = factors
        .iter()
        .map(|f| {
            dress(surface, f, |mu, class| {
                let p = mu.multiplicities().filter(|(n, _)| *n > 0).map(|(_, k)| k).sum::<u32>();
                let sign = if p % 2 == 0 { Rational::one() } else { -Rational::one() };
                (sign, surface.mul(&surface.pow(&one_minus_k, p), class))
            })
        })
        .collect();
    let engine = TraceEngine::new(surface, order);
    Ok(dressed_trace(&engine, &dressed).to_series(order))
}

/// [`vertex_trace_sums`] for a word of single grouped operators.
pub fn vertex_trace(
    surface: &SurfaceModel,
    word: &[DecoratedOp<CohClass>],
    order: usize,
) -> Result<QSeries<MPoly>, FockError> {
    let factors: Vec<OpSum<CohClass>> = word
        .iter()
        .map(|op| {
            let mut s = OpSum::default();
            s.push(surface, op.clone());
            s
        })
        .collect();
    vertex_trace_sums(surface, &factors, order)
}

/// Reduced `Tr q^n Gamma_-(z)^m Gamma_+(z)^{-m} prod_i factors[i]` on the
/// scalar Fock space, divided by its value on the empty word.
pub fn gamma_trace(m: i64, factors: &[OpSum<Rational>], order: usize) -> Result<QSeries<Rational>, FockError> {
    homogeneous_weight(factors)?;
    let alg = ScalarFock;
    let dressed: Vec<_> = factors
        .iter()
        .map(|f| {
            dress(&alg, f, |mu, class| {
                let neg = mu.multiplicities().filter(|(n, _)| *n < 0).map(|(_, k)| k).sum::<u32>();
                let sign: i64 = if neg % 2 == 0 { 1 } else { -1 };
                let w = Rational::from_integer(BigInt::from(m).pow(mu.len()) * sign);
                (w, class.clone())
            })
        })
        .collect();
    let engine = TraceEngine::new(&alg, order);
    Ok(dressed_trace(&engine, &dressed).to_series(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, lambert_term, Coeff};

    #[test]
    fn single_operator_matches_closed_form() {
        // a_{(-1,1)}(alpha) with alpha = 1_X + L1: <1-K, alpha> (-q/(1-q)^2) + <e, alpha> (-q/(1-q))
        let s = SurfaceModel::standard(false);
        let alpha = s.one().add(&s.divisor("L1").unwrap());
        let op = DecoratedOp::new(vec![-1, 1], alpha.clone()).unwrap();
        let got = vertex_trace(&s, &[op], 10).unwrap();
        let a = s.pair(&s.one().sub(&s.k()), &alpha);
        let b = s.pair(&s.euler(), &alpha);
        let t1 = lambert_term(1, 1, 2, &int(-1), 10).map(|c| a.scale(c));
        let t2 = lambert_term(1, 1, 1, &int(-1), 10).map(|c| b.scale(c));
        assert_eq!(got, &t1 + &t2);
    }

    #[test]
    fn empty_word_is_one() {
        let s = SurfaceModel::standard(false);
        assert_eq!(vertex_trace(&s, &[], 5).unwrap(), QSeries::one(5));
        assert_eq!(gamma_trace(3, &[], 5).unwrap(), QSeries::one(5));
    }

    #[test]
    fn z_imbalance_is_an_error() {
        let s = SurfaceModel::standard(false);
        let op = DecoratedOp::new(vec![-2], s.k()).unwrap();
        assert_eq!(vertex_trace(&s, &[op], 5), Err(FockError::ZExponent(-2)));
    }
}
