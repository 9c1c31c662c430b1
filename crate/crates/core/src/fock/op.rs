use super::algebra::TraceAlgebra;
use super::partition::GenPartition;
use super::FockError;
use crate::ring::Rational;
use std::collections::BTreeMap;

/// Grouped operator `a_{n_1} ... a_{n_k}(alpha)` with the factors in the
/// given order. Scalars, including `1/lambda^!`, live in the class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedOp<C> {
    parts: Vec<i32>,
    pub class: C,
}

impl<C> DecoratedOp<C> {
    pub fn new(parts: Vec<i32>, class: C) -> Result<Self, FockError> {
        if parts.contains(&0) {
            return Err(FockError::ZeroPart);
        }
        Ok(DecoratedOp { parts, class })
    }

    /// `a_lambda(alpha)` in the standard order.
    pub fn from_partition(lambda: &GenPartition, class: C) -> Self {
        DecoratedOp { parts: lambda.ordered_parts(), class }
    }

    /// `a_lambda(alpha) / lambda^!`.
    pub fn normalized<A: TraceAlgebra<Class = C>>(alg: &A, lambda: &GenPartition, class: &C) -> Self {
        let f = Rational::from_integer(lambda.factorial()).recip();
        DecoratedOp { parts: lambda.ordered_parts(), class: alg.scale(class, &f) }
    }

    pub fn parts(&self) -> &[i32] {
        &self.parts
    }

    pub fn partition(&self) -> GenPartition {
        GenPartition::from_parts(&self.parts).expect("parts are nonzero")
    }

    /// Signed size `|lambda|`.
    pub fn weight(&self) -> i64 {
        self.parts.iter().map(|&p| p as i64).sum()
    }

    pub fn is_standard_order(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] <= w[1] || (w[0] > 0) == (w[1] > 0))
    }
}

/// Formal linear combination of grouped operators. Operators with the same
/// ordered parts are merged by adding classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpSum<C> {
    terms: BTreeMap<Vec<i32>, C>,
}

impl<C: Clone> Default for OpSum<C> {
    fn default() -> Self {
        OpSum { terms: BTreeMap::new() }
    }
}

impl<C: Clone> OpSum<C> {
    pub fn push<A: TraceAlgebra<Class = C>>(&mut self, alg: &A, op: DecoratedOp<C>) {
        let merged = match self.terms.remove(&op.parts) {
            Some(c) => alg.add(&c, &op.class),
            None => op.class,
        };
        if !alg.is_zero(&merged) {
            self.terms.insert(op.parts, merged);
        }
    }

    pub fn extend<A: TraceAlgebra<Class = C>>(&mut self, alg: &A, other: OpSum<C>) {
        for (parts, class) in other.terms {
            self.push(alg, DecoratedOp { parts, class });
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn ops(&self) -> impl Iterator<Item = DecoratedOp<C>> + '_ {
        self.terms.iter().map(|(p, c)| DecoratedOp { parts: p.clone(), class: c.clone() })
    }

    pub fn scale<A: TraceAlgebra<Class = C>>(&self, alg: &A, r: &Rational) -> OpSum<C> {
        let mut out = OpSum::default();
        for op in self.ops() {
            out.push(alg, DecoratedOp { class: alg.scale(&op.class, r), parts: op.parts });
        }
        out
    }

    /// Rewrites every term in the standard order.
    pub fn normal_ordered<A: TraceAlgebra<Class = C>>(&self, alg: &A) -> OpSum<C> {
        let mut out = OpSum::default();
        for op in self.ops() {
            out.extend(alg, normal_order(alg, &op));
        }
        out
    }
}

/// Commutator of two grouped operators.
///
/// Each contraction of the `t`-th factor of `a` with the `j`-th factor of `b`
/// leaves `a_{<t} b_{<j} b_{>j} a_{>t}` acting on the product class, which is
/// the exact expansion of `ab - ba`.
pub fn commutator<A: TraceAlgebra>(alg: &A, a: &DecoratedOp<A::Class>, b: &DecoratedOp<A::Class>) -> OpSum<A::Class> {
    let mut out = OpSum::default();
    let ab = alg.mul(&a.class, &b.class);
    if alg.is_zero(&ab) {
        return out;
    }
    for (t, &nt) in a.parts.iter().enumerate() {
        for (j, &mj) in b.parts.iter().enumerate() {
            if nt != -mj {
                continue;
            }
            let mut parts = Vec::with_capacity(a.parts.len() + b.parts.len() - 2);
            parts.extend_from_slice(&a.parts[..t]);
            parts.extend_from_slice(&b.parts[..j]);
            parts.extend_from_slice(&b.parts[j + 1..]);
            parts.extend_from_slice(&a.parts[t + 1..]);
            let coef = Rational::from_integer((alg.sign() * nt as i64).into());
            out.push(alg, DecoratedOp { parts, class: alg.scale(&ab, &coef) });
        }
    }
    out
}

/// Rewrites one grouped operator in the standard order. Swapping adjacent
/// `a_n a_{-n}` inside a group leaves a self-contraction on `e_X * alpha`.
pub fn normal_order<A: TraceAlgebra>(alg: &A, op: &DecoratedOp<A::Class>) -> OpSum<A::Class> {
    let mut out = OpSum::default();
    let Some(i) = op.parts.windows(2).position(|w| w[0] > 0 && w[1] < 0) else {
        out.push(alg, op.clone());
        return out;
    };
    let (x, y) = (op.parts[i], op.parts[i + 1]);
    let mut swapped = op.parts.clone();
    swapped.swap(i, i + 1);
    out.extend(alg, normal_order(alg, &DecoratedOp { parts: swapped, class: op.class.clone() }));
    if x == -y {
        let mut rest = op.parts.clone();
        rest.drain(i..=i + 1);
        let coef = Rational::from_integer((alg.sign() * x as i64).into());
        let class = alg.scale(&alg.euler_mul(&op.class), &coef);
        out.extend(alg, normal_order(alg, &DecoratedOp { parts: rest, class }));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::surface::SurfaceModel;
    use crate::ring::{int, Coeff};

    #[test]
    fn singleton_commutator_is_the_pairing() {
        let s = SurfaceModel::standard(false);
        let a = DecoratedOp::new(vec![3], s.divisor("L1").unwrap()).unwrap();
        let b = DecoratedOp::new(vec![-3], s.divisor("L2").unwrap()).unwrap();
        let c = commutator(&s, &a, &b);
        let ops: Vec<_> = c.ops().collect();
        assert_eq!(ops.len(), 1);
        assert!(ops[0].parts().is_empty());
        assert_eq!(ops[0].class.integral(), s.pairing_symbol("L1", "L2").unwrap().scale(&int(-3)));
    }

    #[test]
    fn merged_operator_example() {
        let s = SurfaceModel::standard(false);
        let (i, j) = (2, 3);
        let a = DecoratedOp::new(vec![-i, i + j], s.one()).unwrap();
        let b = DecoratedOp::new(vec![-i - j, i], s.one()).unwrap();
        let got = commutator(&s, &a, &b);
        let mut want = OpSum::default();
        want.push(&s, DecoratedOp::new(vec![-i - j, i + j], s.one().scale(&int(i as i64))).unwrap());
        want.push(&s, DecoratedOp::new(vec![-i, i], s.one().scale(&int(-(i + j) as i64))).unwrap());
        assert_eq!(got, want);
    }

    #[test]
    fn self_commutator_vanishes() {
        let s = SurfaceModel::standard(false);
        let a = DecoratedOp::new(vec![-1, 1], s.one()).unwrap();
        assert!(commutator(&s, &a, &a).is_empty());
    }

    #[test]
    fn zero_part_rejected() {
        assert_eq!(DecoratedOp::new(vec![1, 0], int(1)), Err(FockError::ZeroPart));
    }
}
