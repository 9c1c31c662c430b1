use super::algebra::TraceAlgebra;
use super::op::{commutator, DecoratedOp};
use crate::ring::{Coeff, LambertMonomial, LambertSum, QSeries, Rational};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

/// A word of single Heisenberg factors. Factors sharing a group come from one
/// grouped operator and carry its class jointly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Word<C> {
    slots: Vec<(i32, u16)>,
    classes: Vec<C>,
}

impl<C: Clone> Word<C> {
    fn from_ops(ops: &[DecoratedOp<C>]) -> Self {
        let mut slots = Vec::new();
        let mut classes = Vec::new();
        for (g, op) in ops.iter().enumerate() {
            slots.extend(op.parts().iter().map(|&p| (p, g as u16)));
            classes.push(op.class.clone());
        }
        Word { slots, classes }
    }

    /// Grouped operators when every group occupies one contiguous run.
    fn as_ops(&self) -> Option<Vec<DecoratedOp<C>>> {
        let mut ops: Vec<DecoratedOp<C>> = Vec::new();
        let mut current: Option<u16> = None;
        let mut parts = Vec::new();
        let mut seen = vec![false; self.classes.len()];
        for &(p, g) in &self.slots {
            if current != Some(g) {
                if let Some(c) = current {
                    ops.push(DecoratedOp::new(std::mem::take(&mut parts), self.classes[c as usize].clone()).ok()?);
                }
                if seen[g as usize] {
                    return None;
                }
                seen[g as usize] = true;
                current = Some(g);
            }
            parts.push(p);
        }
        if let Some(c) = current {
            ops.push(DecoratedOp::new(parts, self.classes[c as usize].clone()).ok()?);
        }
        Some(ops)
    }
}

/// Exact reduced traces `Tr q^n prod a_lambda(alpha) / Tr q^n`.
///
/// Negative-weight grouped operators are cycled around the trace; when every
/// grouped operator has weight zero the first single factor is cycled
/// instead. Results are kept as symbolic Lambert sums and memoized.
type Memo<A> = Mutex<HashMap<(Word<<A as TraceAlgebra>::Class>, usize), LambertSum<<A as TraceAlgebra>::Value>>>;

pub struct TraceEngine<'a, A: TraceAlgebra> {
    alg: &'a A,
    order: usize,
    memo: Memo<A>,
}

impl<'a, A: TraceAlgebra> TraceEngine<'a, A> {
    pub fn new(alg: &'a A, order: usize) -> Self {
        TraceEngine { alg, order, memo: Mutex::new(HashMap::new()) }
    }

    pub fn algebra(&self) -> &A {
        self.alg
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn trace(&self, word: &[DecoratedOp<A::Class>]) -> QSeries<A::Value> {
        self.trace_lambert(word).to_series(self.order)
    }

    pub fn trace_lambert(&self, word: &[DecoratedOp<A::Class>]) -> LambertSum<A::Value> {
        self.eval(Word::from_ops(word), self.order)
    }

    /// Like [`Self::trace_lambert`] but dropping every term of degree above
    /// `budget`.
    pub fn trace_within(&self, word: &[DecoratedOp<A::Class>], budget: usize) -> LambertSum<A::Value> {
        self.eval(Word::from_ops(word), budget.min(self.order))
    }

    fn eval(&self, word: Word<A::Class>, budget: usize) -> LambertSum<A::Value> {
        let (pre, word) = match self.canonical(word) {
            Some(x) => x,
            None => return LambertSum::zero(budget),
        };
        if word.slots.is_empty() {
            return LambertSum::constant(pre, budget);
        }
        let key = (word, budget);
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.mul_coeff(&pre);
        }
        let (word, _) = &key;
        let value = match word.as_ops() {
            Some(ops) => match ops.iter().position(|op| op.weight() < 0) {
                Some(i0) => self.cycle_group(&ops, i0, budget),
                None => self.cycle_slot(word, budget),
            },
            None => self.cycle_slot(word, budget),
        };
        let out = value.mul_coeff(&pre);
        self.memo.lock().unwrap().insert(key, value);
        out
    }

    /// Integrates groups without factors, renumbers groups by first
    /// appearance and applies the vanishing filters.
    fn canonical(&self, word: Word<A::Class>) -> Option<(A::Value, Word<A::Class>)> {
        let alg = self.alg;
        let mut total = 0i64;
        let mut balance: BTreeMap<i32, i32> = BTreeMap::new();
        for &(p, _) in &word.slots {
            total += p as i64;
            *balance.entry(p.abs()).or_insert(0) += p.signum();
        }
        if total != 0 || balance.values().any(|&b| b != 0) {
            return None;
        }
        let mut used = vec![false; word.classes.len()];
        for &(_, g) in &word.slots {
            used[g as usize] = true;
        }
        let mut pre = A::Value::one();
        for (c, &u) in word.classes.iter().zip(&used) {
            if alg.is_zero(c) {
                return None;
            }
            if !u {
                pre = pre.mul_ref(&alg.integrate(c));
            }
        }
        if pre.is_zero() {
            return None;
        }
        let mut map = vec![u16::MAX; word.classes.len()];
        let mut classes = Vec::new();
        let mut slots = Vec::with_capacity(word.slots.len());
        for &(p, g) in &word.slots {
            if map[g as usize] == u16::MAX {
                map[g as usize] = classes.len() as u16;
                classes.push(word.classes[g as usize].clone());
            }
            slots.push((p, map[g as usize]));
        }
        Some((pre, Word { slots, classes }))
    }

    fn cycle_group(&self, ops: &[DecoratedOp<A::Class>], i0: usize, budget: usize) -> LambertSum<A::Value> {
        let n0 = (-ops[i0].weight()) as u32;
        let mut out = LambertSum::zero(budget);
        for r in 0..ops.len() {
            if r == i0 {
                continue;
            }
            let shift = if r > i0 { n0 } else { 0 };
            if shift as usize > budget {
                continue;
            }
            let factor = LambertMonomial::new(shift, &[(n0, 1)]);
            for merged in commutator(self.alg, &ops[r], &ops[i0]).ops() {
                let mut next: Vec<DecoratedOp<A::Class>> = Vec::with_capacity(ops.len() - 1);
                for (k, op) in ops.iter().enumerate() {
                    if k == r {
                        next.push(merged.clone());
                    } else if k != i0 {
                        next.push(op.clone());
                    }
                }
                let sub = self.eval(Word::from_ops(&next), budget - shift as usize);
                out.add_sum(&rebudget(&sub, budget).mul_monomial(&factor, &A::Value::one()));
            }
        }
        out
    }

    fn cycle_slot(&self, word: &Word<A::Class>, budget: usize) -> LambertSum<A::Value> {
        let alg = self.alg;
        let (n, g) = word.slots[0];
        let m = n.unsigned_abs();
        let shift = if n < 0 { m } else { 0 };
        let mut out = LambertSum::zero(budget);
        if shift as usize > budget {
            return out;
        }
        let factor = LambertMonomial::new(shift, &[(m, 1)]);
        let coef = Rational::from_integer((alg.sign() * m as i64).into());
        for j in 1..word.slots.len() {
            let (p, h) = word.slots[j];
            if p != -n {
                continue;
            }
            let mut slots: Vec<(i32, u16)> = Vec::with_capacity(word.slots.len() - 2);
            slots.extend(word.slots[1..j].iter().copied());
            slots.extend(word.slots[j + 1..].iter().copied());
            let mut classes = word.classes.clone();
            if h == g {
                classes[g as usize] = alg.scale(&alg.euler_mul(&classes[g as usize]), &coef);
            } else {
                let merged = alg.scale(&alg.mul(&classes[g as usize], &classes[h as usize]), &coef);
                classes[g as usize] = merged;
                classes.remove(h as usize);
                for s in slots.iter_mut() {
                    if s.1 == h {
                        s.1 = g;
                    }
                    if s.1 > h {
                        s.1 -= 1;
                    }
                }
            }
            let sub = self.eval(Word { slots, classes }, budget - shift as usize);
            out.add_sum(&rebudget(&sub, budget).mul_monomial(&factor, &A::Value::one()));
        }
        out
    }
}

fn rebudget<C: Coeff>(s: &LambertSum<C>, cutoff: usize) -> LambertSum<C> {
    let mut out = LambertSum::zero(cutoff);
    for (m, c) in s.terms() {
        out.add_term(m.clone(), c.clone());
    }
    out
}

/// Reduced trace of a product of grouped operators to order `order`.
pub fn trace_product<A: TraceAlgebra>(alg: &A, word: &[DecoratedOp<A::Class>], order: usize) -> QSeries<A::Value> {
    TraceEngine::new(alg, order).trace(word)
}
