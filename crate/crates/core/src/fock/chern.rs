use super::algebra::ScalarFock;
use super::op::{DecoratedOp, OpSum};
use super::partition::{partitions_bounded, GenPartition};
use super::surface::{CohClass, SurfaceModel};
use super::FockError;
use crate::ring::{rat, Rational};
use num_traits::{One, Zero};

/// Generalized partitions with `|lambda| = 0`, `1 <= l(lambda) <= max_len`
/// and positive parts summing to at most `max_size`, in a fixed order.
pub fn balanced_partitions(max_len: u32, max_size: u32) -> Vec<GenPartition> {
    let mut out = Vec::new();
    for s in 1..=max_size {
        let all = partitions_bounded(s, max_len as usize);
        for pos in &all {
            for neg in &all {
                if (pos.len() + neg.len()) as u32 > max_len {
                    continue;
                }
                let parts: Vec<i32> = neg.iter().map(|&n| -(n as i32)).chain(pos.iter().map(|&n| n as i32)).collect();
                out.push(GenPartition::from_parts(&parts).expect("nonzero parts"));
            }
        }
    }
    out
}

/// Chern character operator `G_k(alpha)` on a surface for `k` in `{0, 1}`,
/// keeping the terms whose positive parts sum to at most `order`.
pub fn chern_op(surface: &SurfaceModel, k: u32, alpha: &CohClass, order: usize) -> Result<OpSum<CohClass>, FockError> {
    let n_max = order as i32;
    let mut out = OpSum::default();
    match k {
        0 => {
            for m in 1..=n_max {
                out.push(surface, DecoratedOp::new(vec![-m, m], alpha.scale(&-Rational::one()))?);
            }
        }
        1 => {
            for lambda in balanced_partitions(3, order as u32) {
                if lambda.len() != 3 {
                    continue;
                }
                let c = -Rational::from_integer(lambda.factorial()).recip();
                out.push(surface, DecoratedOp::from_partition(&lambda, alpha.scale(&c)));
            }
            if surface.divisor_index("K").is_some() {
                let ka = surface.mul(&surface.k(), alpha);
                for n in 1..=n_max {
                    out.push(surface, DecoratedOp::new(vec![-n, n], ka.scale(&rat(1 - n as i64, 2)))?);
                }
            }
        }
        _ => return Err(FockError::ChernDegree(k)),
    }
    Ok(out)
}

fn mul_trunc(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `z^2 / (2 cosh z - 2)` to `len` terms.
fn cosh_kernel(len: usize) -> Vec<Rational> {
    // (2 cosh z - 2) / z^2 = sum_{j>=1} 2 z^{2j-2} / (2j)!
    let mut d = vec![Rational::zero(); len];
    let mut fact = Rational::one();
    for n in 1..=(2 * len + 2) {
        fact *= Rational::from_integer((n as i64).into());
        if n % 2 == 0 && n >= 2 && n - 2 < len {
            d[n - 2] = Rational::from_integer(2.into()) / &fact;
        }
    }
    let mut inv = vec![Rational::zero(); len];
    for i in 0..len {
        let mut acc = if i == 0 { Rational::one() } else { Rational::zero() };
        for j in 1..=i {
            acc -= &d[j] * &inv[i - j];
        }
        inv[i] = acc / &d[0];
    }
    inv
}

/// `(e^{c z} - 1) / (c z)` to `len` terms.
fn exp_quotient(c: i64, len: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len);
    let mut term = Rational::one();
    for i in 0..len {
        out.push(term.clone());
        term = term * Rational::from_integer(c.into()) / Rational::from_integer(((i + 2) as i64).into());
    }
    out
}

/// Coefficient of `a_lambda / lambda^!` in the equivariant `G_k`.
pub fn equiv_chern_coefficient(k: u32, lambda: &GenPartition) -> Rational {
    let l = lambda.len() as i64;
    let deg = k as i64 - l + 2;
    if deg < 0 {
        return Rational::zero();
    }
    let len = deg as usize + 1;
    let mut g = cosh_kernel(len);
    for (n, m) in lambda.multiplicities() {
        // (x^n - 1)/n for a part -n and (1 - x^{-n})/n for a part n are both
        // z (e^{cz} - 1)/(cz) with c = -part
        let f = exp_quotient(-(n as i64), len);
        for _ in 0..m {
            g = mul_trunc(&g, &f, len);
        }
    }
    g[deg as usize].clone()
}

/// The equivariant Chern character operator `G_k` on the scalar Fock space,
/// including the scalar term of the empty partition.
pub fn equiv_chern_op(k: u32, order: usize) -> OpSum<Rational> {
    let alg = ScalarFock;
    let mut out = OpSum::default();
    let mut all = vec![GenPartition::default()];
    all.extend(balanced_partitions(k + 2, order as u32));
    for lambda in all {
        let c = equiv_chern_coefficient(k, &lambda);
        if c.is_zero() {
            continue;
        }
        let c = c / Rational::from_integer(lambda.factorial());
        out.push(&alg, DecoratedOp::from_partition(&lambda, c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    #[test]
    fn k1_has_unit_coefficients_on_length_three() {
        for lambda in balanced_partitions(5, 6) {
            let c = equiv_chern_coefficient(1, &lambda);
            let want = if lambda.len() == 3 { int(1) } else { int(0) };
            assert_eq!(c, want, "{lambda}");
        }
        assert_eq!(equiv_chern_coefficient(1, &GenPartition::default()), int(0));
    }

    #[test]
    fn k0_coefficients() {
        for m in 1..5 {
            let lambda = GenPartition::from_parts(&[-m, m]).unwrap();
            assert_eq!(equiv_chern_coefficient(0, &lambda), int(1));
        }
        assert_eq!(equiv_chern_coefficient(0, &GenPartition::default()), rat(-1, 12));
    }

    #[test]
    fn parity_of_length() {
        for k in 0..=3u32 {
            for lambda in balanced_partitions(k + 2, 5) {
                if (lambda.len() + k) % 2 == 1 {
                    assert!(equiv_chern_coefficient(k, &lambda).is_zero(), "k={k} {lambda}");
                }
            }
        }
    }

    #[test]
    fn g1_enumeration() {
        let s = SurfaceModel::standard(false);
        let g = chern_op(&s, 1, &s.one(), 3).unwrap();
        let parts: Vec<Vec<i32>> = g.ops().map(|o| o.parts().to_vec()).collect();
        assert!(parts.contains(&vec![-1, -1, 2]));
        assert!(parts.contains(&vec![-2, 1, 1]));
        let g0 = chern_op(&s, 0, &s.divisor("L1").unwrap(), 3).unwrap();
        assert_eq!(g0.len(), 3);
        assert_eq!(chern_op(&s, 2, &s.one(), 3), Err(FockError::ChernDegree(2)));
    }
}
