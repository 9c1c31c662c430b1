use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;

/// Multiset of nonzero integer parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenPartition {
    mult: BTreeMap<i32, u32>,
}

impl GenPartition {
    /// `None` when a part is zero.
    pub fn from_parts(parts: &[i32]) -> Option<Self> {
        let mut mult = BTreeMap::new();
        for &p in parts {
            if p == 0 {
                return None;
            }
            *mult.entry(p).or_insert(0) += 1;
        }
        Some(GenPartition { mult })
    }

    pub fn multiplicities(&self) -> impl Iterator<Item = (i32, u32)> + '_ {
        self.mult.iter().map(|(&p, &m)| (p, m))
    }

    pub fn multiplicity(&self, part: i32) -> u32 {
        self.mult.get(&part).copied().unwrap_or(0)
    }

    /// `l(lambda)`.
    pub fn len(&self) -> u32 {
        self.mult.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// `|lambda|`, the signed size.
    pub fn size(&self) -> i64 {
        self.mult.iter().map(|(&p, &m)| p as i64 * m as i64).sum()
    }

    /// `s(lambda) = sum i^2 m_i`.
    pub fn s(&self) -> i64 {
        self.mult.iter().map(|(&p, &m)| (p as i64).pow(2) * m as i64).sum()
    }

    /// Sum of the positive parts.
    pub fn positive_size(&self) -> i64 {
        self.mult.iter().filter(|(&p, _)| p > 0).map(|(&p, &m)| p as i64 * m as i64).sum()
    }

    /// `lambda^! = prod m_i!`.
    pub fn factorial(&self) -> BigInt {
        self.mult.values().flat_map(|&m| 1..=m).fold(BigInt::one(), |a, k| a * k)
    }

    /// Parts in the order `... a_{-2} a_{-1} a_1 a_2 ...`.
    pub fn ordered_parts(&self) -> Vec<i32> {
        self.mult.iter().flat_map(|(&p, &m)| std::iter::repeat_n(p, m as usize)).collect()
    }

    /// `self - other` when `other <= self` componentwise.
    pub fn checked_sub(&self, other: &GenPartition) -> Option<GenPartition> {
        let mut mult = self.mult.clone();
        for (&p, &m) in &other.mult {
            let e = mult.get_mut(&p)?;
            if *e < m {
                return None;
            }
            *e -= m;
            if *e == 0 {
                mult.remove(&p);
            }
        }
        Some(GenPartition { mult })
    }

    /// Every `mu <= self`.
    pub fn sub_partitions(&self) -> Vec<GenPartition> {
        let mut out = vec![GenPartition::default()];
        for (&p, &m) in &self.mult {
            let mut next = Vec::with_capacity(out.len() * (m as usize + 1));
            for base in &out {
                for k in 0..=m {
                    let mut b = base.clone();
                    if k > 0 {
                        b.mult.insert(p, k);
                    }
                    next.push(b);
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Display for GenPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ordered_parts().iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Ordinary partitions of `n` with at most `max_len` parts, parts weakly
/// decreasing.
pub fn partitions_bounded(n: u32, max_len: usize) -> Vec<Vec<u32>> {
    fn go(n: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            go(n - p, p, max_len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_len, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statistics() {
        let l = GenPartition::from_parts(&[2, -1, -1]).unwrap();
        assert_eq!(l.len(), 3);
        assert_eq!(l.size(), 0);
        assert_eq!(l.s(), 6);
        assert_eq!(l.factorial(), BigInt::from(2));
        assert_eq!(l.ordered_parts(), vec![-1, -1, 2]);
        assert_eq!(l.sub_partitions().len(), 6);
        assert!(GenPartition::from_parts(&[0]).is_none());
        let mu = GenPartition::from_parts(&[-1]).unwrap();
        assert_eq!(l.checked_sub(&mu).unwrap().ordered_parts(), vec![-1, 2]);
        assert!(mu.checked_sub(&l).is_none());
    }

    #[test]
    fn bounded_partitions() {
        assert_eq!(partitions_bounded(4, 2), vec![vec![4], vec![3, 1], vec![2, 2]]);
        assert_eq!(partitions_bounded(0, 0), vec![Vec::<u32>::new()]);
    }
}
