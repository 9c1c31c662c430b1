use crate::ring::{Coeff, MPoly, Rational, SymbolTable};
use num_traits::{One, Zero};

/// Symbolic cohomology of a projective surface, truncated to what the trace
/// computations touch: `1_X`, named divisors, and the point class.
///
/// Symbol 0 is always `chi`; the remaining symbols are the pairings of the
/// divisors, `K.K -> "K2"`, `K.Li -> "KLi"`, `Li.Lj -> "LiLj"`.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceModel {
    divisors: Vec<String>,
    table: SymbolTable,
    pairing: Vec<Vec<MPoly>>,
    k_trivial: bool,
}

fn pair_symbol(a: &str, b: &str) -> String {
    if a == b && a == "K" {
        "K2".into()
    } else {
        format!("{a}{b}")
    }
}

impl SurfaceModel {
    /// `divisors` must list `K` first when it is present.
    pub fn new<S: AsRef<str>>(divisors: &[S], k_trivial: bool) -> Self {
        let divisors: Vec<String> = divisors.iter().map(|s| s.as_ref().to_string()).collect();
        let mut table = SymbolTable::new(&["chi"]);
        let n = divisors.len();
        let mut pairing = vec![vec![MPoly::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let v = table.intern(&pair_symbol(&divisors[i], &divisors[j]));
                let involves_k = divisors[i] == "K" || divisors[j] == "K";
                let p = if k_trivial && involves_k { MPoly::zero() } else { MPoly::var(v) };
                pairing[i][j] = p.clone();
                pairing[j][i] = p;
            }
        }
        SurfaceModel { divisors, table, pairing, k_trivial }
    }

    /// Divisors `K, L1, L2`.
    pub fn standard(k_trivial: bool) -> Self {
        Self::new(&["K", "L1", "L2"], k_trivial)
    }

    pub fn symbols(&self) -> &SymbolTable {
        &self.table
    }

    pub fn k_trivial(&self) -> bool {
        self.k_trivial
    }

    pub fn divisor_names(&self) -> &[String] {
        &self.divisors
    }

    pub fn chi(&self) -> MPoly {
        MPoly::var(0)
    }

    /// The pairing symbol `<a, b>` by divisor names.
    pub fn pairing_symbol(&self, a: &str, b: &str) -> Option<MPoly> {
        let i = self.divisor_index(a)?;
        let j = self.divisor_index(b)?;
        Some(self.pairing[i][j].clone())
    }

    pub fn divisor_index(&self, name: &str) -> Option<usize> {
        self.divisors.iter().position(|d| d == name)
    }

    pub fn zero(&self) -> CohClass {
        CohClass { d0: MPoly::zero(), d2: vec![MPoly::zero(); self.divisors.len()], d4: MPoly::zero() }
    }

    /// `1_X`.
    pub fn one(&self) -> CohClass {
        let mut c = self.zero();
        c.d0 = MPoly::one();
        c
    }

    pub fn divisor(&self, name: &str) -> Option<CohClass> {
        let i = self.divisor_index(name)?;
        let mut c = self.zero();
        c.d2[i] = MPoly::one();
        Some(c)
    }

    /// Canonical class; panics when the model has no `K`.
    pub fn k(&self) -> CohClass {
        self.divisor("K").expect("surface model has no canonical divisor")
    }

    pub fn point(&self) -> CohClass {
        let mut c = self.zero();
        c.d4 = MPoly::one();
        c
    }

    /// Euler class `e_X`, the point class times `chi`.
    pub fn euler(&self) -> CohClass {
        let mut c = self.zero();
        c.d4 = self.chi();
        c
    }

    pub fn mul(&self, a: &CohClass, b: &CohClass) -> CohClass {
        let n = self.divisors.len();
        let mut out = self.zero();
        out.d0 = a.d0.mul_ref(&b.d0);
        for i in 0..n {
            out.d2[i] = a.d0.mul_ref(&b.d2[i]).add_ref(&b.d0.mul_ref(&a.d2[i]));
        }
        let mut d4 = a.d0.mul_ref(&b.d4).add_ref(&b.d0.mul_ref(&a.d4));
        for i in 0..n {
            if a.d2[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b.d2[j].is_zero() && !self.pairing[i][j].is_zero() {
                    d4.add_assign_ref(&a.d2[i].mul_ref(&b.d2[j]).mul_ref(&self.pairing[i][j]));
                }
            }
        }
        out.d4 = d4;
        out
    }

    pub fn pow(&self, a: &CohClass, e: u32) -> CohClass {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// `<a, b> = \int a b`.
    pub fn pair(&self, a: &CohClass, b: &CohClass) -> MPoly {
        self.mul(a, b).d4
    }
}

/// `d0 1_X + sum_i d2[i] D_i + d4 [pt]` with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohClass {
    pub d0: MPoly,
    pub d2: Vec<MPoly>,
    pub d4: MPoly,
}

impl CohClass {
    pub fn is_zero(&self) -> bool {
        self.d0.is_zero() && self.d4.is_zero() && self.d2.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &CohClass) -> CohClass {
        CohClass {
            d0: self.d0.add_ref(&other.d0),
            d2: self.d2.iter().zip(&other.d2).map(|(a, b)| a.add_ref(b)).collect(),
            d4: self.d4.add_ref(&other.d4),
        }
    }

    pub fn sub(&self, other: &CohClass) -> CohClass {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, r: &Rational) -> CohClass {
        CohClass { d0: self.d0.scale(r), d2: self.d2.iter().map(|c| c.scale(r)).collect(), d4: self.d4.scale(r) }
    }

    /// `\int` reads the point-class coefficient.
    pub fn integral(&self) -> MPoly {
        self.d4.clone()
    }

    /// Real cohomological degree when homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        let has = [!self.d0.is_zero(), self.d2.iter().any(|c| !c.is_zero()), !self.d4.is_zero()];
        match has {
            [true, false, false] => Some(0),
            [false, true, false] => Some(2),
            [false, false, true] => Some(4),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    #[test]
    fn symbol_table_and_pairings() {
        let s = SurfaceModel::standard(false);
        let names: Vec<&str> = s.symbols().names().iter().map(|x| x.as_str()).collect();
        assert_eq!(names, ["chi", "K2", "KL1", "KL2", "L1L1", "L1L2", "L2L2"]);
        let (k, l1) = (s.k(), s.divisor("L1").unwrap());
        assert_eq!(s.pair(&k, &l1), MPoly::var(2));
        assert_eq!(s.pair(&s.one(), &s.euler()), s.chi());
        assert!(s.mul(&s.euler(), &k).is_zero());
        // (1 - K)^2 = 1 - 2K + K2 [pt]
        let one_minus_k = s.one().sub(&k);
        let sq = s.pow(&one_minus_k, 2);
        assert_eq!(sq.d0, MPoly::one());
        assert_eq!(sq.d2[0], MPoly::constant(int(-2)));
        assert_eq!(sq.d4, MPoly::var(1));
    }

    #[test]
    fn k_trivial_kills_k_pairings() {
        let s = SurfaceModel::standard(true);
        assert!(s.pair(&s.k(), &s.divisor("L2").unwrap()).is_zero());
        assert_eq!(s.pair(&s.divisor("L1").unwrap(), &s.divisor("L2").unwrap()), MPoly::var(5));
    }
}
