use super::surface::{CohClass, SurfaceModel};
use crate::ring::{Coeff, MPoly, Rational};
use std::fmt::Debug;
use std::hash::Hash;

/// Decorations of Heisenberg operators and how they pair.
///
/// `[a_m(x), a_n(y)] = sign() * m * delta_{m,-n} <x, y>`; contracting two
/// slots of one grouped operator multiplies its class by the Euler class.
pub trait TraceAlgebra: Sync {
    type Class: Clone + Eq + Hash + Debug + Send + Sync;
    type Value: Coeff;

    fn sign(&self) -> i64;
    fn mul(&self, a: &Self::Class, b: &Self::Class) -> Self::Class;
    fn add(&self, a: &Self::Class, b: &Self::Class) -> Self::Class;
    fn scale(&self, a: &Self::Class, r: &Rational) -> Self::Class;
    fn euler_mul(&self, a: &Self::Class) -> Self::Class;
    fn integrate(&self, a: &Self::Class) -> Self::Value;
    fn is_zero(&self, a: &Self::Class) -> bool;
    fn one(&self) -> Self::Class;
    /// Real degree of a homogeneous class, `None` when mixed or unknown.
    fn degree(&self, a: &Self::Class) -> Option<u32>;
}

impl TraceAlgebra for SurfaceModel {
    type Class = CohClass;
    type Value = MPoly;

    fn sign(&self) -> i64 {
        -1
    }
    fn mul(&self, a: &CohClass, b: &CohClass) -> CohClass {
        SurfaceModel::mul(self, a, b)
    }
    fn add(&self, a: &CohClass, b: &CohClass) -> CohClass {
        a.add(b)
    }
    fn scale(&self, a: &CohClass, r: &Rational) -> CohClass {
        a.scale(r)
    }
    fn euler_mul(&self, a: &CohClass) -> CohClass {
        let mut c = self.zero();
        c.d4 = a.d0.mul_ref(&self.chi());
        c
    }
    fn integrate(&self, a: &CohClass) -> MPoly {
        a.integral()
    }
    fn is_zero(&self, a: &CohClass) -> bool {
        a.is_zero()
    }
    fn one(&self) -> CohClass {
        SurfaceModel::one(self)
    }
    fn degree(&self, a: &CohClass) -> Option<u32> {
        a.degree()
    }
}

/// The equivariant Fock space of the affine plane at `t = 1`: one boson with
/// `[a_m, a_n] = m delta_{m,-n}`, decorations are plain scalars.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScalarFock;

impl TraceAlgebra for ScalarFock {
    type Class = Rational;
    type Value = Rational;

    fn sign(&self) -> i64 {
        1
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn scale(&self, a: &Rational, r: &Rational) -> Rational {
        a * r
    }
    fn euler_mul(&self, a: &Rational) -> Rational {
        a.clone()
    }
    fn integrate(&self, a: &Rational) -> Rational {
        a.clone()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        num_traits::Zero::is_zero(a)
    }
    fn one(&self) -> Rational {
        num_traits::One::one()
    }
    fn degree(&self, _: &Rational) -> Option<u32> {
        None
    }
}
