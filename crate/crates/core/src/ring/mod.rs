//! Exact coefficient rings and truncated q-series.
//!
//! Everything here is exact: rationals are arbitrary precision, series carry
//! their truncation order explicitly and never silently extend it.

mod json;
mod lambert;
mod mpoly;
mod series;

pub use json::{
    mpoly_series_from_json, mpoly_series_to_json, rational_from_json, rational_to_json, series_from_json,
    series_to_json,
};
pub use lambert::{euler_pow, expand_lambert, lambert_term, LambertMonomial, LambertSum};
pub use mpoly::{MPoly, Monomial, SymbolTable};
pub use series::QSeries;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

pub type Rational = BigRational;

/// `n/d` as an exact rational. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("series is not invertible: constant term is zero")]
    NotInvertible,
    #[error("malformed series JSON: {0}")]
    Json(String),
    #[error("no value for symbol `{0}`")]
    MissingSymbol(String),
}

/// Commutative coefficient ring used by [`QSeries`].
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync + Zero + One {
    fn add_ref(&self, other: &Self) -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    fn from_rational(r: Rational) -> Self;

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
}

impl Coeff for Rational {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
}

pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
