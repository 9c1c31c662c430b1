//! Quasi-modular forms of level one as polynomials in Z(2), Z(4), Z(6), and
//! exact decomposition of q-series in the monomial basis.

use crate::qzeta::okounkov_z;
use crate::ring::{rational_to_json, MPoly, Monomial, QSeries, Rational};
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QmError {
    #[error("weight must be even (got {0})")]
    OddWeight(u32),
    #[error("order {order} too small for a basis of size {size}: need at least {need}")]
    OrderTooSmall { order: usize, size: usize, need: usize },
    #[error("series is not in the span: residual first nonzero at q^{degree}")]
    NotInSpan { degree: usize },
    #[error("basis coefficients are not determined by the first {order} coefficients")]
    Underdetermined { order: usize },
}

/// `Z(2)^a Z(4)^b Z(6)^c`, of weight `2a + 4b + 6c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QmMonomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl QmMonomial {
    pub fn weight(&self) -> u32 {
        2 * self.a + 4 * self.b + 6 * self.c
    }

    pub fn series(&self, order: usize) -> QSeries<Rational> {
        let z = |s| okounkov_z(&[s], order).expect("valid index");
        let mut acc = QSeries::one(order);
        for (s, e) in [(2, self.a), (4, self.b), (6, self.c)] {
            if e > 0 {
                acc = &acc * &z(s).pow(e);
            }
        }
        acc
    }
}

impl fmt::Display for QmMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (s, e) in [(2, self.a), (4, self.b), (6, self.c)] {
            match e {
                0 => {}
                1 => parts.push(format!("Z({s})")),
                _ => parts.push(format!("Z({s})^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Monomials of weight `<= weight`, by weight and then by decreasing powers
/// of Z(2) and Z(4).
pub fn basis(weight: u32) -> Result<Vec<QmMonomial>, QmError> {
    if weight % 2 == 1 {
        return Err(QmError::OddWeight(weight));
    }
    let mut out = Vec::new();
    for w in (0..=weight).step_by(2) {
        for a in (0..=w / 2).rev() {
            for b in (0..=(w - 2 * a) / 4).rev() {
                let rest = w - 2 * a - 4 * b;
                if rest % 6 == 0 {
                    out.push(QmMonomial { a, b, c: rest / 6 });
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub basis: Vec<QmMonomial>,
    pub coeffs: Vec<Rational>,
    pub verified_to: usize,
}

impl Decomposition {
    /// Largest weight carrying a nonzero coefficient (0 for the zero series).
    pub fn weight(&self) -> u32 {
        self.basis.iter().zip(&self.coeffs).filter(|(_, c)| !c.is_zero()).map(|(m, _)| m.weight()).max().unwrap_or(0)
    }

    pub fn coeff_of(&self, m: QmMonomial) -> Rational {
        self.basis.iter().position(|&b| b == m).map_or_else(Rational::zero, |i| self.coeffs[i].clone())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "basis": self.basis.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "coeffs": self.coeffs.iter().map(rational_to_json).collect::<Vec<_>>(),
            "verified_to": self.verified_to,
        })
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .basis
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| format!("({})*{}", crate::ring::fmt_rational(c), m))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Solves `f = sum c_m m` exactly from the low coefficients, then checks the
/// residual through `order`.
pub fn decompose(f: &QSeries<Rational>, weight: u32, order: usize) -> Result<Decomposition, QmError> {
    let basis = basis(weight)?;
    let size = basis.len();
    let need = size + 10;
    if order < need || f.order() < order {
        return Err(QmError::OrderTooSmall { order: order.min(f.order()), size, need });
    }
    let cols: Vec<QSeries<Rational>> = basis.iter().map(|m| m.series(order)).collect();
    // rows = degrees, augmented with f
    let mut rows: Vec<Vec<Rational>> = (0..=order)
        .map(|k| {
            let mut r: Vec<Rational> = cols.iter().map(|c| c.coeff(k)).collect();
            r.push(f.coeff(k));
            r
        })
        .collect();
    let mut pivot_rows = Vec::with_capacity(size);
    let mut used = vec![false; rows.len()];
    for col in 0..size {
        // lowest degree with a nonzero entry in this column
        let Some(p) = (0..rows.len()).find(|&r| !used[r] && !rows[r][col].is_zero()) else {
            return Err(QmError::Underdetermined { order });
        };
        used[p] = true;
        let inv = rows[p][col].recip();
        for x in rows[p].iter_mut() {
            *x *= &inv;
        }
        let prow = rows[p].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != p && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &factor * y;
                }
            }
        }
        pivot_rows.push(p);
    }
    let coeffs: Vec<Rational> = pivot_rows.iter().map(|&p| rows[p][size].clone()).collect();
    let mut residual = f.truncate(order);
    for (c, s) in coeffs.iter().zip(&cols) {
        residual = &residual - &s.scale(c);
    }
    if let Some(degree) = residual.valuation() {
        return Err(QmError::NotInSpan { degree });
    }
    Ok(Decomposition { basis, coeffs, verified_to: order })
}

/// Decomposes each symbol-monomial slice of an MPoly-coefficient series.
pub fn decompose_mpoly(
    f: &QSeries<MPoly>,
    weight: u32,
    order: usize,
) -> Result<BTreeMap<Monomial, Decomposition>, QmError> {
    let mut slices: BTreeMap<Monomial, QSeries<Rational>> = BTreeMap::new();
    for (k, c) in f.coeffs().iter().enumerate().take(order + 1) {
        for (m, r) in c.terms() {
            slices.entry(m.clone()).or_insert_with(|| QSeries::zero(f.order())).set_coeff(k, r.clone());
        }
    }
    slices.into_par_iter().map(|(m, s)| decompose(&s, weight, order).map(|d| (m, d))).collect()
}

/// The series `sum c_m m` for a coefficient list over `basis(weight)`.
pub fn compose(basis: &[QmMonomial], coeffs: &[Rational], order: usize) -> QSeries<Rational> {
    let mut acc = QSeries::zero(order);
    for (m, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            acc.add_assign_ref(&m.series(order).scale(c));
        }
    }
    acc
}
