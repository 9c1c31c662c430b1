//! Reduced generating series of Chern character insertions, closed forms for
//! them, and a registry of named verifications.

mod checks;
mod formulas;

pub use checks::{run_check, run_checks, CheckResult, Mismatch, CHECK_NAMES};
pub use formulas::{
    ch1ch1_formula, ch1ch1_k_trivial_formula, f00_formula, f101_formula, f111_formula, h11_coefficients, Statement,
};

use crate::fock::{chern_op, equiv_chern_op, gamma_trace, vertex_trace_sums, CohClass, FockError, OpSum, SurfaceModel};
use crate::qmforms::QmError;
use crate::qzeta::QZetaError;
use crate::ring::{MPoly, QSeries, Rational};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    QZeta(#[from] QZetaError),
    #[error(transparent)]
    Qm(#[from] QmError),
    #[error("surface model has no divisor {0:?}")]
    MissingDivisor(String),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
}

/// Insertions `G_{k_i}(alpha_i)` for a reduced F-series, `k_i` in `{0, 1}`.
#[derive(Clone, Debug)]
pub struct FSeriesSpec<'a> {
    pub surface: &'a SurfaceModel,
    pub factors: Vec<(u32, CohClass)>,
    pub order: usize,
}

/// `(q;q)^chi F_{k_1..k_N}^{alpha_1..alpha_N}` as a series with polynomial
/// coefficients in the surface symbols.
pub fn f_series_reduced(spec: &FSeriesSpec) -> Result<QSeries<MPoly>, PipelineError> {
    let ops =
        spec.factors.iter().map(|(k, a)| chern_op(spec.surface, *k, a, spec.order)).collect::<Result<Vec<_>, _>>()?;
    Ok(vertex_trace_sums(spec.surface, &ops, spec.order)?)
}

fn ch1(surface: &SurfaceModel, divisor: &str, order: usize) -> Result<OpSum<CohClass>, PipelineError> {
    let l = surface.divisor(divisor).ok_or_else(|| PipelineError::MissingDivisor(divisor.to_string()))?;
    let mut op = chern_op(surface, 1, &surface.one(), order)?;
    op.extend(surface, chern_op(surface, 0, &l, order)?);
    Ok(op)
}

/// Reduced `<ch_1^{L1} ch_1^{L2}>'` with `ch_1(L^[n]) = G_1(1_X) + G_0(L)`.
pub fn ch1ch1_reduced(surface: &SurfaceModel, order: usize) -> Result<QSeries<MPoly>, PipelineError> {
    let ops = [ch1(surface, "L1", order)?, ch1(surface, "L2", order)?];
    Ok(vertex_trace_sums(surface, &ops, order)?)
}

/// Equivariant reduced `<ch_1 ch_1>'` at the integer `m`.
pub fn equiv_ch1ch1(m: i64, order: usize) -> Result<QSeries<Rational>, PipelineError> {
    let g1 = equiv_chern_op(1, order);
    Ok(gamma_trace(m, &[g1.clone(), g1], order)?)
}

/// The F_{1,1}^{1_X,1_X} identity at `order` on the general surface.
pub fn f111_component_check(order: usize) -> CheckResult {
    checks::lemma_f111(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn empty_spec_is_one() {
        let s = SurfaceModel::standard(false);
        let spec = FSeriesSpec { surface: &s, factors: vec![], order: 6 };
        assert_eq!(f_series_reduced(&spec).unwrap(), QSeries::one(6));
    }

    #[test]
    fn rejects_higher_chern_degree() {
        let s = SurfaceModel::standard(false);
        let spec = FSeriesSpec { surface: &s, factors: vec![(2, s.one())], order: 4 };
        assert!(matches!(f_series_reduced(&spec), Err(PipelineError::Fock(FockError::ChernDegree(2)))));
    }

    #[test]
    fn missing_divisor() {
        let s = SurfaceModel::new(&["K", "L1"], false);
        assert_eq!(ch1ch1_reduced(&s, 3), Err(PipelineError::MissingDivisor("L2".into())));
    }

    #[test]
    fn f101_shape() {
        let s = SurfaceModel::standard(false);
        let l = s.divisor("L1").unwrap();
        let spec = FSeriesSpec { surface: &s, factors: vec![(1, s.one()), (0, l)], order: 8 };
        let f = f_series_reduced(&spec).unwrap();
        let t = s.symbols();
        let k2 = t.index_of("K2").unwrap();
        let kl = t.index_of("KL1").unwrap();
        for c in f.coeffs() {
            for (m, _) in c.terms() {
                assert_eq!(m.exponent(kl), 1);
                assert!(m.degree() == 1 || (m.degree() == 2 && m.exponent(k2) == 1));
            }
        }
        assert!(!f.coeff(1).is_zero() || !f.coeff(2).is_zero());
    }
}
