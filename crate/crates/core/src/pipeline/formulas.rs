//! Closed forms for the reduced series, as displayed and as recomputed.

use super::PipelineError;
use crate::fock::SurfaceModel;
use crate::qmforms::{basis, compose};
use crate::qzeta::{okounkov_z, sum_by_name};
use crate::ring::{int, rat, Coeff, MPoly, QSeries, Rational};

/// Which version of a closed form to build. `Printed` reproduces the
/// displayed statement; `Corrected` replaces the coefficients that the
/// exact computation contradicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statement {
    Printed,
    Corrected,
}

/// Coefficients over `basis(6)` = `1, Z(2), Z(2)^2, Z(4), Z(2)^3, Z(2)Z(4), Z(6)`
/// of `h_{1,1}^{(component)}`, `component` in `{0, 2, 4}`.
pub fn h11_coefficients(component: u32, which: Statement) -> Vec<Rational> {
    let h0 = [int(0), int(0), int(1), int(1), rat(-8, 3), int(4), rat(14, 3)];
    let printed_scale = match component {
        0 => int(1),
        2 => rat(5, 4),
        4 => rat(-1, 4),
        _ => panic!("h11 component must be 0, 2 or 4"),
    };
    let scale = match (component, which) {
        (0, _) | (_, Statement::Printed) => printed_scale,
        (_, Statement::Corrected) => -printed_scale,
    };
    h0.iter().map(|c| c * &scale).collect()
}

fn qm(coeffs: &[Rational], order: usize) -> QSeries<Rational> {
    compose(&basis(6).expect("even weight"), coeffs, order)
}

fn z(s: u32, order: usize) -> QSeries<Rational> {
    okounkov_z(&[s], order).expect("valid index")
}

fn lift(s: &QSeries<Rational>, p: &MPoly) -> QSeries<MPoly> {
    s.map(|c| p.scale(c))
}

fn pairing(surface: &SurfaceModel, a: &str, b: &str) -> Result<MPoly, PipelineError> {
    let missing = if surface.divisor_index(a).is_none() { a } else { b };
    surface.pairing_symbol(a, b).ok_or_else(|| PipelineError::MissingDivisor(missing.to_string()))
}

fn l1l2_coefficient(which: Statement, order: usize) -> QSeries<Rational> {
    let c = match which {
        Statement::Printed => [int(1), rat(-1, 2), rat(7, 2)],
        Statement::Corrected => [int(1), int(-2), int(5)],
    };
    qm(&[int(0), c[0].clone(), c[1].clone(), c[2].clone(), int(0), int(0), int(0)], order)
}

/// `(q;q)^chi F_{0,0}^{L1,L2}`.
pub fn f00_formula(surface: &SurfaceModel, which: Statement, order: usize) -> Result<QSeries<MPoly>, PipelineError> {
    let kk = pairing(surface, "K", "L1")?.mul_ref(&pairing(surface, "K", "L2")?);
    let z2 = z(2, order);
    Ok(&lift(&(&z2 * &z2), &kk) + &lift(&l1l2_coefficient(which, order), &pairing(surface, "L1", "L2")?))
}

/// `(q;q)^chi F_{1,0}^{1_X,L}`.
pub fn f101_formula(surface: &SurfaceModel, divisor: &str, order: usize) -> Result<QSeries<MPoly>, PipelineError> {
    let k2 = pairing(surface, "K", "K")?;
    let kl = pairing(surface, "K", divisor)?;
    let d = &z(3, order) - &z(2, order);
    let half = rat(1, 2);
    Ok(&lift(&(&d * &z(2, order)).scale(&half), &k2.mul_ref(&kl)) + &lift(&d.q_derivative().scale(&half), &kl))
}

/// `S1 + 2 S2 + 2 S3`, the raw multi-sums multiplying `K^2`.
fn k2_sums(order: usize) -> Result<QSeries<Rational>, PipelineError> {
    let two = int(2);
    Ok(&(&sum_by_name("k2_s1", order)? + &sum_by_name("k2_s2", order)?.scale(&two))
        + &sum_by_name("k2_s3", order)?.scale(&two))
}

/// `(q;q)^chi F_{1,1}^{1_X,1_X}` with `h^(2)`, `h^(4)` evaluated from their
/// defining sums.
pub fn f111_formula(surface: &SurfaceModel, order: usize) -> Result<QSeries<MPoly>, PipelineError> {
    let k2 = pairing(surface, "K", "K")?;
    let d = &z(3, order) - &z(2, order);
    let quartic = lift(&(&d * &d).scale(&rat(1, 4)), &k2.mul_ref(&k2));
    let chi = lift(&sum_by_name("h11_2", order)?, &surface.chi());
    let k2_part = lift(&(&k2_sums(order)? - &sum_by_name("h11_4", order)?), &k2);
    Ok(&(&quartic + &chi) + &k2_part)
}

/// `<ch_1^{L1} ch_1^{L2}>'` on a general surface.
pub fn ch1ch1_formula(surface: &SurfaceModel, which: Statement, order: usize) -> Result<QSeries<MPoly>, PipelineError> {
    let mixed = &(&f00_formula(surface, which, order)? + &f101_formula(surface, "L1", order)?)
        + &f101_formula(surface, "L2", order)?;
    match which {
        Statement::Corrected => Ok(&mixed + &f111_formula(surface, order)?),
        Statement::Printed => {
            let k2 = pairing(surface, "K", "K")?;
            let d = &z(3, order) - &z(2, order);
            let quartic = lift(&(&d * &d).scale(&rat(1, 4)), &k2.mul_ref(&k2));
            let chi = lift(&qm(&h11_coefficients(2, Statement::Printed), order), &surface.chi());
            let bracket = &k2_sums(order)? + &qm(&h11_coefficients(4, Statement::Printed), order).scale(&int(-1));
            Ok(&(&(&mixed + &quartic) + &chi) + &lift(&bracket, &k2))
        }
    }
}

/// `<ch_1^{L1} ch_1^{L2}>'` when `K` is numerically trivial.
pub fn ch1ch1_k_trivial_formula(
    surface: &SurfaceModel,
    which: Statement,
    order: usize,
) -> Result<QSeries<MPoly>, PipelineError> {
    let l1l2 = lift(&l1l2_coefficient(which, order), &pairing(surface, "L1", "L2")?);
    let chi = lift(&qm(&h11_coefficients(2, which), order), &surface.chi());
    Ok(&l1l2 + &chi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrected_components_are_proportional() {
        let h0 = h11_coefficients(0, Statement::Corrected);
        let h2 = h11_coefficients(2, Statement::Corrected);
        let h4 = h11_coefficients(4, Statement::Corrected);
        for k in 0..7 {
            assert_eq!(&h2[k] * rat(-4, 5), h0[k]);
            assert_eq!(&h4[k] * int(4), h0[k]);
        }
    }

    #[test]
    fn printed_theorem_bracket_is_a_quarter_of_h0() {
        let p = h11_coefficients(4, Statement::Printed);
        assert_eq!(p[2], rat(-1, 4));
        assert_eq!(p[6], rat(-7, 6));
    }

    #[test]
    fn k_trivial_general_formula_reduces() {
        let s = SurfaceModel::standard(true);
        let n = 10;
        let a = ch1ch1_formula(&s, Statement::Corrected, n).unwrap();
        let b = ch1ch1_k_trivial_formula(&s, Statement::Corrected, n).unwrap();
        assert_eq!(a, b);
    }
}
