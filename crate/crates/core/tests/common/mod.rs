#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use qzeta::cli::{parse, Expr};
use qzeta::qmforms::{basis, compose, decompose};
use qzeta::qzeta::SUM_NAMES;
use qzeta::ring::{euler_pow, QSeries, Rational};

pub const ORDER: usize = 10;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn series(order: usize) -> impl Strategy<Value = QSeries<Rational>> {
    prop::collection::vec(rational(), order + 1).prop_map(QSeries::from_coeffs)
}

pub fn unit_series(order: usize) -> impl Strategy<Value = QSeries<Rational>> {
    (series(order), rational().prop_filter("nonzero", |c| c != &Rational::from_integer(0.into()))).prop_map(
        |(mut s, c)| {
            s.set_coeff(0, c);
            s
        },
    )
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (-30i64..=30, 1i64..=6).prop_map(|(n, d)| Expr::Num(Rational::new(n.into(), d.into()))),
        prop::collection::vec(2u32..=5, 1..=3).prop_map(Expr::Z),
        prop::collection::vec(1u32..=4, 1..=2).prop_map(Expr::B),
        (1u32..=3).prop_map(|k| Expr::G(2 * k)),
        (-3i64..=3).prop_map(Expr::EulerPow),
        prop::sample::select(SUM_NAMES).prop_map(|s| Expr::Sum(s.to_string())),
    ]
}

/// Arbitrary syntax trees, including shapes the parser never produces itself.
pub fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            inner.clone().prop_map(|e| Expr::D(Box::new(e))),
            (inner.clone(), -3i64..=3).prop_map(|(e, k)| Expr::Pow(Box::new(e), k)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
        ]
    })
}

/// Cheap, always-evaluable expressions.
pub fn cheap_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Expr::Num(Rational::new(n.into(), d.into()))),
        prop::collection::vec(2u32..=4, 1..=2).prop_map(Expr::Z),
        (1u32..=3).prop_map(|k| Expr::G(2 * k)),
        (-2i64..=2).prop_map(Expr::EulerPow),
    ];
    leaf.prop_recursive(3, 10, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::D(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
        ]
    })
}

/// Partition numbers by the standard part-by-part recurrence.
pub fn partition_counts(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(0); n + 1];
    p[0] = BigInt::from(1);
    for part in 1..=n {
        for k in part..=n {
            let add = p[k - part].clone();
            p[k] += add;
        }
    }
    p
}

pub fn ring_axioms(a: &QSeries<Rational>, b: &QSeries<Rational>, c: &QSeries<Rational>) -> Result<(), TestCaseError> {
    let n = a.order();
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert_eq!(a + &QSeries::zero(n), a.clone());
    prop_assert_eq!(a * &QSeries::one(n), a.clone());
    prop_assert!((a + &(-a)).is_zero());
    Ok(())
}

pub fn derivation(a: &QSeries<Rational>, b: &QSeries<Rational>) -> Result<(), TestCaseError> {
    prop_assert_eq!((a * b).q_derivative(), &(&a.q_derivative() * b) + &(a * &b.q_derivative()));
    Ok(())
}

pub fn inverse(u: &QSeries<Rational>) -> Result<(), TestCaseError> {
    let inv = u.inverse().map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(u * &inv, QSeries::one(u.order()));
    Ok(())
}

pub fn partition_oracle() -> Result<(), TestCaseError> {
    let p = euler_pow(-1, 50);
    let want = partition_counts(50);
    for (k, c) in want.iter().enumerate() {
        prop_assert_eq!(p.coeff(k), Rational::from_integer(c.clone()), "p({})", k);
    }
    Ok(())
}

pub const DECOMPOSE_ORDER: usize = 24;

pub fn decompose_linear(
    x: &[Rational],
    y: &[Rational],
    alpha: &Rational,
    beta: &Rational,
) -> Result<(), TestCaseError> {
    let b = basis(6).unwrap();
    let n = DECOMPOSE_ORDER;
    let f = compose(&b, x, n);
    let g = compose(&b, y, n);
    let h = &f.scale(alpha) + &g.scale(beta);
    let df = decompose(&f, 6, n).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let dg = decompose(&g, 6, n).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let dh = decompose(&h, 6, n).map_err(|e| TestCaseError::fail(e.to_string()))?;
    for (k, xk) in x.iter().enumerate().take(b.len()) {
        prop_assert_eq!(&dh.coeffs[k], &(&df.coeffs[k] * alpha + &dg.coeffs[k] * beta));
        prop_assert_eq!(&df.coeffs[k], xk);
    }
    Ok(())
}

pub fn basis_delta() -> Result<(), TestCaseError> {
    let b = basis(6).unwrap();
    for (i, m) in b.iter().enumerate() {
        let d = decompose(&m.series(30), 6, 30).map_err(|e| TestCaseError::fail(e.to_string()))?;
        for (j, c) in d.coeffs.iter().enumerate() {
            let want = Rational::from_integer(BigInt::from((i == j) as i32));
            prop_assert_eq!(c, &want, "{} slot {}", m, j);
        }
    }
    Ok(())
}

pub fn round_trip(e: &Expr) -> Result<(), TestCaseError> {
    let text = e.to_string();
    let first = parse(&text).map_err(|err| TestCaseError::fail(format!("{text:?}: {err}")))?;
    let again = parse(&first.to_string()).map_err(|err| TestCaseError::fail(format!("{first}: {err}")))?;
    prop_assert_eq!(&again, &first, "printed {:?}", text);
    Ok(())
}

fn fmt<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Result<(), String> {
    r.map_err(|e| format!("{e}"))
}

/// Runs the property suite with a fixed seed; one entry per property.
pub fn property_suite() -> Vec<(&'static str, Result<(), String>)> {
    fn runner(cases: u32) -> TestRunner {
        let config = Config { cases, failure_persistence: None, ..Config::default() };
        TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
    }
    let coeffs = || prop::collection::vec(rational(), 7);
    vec![
        (
            "ring axioms",
            fmt(runner(128).run(&(series(ORDER), series(ORDER), series(ORDER)), |(a, b, c)| ring_axioms(&a, &b, &c))),
        ),
        ("q d/dq derivation", fmt(runner(128).run(&(series(ORDER), series(ORDER)), |(a, b)| derivation(&a, &b)))),
        ("series inverse", fmt(runner(64).run(&unit_series(ORDER), |u| inverse(&u)))),
        ("partition oracle to 50", partition_oracle().map_err(|e| e.to_string())),
        (
            "decompose linearity",
            fmt(runner(24)
                .run(&(coeffs(), coeffs(), rational(), rational()), |(x, y, a, b)| decompose_linear(&x, &y, &a, &b))),
        ),
        ("basis delta recovery", basis_delta().map_err(|e| e.to_string())),
        ("parser round trip (1000)", fmt(runner(1000).run(&expr(), |e| round_trip(&e)))),
    ]
}
