// Truncated power series with exact rational coefficients.

use qzeta::ring::{euler_pow, int, rat, QSeries, Rational};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 12;

    // 1/(q;q)_inf counts partitions
    let p = euler_pow(-1, n);
    println!("partitions: {}", p.display());
    assert_eq!(p.coeff(12), int(77));

    let eta_like = euler_pow(1, n);
    assert_eq!(&p * &eta_like, QSeries::one(n));
    assert_eq!(eta_like.inverse()?, p);

    // q d/dq is a derivation
    let a = QSeries::from_coeffs((0..=n as i64).map(|k| rat(k + 1, 2)).collect::<Vec<Rational>>());
    let lhs = (&a * &p).q_derivative();
    let rhs = &(&a.q_derivative() * &p) + &(&a * &p.q_derivative());
    assert_eq!(lhs, rhs);
    println!("D(a*p) = D(a)*p + a*D(p) through q^{n}");

    let cube = p.pow(3);
    println!("(q;q)^-3: {}", cube.truncate(6).display());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
