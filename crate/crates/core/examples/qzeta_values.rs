// Okounkov series, brackets, Eisenstein series and the relations between them.

use qzeta::qzeta::{bracket, eisenstein, okounkov_z, sum_by_name};
use qzeta::ring::{int, rat, QSeries};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 30;
    let z = |s: &[u32]| okounkov_z(s, n);
    let b = |s: &[u32]| bracket(s, n);

    println!("Z(2) = {}", z(&[2])?.truncate(7).display());
    println!("Z(3) = {}", z(&[3])?.truncate(5).display());
    println!("Z(2,3) = {}", z(&[2, 3])?.truncate(6).display());

    assert_eq!(z(&[2])?, b(&[2])?);
    assert_eq!(z(&[3])?, b(&[3])?.scale(&int(2)));
    assert_eq!(z(&[4])?, &b(&[4])? - &b(&[2])?.scale(&rat(1, 6)));

    // q d/dq acting on Z(3) stays inside the algebra
    let lhs = z(&[3])?.q_derivative();
    let rhs = &(&(&z(&[5])?.scale(&int(5)) - &z(&[3, 2])?.scale(&int(4))) - &z(&[2, 3])?.scale(&int(6))) + &z(&[3])?;
    assert_eq!(lhs, rhs);

    let g2 = eisenstein(2, n)?;
    assert_eq!(g2, &QSeries::constant(rat(-1, 24), n) + &z(&[2])?);
    let g4 = eisenstein(4, n)?;
    let g4_z = &(&QSeries::constant(rat(1, 1440), n) + &z(&[2])?.scale(&rat(1, 6))) + &z(&[4])?;
    assert_eq!(g4, g4_z);
    println!("G4 = 1/1440 + Z(2)/6 + Z(4)");

    assert_eq!(sum_by_name("brandenburg_lhs", n)?, sum_by_name("brandenburg_rhs", n)?);
    println!("catalog double sums agree through q^{n}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
