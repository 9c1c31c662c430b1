// Writing q-series in the basis Z(2)^a Z(4)^b Z(6)^c of weight at most 6.

use qzeta::qmforms::{basis, compose, decompose, QmError};
use qzeta::qzeta::{okounkov_z, sum_by_name};
use qzeta::ring::{int, rat};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 30;
    let b = basis(6)?;
    println!("basis: {}", b.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", "));

    for name in ["h11_0", "h11_2", "h11_4", "l1l2_cubic"] {
        let d = decompose(&sum_by_name(name, n)?, 6, n)?;
        println!("{name:<11} = {d}");
    }

    // the three components are proportional
    let h0 = decompose(&sum_by_name("h11_0", n)?, 6, n)?;
    let h2 = decompose(&sum_by_name("h11_2", n)?, 6, n)?;
    let h4 = decompose(&sum_by_name("h11_4", n)?, 6, n)?;
    for k in 0..b.len() {
        assert_eq!(&h2.coeffs[k] * rat(-4, 5), h0.coeffs[k]);
        assert_eq!(&h4.coeffs[k] * int(4), h0.coeffs[k]);
    }

    let rebuilt = compose(&b, &h0.coeffs, n);
    assert_eq!(rebuilt, sum_by_name("h11_0", n)?);

    match decompose(&okounkov_z(&[3], n)?, 6, n) {
        Err(QmError::NotInSpan { degree }) => println!("Z(3) is not quasi-modular (residual at q^{degree})"),
        other => panic!("unexpected {other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
