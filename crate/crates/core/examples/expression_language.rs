// The expression and operator-word syntax used by the command line.

use qzeta::cli::{build_word, parse, parse_word};
use qzeta::fock::{trace_product, SurfaceModel};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let e = parse("Z(2)^2 + 7/2*Z(4) - D(Z(3))/2")?;
    println!("{e}");
    assert_eq!(parse(&e.to_string())?, e);
    println!("  = {}", e.eval(6)?.display());

    let zero = parse("D(Z(3)) - 5*Z(5) + 4*Z(3,2) + 6*Z(2,3) - Z(3)")?;
    assert!(zero.eval(20)?.is_zero());

    let err = parse("Z(2) + Z(1)").unwrap_err();
    println!("error: {err}");

    let s = SurfaceModel::standard(false);
    let word = build_word(&s, &parse_word("a[-1,-1](1X)/! * a[1,1](1X)")?);
    println!("trace: {}", trace_product(&s, &word, 5).display(s.symbols()));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
