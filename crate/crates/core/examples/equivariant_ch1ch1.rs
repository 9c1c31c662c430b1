// The equivariant <ch_1 ch_1>' is a polynomial in m^2 with quasi-modular
// coefficients.

use qzeta::fock::{equiv_chern_op, gamma_trace};
use qzeta::pipeline::equiv_ch1ch1;
use qzeta::qzeta::sum_by_name;
use qzeta::ring::int;
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 8;
    let h0 = sum_by_name("h11_0", n)?;
    let h2 = sum_by_name("h11_2", n)?;
    let h4 = sum_by_name("h11_4", n)?;
    for m in 0..=2i64 {
        let got = equiv_ch1ch1(m, n)?;
        let m2 = int(m * m);
        let want = &(&h4.scale(&(&m2 * &m2)) + &h2.scale(&m2)) + &h0;
        assert_eq!(got, want);
        println!("m = {m}: {}", got.display());

        // a single G_1 has trace zero
        assert!(gamma_trace(m, &[equiv_chern_op(1, n)], n)?.is_zero());
    }
    assert_eq!(equiv_ch1ch1(-2, n)?, equiv_ch1ch1(2, n)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
