// <ch_1^{L1} ch_1^{L2}>' on a surface, computed from the vertex-operator
// expansion and compared with its closed form.

use qzeta::fock::SurfaceModel;
use qzeta::pipeline::{ch1ch1_formula, ch1ch1_k_trivial_formula, ch1ch1_reduced, Statement};
use qzeta::qmforms::decompose_mpoly;
use qzeta::ring::{int, MPoly};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 6;
    let s = SurfaceModel::standard(false);
    let t = s.symbols();
    let traced = ch1ch1_reduced(&s, n)?;
    for k in 0..=3 {
        println!("q^{k}: {}", traced.coeff(k).display(t));
    }
    assert_eq!(traced, ch1ch1_formula(&s, Statement::Corrected, n)?);

    let printed = ch1ch1_formula(&s, Statement::Printed, n)?;
    if let Some(k) = (0..=n).find(|&k| printed.coeff(k) != traced.coeff(k)) {
        println!("uncorrected closed form first differs at q^{k}: {}", printed.coeff(k).display(t));
    }

    // with K trivial only the chi and <L1,L2> slices survive, each quasi-modular
    let n = 20;
    let kt = SurfaceModel::standard(true);
    let traced = ch1ch1_reduced(&kt, n)?;
    assert_eq!(traced, ch1ch1_k_trivial_formula(&kt, Statement::Corrected, n)?);
    for (m, d) in decompose_mpoly(&traced, 6, n)? {
        println!("{:<6} {d}", MPoly::from_terms([(m, int(1))]).display(kt.symbols()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
