// Traces of Heisenberg operator words, checked against a brute-force
// simulation of the Fock space.

use qzeta::fock::{fock_trace_bruteforce, trace_product, DecoratedOp, ScalarFock, SurfaceModel};
use qzeta::ring::{euler_pow, int};
use std::error::Error;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 10;
    let s = SurfaceModel::standard(false);
    let t = s.symbols();
    let l1 = s.divisor("L1").unwrap();
    let l2 = s.divisor("L2").unwrap();

    // <a_{-2}(L1) a_2(L2)> = <L1,L2> (-2 q^2/(1-q^2))
    let w = [DecoratedOp::new(vec![-2], l1.clone())?, DecoratedOp::new(vec![2], l2.clone())?];
    println!("a_-2(L1) a_2(L2): {}", trace_product(&s, &w, n).display(t));

    let w = [DecoratedOp::new(vec![-1, -1], s.one())?, DecoratedOp::new(vec![1, 1], s.one())?];
    println!("a_-1a_-1(1) a_1a_1(1): {}", trace_product(&s, &w, n).display(t));

    // unbalanced words vanish
    let w = [DecoratedOp::new(vec![-2], s.k())?];
    assert!(trace_product(&s, &w, n).is_zero());

    // the recursive engine against the explicit simulator on scalar words
    let unreduce = euler_pow(1, n);
    let words: [&[i32]; 4] = [&[-1, 1], &[-2, -1, 3], &[1, -1, 2, -2], &[-3, 1, 1, 1]];
    for parts in words {
        let ops: Vec<_> = parts.iter().map(|&p| DecoratedOp::new(vec![p], int(1))).collect::<Result<_, _>>()?;
        let fast = trace_product(&ScalarFock, &ops, n);
        let slow = &fock_trace_bruteforce(parts, n) * &unreduce;
        assert_eq!(fast, slow, "{parts:?}");
        println!("{parts:?}: {}", fast.display());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
