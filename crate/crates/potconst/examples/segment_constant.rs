//! The segment constant and its classical two-factor/multifactor relatives.
//!
//! On `[-1,1]` the best constant is `M = exp(C) = 3.2099123...`; the Kneser
//! two-factor constants and the Borwein multifactor bound approach the same
//! value in the n-th root.

use num_complex::Complex64;
use potconst::{borwein_constant_log, constant_ce, kneser_constant, kneser_constant_log, SetSpec};

fn main() {
    let segment = SetSpec::segment(Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0));
    let report = constant_ce(&segment, 512).unwrap();
    println!("C_[-1,1] = {:.12}", report.value);
    println!("M_[-1,1] = {:.12}", report.exp_value);
    println!();

    println!("Kneser two-factor constants K(l, n):");
    println!(
        "  K(1, 2)  = {:.12}  (= 3 + 2 sqrt 2)",
        kneser_constant(1, 2).unwrap()
    );
    for n in [8usize, 32, 128] {
        let l = n / 2;
        let root = (kneser_constant_log(l, n).unwrap() / n as f64).exp();
        println!("  K({l:>3},{n:>4})^(1/n) = {root:.8}");
    }
    println!();

    println!("Borwein multifactor bound, n-th roots:");
    for n in [10usize, 100, 1000, 10000] {
        let root = (borwein_constant_log(n).unwrap() / n as f64).exp();
        println!(
            "  n = {n:>5}: {root:.8}   (gap to M: {:+.2e})",
            root - report.exp_value
        );
    }
}
