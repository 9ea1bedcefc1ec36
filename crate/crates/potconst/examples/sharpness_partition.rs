//! Sharpness of the m-tuple constants: the Fekete partition construction.
//!
//! Splitting an n-point extremal configuration by which maximizer-tuple
//! point attains the max distance gives factor polynomials whose norm-product
//! ratio (per degree) climbs to exp(C_E(m)) as n grows. This is the
//! construction that shows the constants cannot be lowered.

use num_complex::Complex64;
use potconst::{disk_constant_closed_form, SetSpec, Verifier, WeightSpec};

fn main() {
    let disk = SetSpec::disk(Complex64::new(0.0, 0.0), 1.0).with_boundary_samples(512);
    let verifier = Verifier::new(disk, WeightSpec::Unit, 512, 0).unwrap();

    for m in [2usize, 3] {
        let target = disk_constant_closed_form(m).unwrap().exp();
        println!("disk, m = {m}: target exp(C_D({m})) = {target:.6}");
        println!("{:>6} {:>12} {:>10}", "n", "ratio_root", "gap");
        for n in [16usize, 32, 64, 128] {
            let exp = verifier.fekete_partition_experiment(m, n).unwrap();
            println!(
                "{n:>6} {:>12.6} {:>10.4}",
                exp.ratio_root,
                target - exp.ratio_root
            );
        }
        println!();
    }

    // Weighted version on [0,1] with w(x) = x: bounded by 2.8222954.
    let seg = SetSpec::segment(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
        .with_boundary_samples(512);
    let verifier = Verifier::new(seg, WeightSpec::IncompleteLorentz, 128, 2).unwrap();
    println!("weighted partition on [0,1], w(x) = x, m = 2 (bound 2.8222954):");
    for n in [16usize, 32, 64] {
        let exp = verifier.fekete_partition_experiment(2, n).unwrap();
        println!("{n:>6} {:>12.6}", exp.ratio_root);
    }
}
