//! External-field constants for the two classical weights.
//!
//! For incomplete polynomials (`w(x) = x` on `[0,1]`) the weighted constant
//! is 1.037550517..., i.e. products of weighted norms pick up at most
//! (2.8222954)^n. For the radial weight `w(z) = exp(-|z|)` on the plane the
//! constant is exactly 1/2.

use num_complex::Complex64;
use potconst::{
    constant_cew, constant_cewm, weighted_equilibrium, weighted_farthest_distance, SetSpec,
    WeightSpec,
};

fn main() {
    let seg = SetSpec::segment(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    let lorentz = WeightSpec::IncompleteLorentz;

    let eq = weighted_equilibrium(&seg, &lorentz, 64).unwrap();
    println!("w(x) = x on [0,1]:");
    println!("  support            = [1/4, 1]");
    println!("  modified Robin F_w = {:.15}  (8 log 2 - 3 log 3)", eq.f_w);
    println!("  measure mass       = {:.15}", eq.mu_w.total_mass);
    let rep = constant_cew(&seg, &lorentz, 256).unwrap();
    println!("  C^w                = {:.12}", rep.value);
    println!("  exp(C^w)           = {:.9}", rep.exp_value);
    for x in [0.3, 0.5, 0.9, 1.0] {
        let d = weighted_farthest_distance(&seg, &lorentz, Complex64::new(x, 0.0)).unwrap();
        println!("  d^w({x:.1})           = {d:.6}");
    }
    println!("  m-tuple constants:");
    for m in [2usize, 4, 16] {
        let cm = constant_cewm(&seg, &lorentz, m, 256, 0).unwrap();
        println!(
            "    C^w({m:>2}) = {:.8}  (gap to C^w: {:.2e})",
            cm.value,
            rep.value - cm.value
        );
    }
    println!();

    let plane = SetSpec::disk(Complex64::new(0.0, 0.0), 6.0);
    let radial = WeightSpec::RadialExp { r_trunc: 6.0 };
    let eq = weighted_equilibrium(&plane, &radial, 256).unwrap();
    println!("w(z) = exp(-|z|) on the plane (truncated at |z| = 6):");
    println!("  support            = unit disk, F_w = {}", eq.f_w);
    let rep = constant_cew(&plane, &radial, 256).unwrap();
    println!(
        "  C^w                = {:.12}  (exact value 1/2)",
        rep.value
    );
    println!(
        "  d^w(0) = {:.9}, d^w(2i) = {:.3}",
        weighted_farthest_distance(&plane, &radial, Complex64::new(0.0, 0.0)).unwrap(),
        weighted_farthest_distance(&plane, &radial, Complex64::new(0.0, 2.0)).unwrap()
    );
}
