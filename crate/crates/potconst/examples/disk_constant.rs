//! The sharpest multiplicative constant for norm products on a disk.
//!
//! For the closed unit disk the constant is exactly 2: products of
//! polynomial sup norms satisfy `prod ||P_j|| <= 2^n ||prod P_j||`. The
//! closed form is cross-checked against the equilibrium quadrature route.

use num_complex::Complex64;
use potconst::{constant_ce, equilibrium_measure, potential, SetSpec};

fn main() {
    let disk = SetSpec::disk(Complex64::new(0.0, 0.0), 1.0);
    let report = constant_ce(&disk, 1024).unwrap();
    println!("closed form:   C_D = {:.15}", report.value);
    println!("               M_D = {:.15}", report.exp_value);

    // Quadrature route: integrate log d_D against the equilibrium measure.
    // Every boundary point sees farthest distance 2, and log cap(D) = 0.
    let mu = equilibrium_measure(&disk, 1024).unwrap();
    let quad: f64 = mu.integrate(|z| disk.farthest_distance(z).unwrap().ln());
    println!("quadrature:    C_D = {:.15}  (n = {})", quad, mu.len());

    // Frostman sanity: the equilibrium potential vanishes at the center.
    println!(
        "potential at 0:      {:.3e}  (log cap(D) = 0)",
        potential(&mu, Complex64::new(0.0, 0.0))
    );

    // Invariance under similarity: any disk gives the same constant.
    let other = SetSpec::disk(Complex64::new(3.0, -1.0), 0.125);
    let other_report = constant_ce(&other, 64).unwrap();
    println!("shifted/scaled disk: C = {:.15}", other_report.value);
}
