//! Logarithmic capacity: analytic values and Fekete-based estimates.
//!
//! The Chebyshev-norm estimate `||F_n||^(1/n)` converges to the capacity
//! from above; the transfinite-diameter estimate from pairwise distances
//! decreases to the same limit. The square's reference value is
//! 0.59017..., from the conformal map of its exterior.

use num_complex::Complex64;
use potconst::{capacity, capacity_estimate_fekete, SetSpec};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() {
    let disk = SetSpec::disk(c(0.0, 0.0), 1.0);
    let segment = SetSpec::segment(c(-1.0, 0.0), c(1.0, 0.0));
    let square = SetSpec::polygon(vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0)]);

    println!(
        "analytic: cap(disk r=1) = {}",
        capacity(&disk, 16).unwrap().value
    );
    println!(
        "analytic: cap([-1,1])   = {}",
        capacity(&segment, 16).unwrap().value
    );
    println!();

    println!(
        "{:<10} {:>6} {:>12} {:>12}",
        "set", "n", "estimate", "spread"
    );
    for n in [25usize, 50, 100, 200] {
        for (name, set) in [("disk", &disk), ("segment", &segment), ("square", &square)] {
            let est = capacity_estimate_fekete(set, n).unwrap();
            println!(
                "{name:<10} {n:>6} {:>12.6} {:>12.2e}",
                est.value, est.error_hint
            );
        }
    }
    println!();
    println!("square reference value: 0.590170 (estimates plateau towards it)");
}
