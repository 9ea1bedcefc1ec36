//! Circle-average mass scan for the representing measure of log d^w.
//!
//! `log max_k w_k |z - p_k|` is subharmonic with a unit-mass representing
//! measure; the radial derivative of its circle average estimates how much
//! of that mass sits inside `|z| < r`. For `{-1, 1}` the measure is the
//! Cauchy distribution on the bisector, so the mass inside radius r is
//! `(2/pi) atan r` exactly; the estimates track that curve.

use num_complex::Complex64;
use potconst::{circle_average, riesz_mass_check};

fn main() {
    let points = [Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0)];
    let weights = [1.0, 1.0];
    let radii = [4.0, 10.0, 100.0, 1000.0, 10000.0];

    println!("points {{-1, 1}}, unit weights:");
    println!(
        "{:>10} {:>14} {:>14}",
        "radius", "mass estimate", "(2/pi) atan r"
    );
    for (r, mass) in riesz_mass_check(&points, &weights, &radii).unwrap() {
        println!(
            "{r:>10} {mass:>14.8} {:>14.8}",
            2.0 / std::f64::consts::PI * r.atan()
        );
    }
    println!();

    // Far field: L(r) - log r tends to sup log w (here 0).
    println!("far-field drift of the circle average:");
    for r in [100.0, 1e3, 1e4] {
        let l = circle_average(&points, &weights, r, 2048);
        println!("  r = {r:>8}: L(r) - log r = {:+.3e}", l - r.ln());
    }
    println!();

    // Unequal weights shift the far field by sup log w.
    let points = [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
    let weights = [1.0, 0.5];
    println!("points {{0, 1}}, weights {{1, 1/2}}:");
    for r in [100.0, 1e4] {
        let l = circle_average(&points, &weights, r, 2048);
        println!(
            "  r = {r:>8}: L(r) - log r = {:+.3e}  (sup log w = 0)",
            l - r.ln()
        );
    }
}
