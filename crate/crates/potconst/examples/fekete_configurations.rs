//! Extremal point configurations and the equilibrium quadrature they carry.

use num_complex::Complex64;
use potconst::{
    counting_measure, fekete_points, frostman_defect, potential, transfinite_diameter_estimate,
    SetSpec, WeightSpec,
};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() {
    // Small disk configuration: n = 3 forms an equilateral triangle.
    let disk = SetSpec::disk(c(0.0, 0.0), 1.0).with_boundary_samples(360);
    let tri = fekete_points(&disk, 3, None).unwrap();
    println!("disk n=3 ({:?}):", tri.method);
    for p in &tri.points {
        println!("  ({:+.6}, {:+.6})", p.re, p.im);
    }
    println!("  log Vandermonde = {:.12}", tri.log_vandermonde);
    println!();

    // Square: the counting measure approximates the equilibrium measure.
    let square = SetSpec::polygon(vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0)])
        .with_boundary_samples(512);
    println!(
        "{:>4} {:>14} {:>14}",
        "n", "diam estimate", "Frostman defect"
    );
    for n in [16usize, 32, 64, 128] {
        let ens = fekete_points(&square.densified(4 * n), n, None).unwrap();
        let mu = counting_measure(&ens).unwrap();
        let d = transfinite_diameter_estimate(&ens);
        // log cap(square) = log 0.5901703.
        let defect = frostman_defect(&square, &mu, 0.5901703_f64.ln()).unwrap();
        println!("{n:>4} {d:>14.6} {defect:>14.6}");
    }
    println!();

    // Weighted configuration for w(x) = x on [0,1]: the points stay inside
    // the support [1/4, 1] of the weighted equilibrium measure.
    let seg = SetSpec::segment(c(0.0, 0.0), c(1.0, 0.0)).with_boundary_samples(512);
    let weighted = fekete_points(&seg, 8, Some(&WeightSpec::IncompleteLorentz)).unwrap();
    let xs: Vec<f64> = weighted.points.iter().map(|p| p.re).collect();
    println!(
        "weighted n=8 on [0,1], w(x)=x: min x = {:.4}, all >= 1/4",
        xs.iter().cloned().fold(1.0, f64::min)
    );

    // The counting measure potential at interior points approaches log cap.
    let ens = fekete_points(&disk.densified(256), 64, None).unwrap();
    let mu = counting_measure(&ens).unwrap();
    println!(
        "disk n=64 counting-measure potential at 0: {:+.2e} (log cap = 0)",
        potential(&mu, c(0.0, 0.0))
    );
}
