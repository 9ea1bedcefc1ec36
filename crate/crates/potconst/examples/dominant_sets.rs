//! Dominant sets: where the farthest-point distance is attained.
//!
//! A finite dominant set means `C_E(m) = C_E` once m covers it (segments,
//! obtuse triangles); a smooth boundary forces an infinite dominant set and
//! a strict gap `C_E(m) < C_E` for every m.

use num_complex::Complex64;
use potconst::{dominant_set, equilibrium_measure, Cardinality, SetSpec};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn describe(name: &str, set: &SetSpec, n: usize) {
    let mu = equilibrium_measure(set, n).unwrap();
    let report = dominant_set(set, &mu).unwrap();
    match report.cardinality {
        Cardinality::Finite(k) => {
            println!("{name}: finite dominant set of {k} points");
            for p in &report.set_points {
                println!("   ({:+.6}, {:+.6})", p.re, p.im);
            }
        }
        Cardinality::Infinite => {
            println!(
                "{name}: infinite dominant set (attainers fill the boundary; greedy cover used {} points)",
                report.set_points.len()
            );
        }
    }
}

fn main() {
    describe(
        "segment [-1,1]  ",
        &SetSpec::segment(c(-1.0, 0.0), c(1.0, 0.0)),
        128,
    );
    describe(
        "obtuse triangle ",
        &SetSpec::polygon(vec![c(0.0, 0.0), c(4.0, 0.0), c(1.0, 1.0)]),
        96,
    );
    describe(
        "acute triangle  ",
        &SetSpec::polygon(vec![c(0.0, 0.0), c(1.0, 0.0), c(0.5, 0.8)]),
        96,
    );
    describe("unit disk       ", &SetSpec::disk(c(0.0, 0.0), 1.0), 128);
}
