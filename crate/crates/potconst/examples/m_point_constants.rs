//! The m-tuple constants C_E(m): boundary-tuple optimization vs the disk
//! closed form.
//!
//! On a disk the optimizer must reproduce
//! `C_D(m) = (m/pi) int_0^(pi/m) log(2 cos(t/2)) dt`, which increases to
//! `log 2` as m grows. On a segment the endpoints dominate, so
//! `C_E(m) = C_E` already at m = 2.

use num_complex::Complex64;
use potconst::{constant_cem, disk_constant_closed_form, segment_constant, SetSpec};

fn main() {
    let disk = SetSpec::disk(Complex64::new(0.0, 0.0), 1.0).with_boundary_samples(1024);
    println!(
        "{:>3} {:>14} {:>14} {:>11} {:>12}",
        "m", "optimizer", "closed form", "difference", "log2 - C(m)"
    );
    for m in 2..=8usize {
        let rep = constant_cem(&disk, m, 1024, 0).unwrap();
        let closed = disk_constant_closed_form(m).unwrap();
        println!(
            "{m:>3} {:>14.8} {:>14.8} {:>11.2e} {:>12.5}",
            rep.value,
            closed,
            rep.error_hint,
            std::f64::consts::LN_2 - rep.value
        );
    }
    println!();

    let segment = SetSpec::segment(Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0))
        .with_boundary_samples(512);
    let rep = constant_cem(&segment, 2, 1024, 0).unwrap();
    println!(
        "segment: C(2) = {:.8} vs C = {:.8} (endpoints dominate)",
        rep.value,
        segment_constant()
    );
    let tuple = rep.maximizer_tuple.unwrap();
    println!(
        "maximizing pair: ({:+.4}, {:+.4})",
        tuple[0].re, tuple[1].re
    );
}
