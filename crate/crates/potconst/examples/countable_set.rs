//! No finite constant survives on countable sets.
//!
//! For any prescribed growth sequence A_n there is a countable compact set
//! E = {1} u {1/(2 A_k)} u {0} on which the norm-product ratio of the linear
//! factors P_j(x) = x - x_j beats A_n at degree n. Evaluated both in floats
//! and in exact rational arithmetic.

use num_traits::ToPrimitive;
use potconst::{countable_set_demo, countable_set_demo_exact};

fn main() {
    // Linear growth.
    let a: Vec<f64> = (1..=10).map(|k| k as f64).collect();
    println!("A_k = k:");
    println!(
        "{:>3} {:>18} {:>8} {:>8}",
        "n", "ratio (exact)", "bound", "holds"
    );
    for n in [2usize, 4, 6, 8, 10] {
        let exact = countable_set_demo_exact(&a, n).unwrap();
        let ratio = exact.to_f64().unwrap();
        println!("{n:>3} {ratio:>18.6} {:>8} {:>8}", n, ratio >= n as f64);
    }
    println!();

    // Exponential growth: the ratio keeps up with 2^k.
    let a: Vec<f64> = (1..=12).map(|k| (1u64 << k) as f64).collect();
    println!("A_k = 2^k:");
    for n in [4usize, 8, 12] {
        let ratio = countable_set_demo(&a, n).unwrap();
        println!("  n = {n:>2}: ratio = {ratio:.3e} >= {:.3e}", a[n - 1]);
    }
}
