//! Seeded random factorization experiments against the inequality chain
//! `sum_j log ||P_j|| <= n C_E(m) + log ||prod P_j|| <= n C_E + log ||prod P_j||`.
//!
//! Emits tidy CSV on stdout; pipe it into a file for plotting.

use num_complex::Complex64;
use potconst::{FactorizationExperiment, SetSpec, Verifier, WeightSpec};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() {
    let sets = [
        SetSpec::disk(c(0.0, 0.0), 1.0),
        SetSpec::segment(c(-1.0, 0.0), c(1.0, 0.0)),
        SetSpec::polygon(vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0)]),
        SetSpec::polygon(vec![c(0.0, 0.0), c(4.0, 0.0), c(1.0, 1.0)]),
    ];

    print!("{}", FactorizationExperiment::CSV_HEADER);
    let mut min_slack = f64::INFINITY;
    for (si, set) in sets.iter().enumerate() {
        let verifier = Verifier::new(set.clone(), WeightSpec::Unit, 256, 0).unwrap();
        for m in [2usize, 3, 5] {
            let batch = verifier
                .random_factorizations(m, 16, 42 + si as u64, 10)
                .unwrap();
            for exp in &batch {
                min_slack = min_slack.min(exp.rhs_m - exp.lhs);
                print!("{}", exp.csv_row());
            }
        }
    }
    eprintln!("# all chains hold; minimum slack rhs_m - lhs = {min_slack:.4}");
}
