//! # potconst
//!
//! Numerical potential theory on compact planar sets: sharp constants for the
//! reverse triangle inequality for sums of logarithmic potentials, and for
//! products of (weighted) polynomial supremum norms.
//!
//! The toolkit computes
//!
//! * the set constant `C_E = int log d_E dmu_E - log cap(E)` and its
//!   multiplicative form `M_E = exp(C_E)`, where `d_E` is the farthest-point
//!   distance function and `mu_E` the equilibrium measure;
//! * the m-tuple refinement `C_E(m)`, obtained by optimizing boundary
//!   m-tuples, together with the closed form on disks;
//! * weighted analogues `C_E^w` and `C_E^w(m)` for external fields, with the
//!   two classical examples (`w(x) = x` on `[0,1]` and `w(z) = exp(-|z|)`)
//!   built in;
//! * Fekete/Leja configurations, capacity estimates and equilibrium
//!   quadrature for sets without closed forms;
//! * empirical verification: random factorization experiments, the Fekete
//!   partition construction whose norm ratios climb to `exp(C_E(m))`, circle
//!   average mass checks, and a growing-constant demo on countable sets.
//!
//! ## Quick start
//!
//! ```
//! use num_complex::Complex64;
//! use potconst::{constant_ce, constant_cem, SetSpec};
//!
//! let disk = SetSpec::disk(Complex64::new(0.0, 0.0), 1.0);
//! let c = constant_ce(&disk, 256).unwrap();
//! assert!((c.exp_value - 2.0).abs() < 1e-12);
//!
//! let pair = constant_cem(&disk, 2, 256, 4).unwrap();
//! assert!(pair.value < c.value);
//! ```
//!
//! ## Runnable examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --release -p potconst --example disk_constant
//! cargo run --release -p potconst --example segment_constant
//! cargo run --release -p potconst --example capacity_estimates
//! cargo run --release -p potconst --example fekete_configurations
//! cargo run --release -p potconst --example m_point_constants
//! cargo run --release -p potconst --example dominant_sets
//! cargo run --release -p potconst --example weighted_constants
//! cargo run --release -p potconst --example sharpness_partition
//! cargo run --release -p potconst --example riesz_mass
//! cargo run --release -p potconst --example countable_set
//! cargo run --release -p potconst --example random_factorizations
//! ```
//!
//! A thin `potconst` binary exposes the same operations as subcommands for
//! scripting; see the README.

pub mod cli;
pub mod constants;
pub mod equilibrium;
pub mod error;
pub mod fekete;
pub mod geometry;
pub mod numeric;
pub mod optimize;
pub mod verify;
pub mod weighted;

pub use constants::{
    borwein_constant_log, constant_ce, constant_cem, constant_me, disk_constant_closed_form,
    dominant_set, kneser_constant, kneser_constant_log, segment_constant, Cardinality,
    ConstantMethod, ConstantReport, DominantSetReport,
};
pub use equilibrium::{
    capacity, capacity_estimate_fekete, equilibrium_measure, frostman_defect, green_bound,
    potential, CapacityEstimate, CapacityMethod, QuadMeasure,
};
pub use error::{Error, Result};
pub use fekete::{
    counting_measure, fekete_points, fekete_polynomial_norm, transfinite_diameter_estimate,
    FeketeEnsemble, FeketeMethod,
};
pub use geometry::{max_distance_to_tuple, SetKind, SetSpec};
pub use verify::{
    countable_set_demo, countable_set_demo_exact, partition_by_attainment, FactorizationExperiment,
    Verifier,
};
pub use weighted::{
    circle_average, constant_cew, constant_cewm, riesz_mass_check, weighted_equilibrium,
    weighted_farthest_distance, WeightSpec, WeightedEquilibrium,
};
