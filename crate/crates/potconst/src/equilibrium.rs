//! Equilibrium measures, logarithmic capacity and potential evaluation.
//!
//! Analytic rules exist for disks (uniform arclength measure, `cap = r`) and
//! segments (Chebyshev distribution, `cap = L/4`). Every other set of
//! positive capacity is handled through extremal point configurations: the
//! normalized counting measure of a Fekete ensemble converges weak* to the
//! equilibrium measure, and the Fekete polynomial norm gives the capacity
//! estimate.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fekete;
use crate::geometry::{SetKind, SetSpec};
use crate::numeric::weighted_sum;

/// A finite weighted node set approximating a positive Borel measure.
///
/// Serializes as `{"nodes": [[re, im], ...], "weights": [...]}`; the total
/// mass is recomputed on deserialization.
#[derive(Debug, Clone)]
pub struct QuadMeasure {
    pub nodes: Vec<Complex64>,
    pub weights: Vec<f64>,
    pub total_mass: f64,
}

#[derive(Serialize, Deserialize)]
struct QuadMeasureWire {
    nodes: Vec<Complex64>,
    weights: Vec<f64>,
}

impl Serialize for QuadMeasure {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        QuadMeasureWire {
            nodes: self.nodes.clone(),
            weights: self.weights.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuadMeasure {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let wire = QuadMeasureWire::deserialize(deserializer)?;
        QuadMeasure::new(wire.nodes, wire.weights).map_err(serde::de::Error::custom)
    }
}

impl QuadMeasure {
    /// Build a measure from nodes and non-negative weights.
    pub fn new(nodes: Vec<Complex64>, weights: Vec<f64>) -> Result<Self> {
        if nodes.is_empty() || nodes.len() != weights.len() {
            return Err(Error::InvalidMeasure(
                "nodes and weights must be non-empty and of equal length".into(),
            ));
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidMeasure(
                "weights must be finite and >= 0".into(),
            ));
        }
        let total_mass = crate::numeric::compensated_sum(weights.iter().copied());
        Ok(QuadMeasure {
            nodes,
            weights,
            total_mass,
        })
    }

    /// Equal-weight probability measure on the given points.
    pub fn counting(nodes: Vec<Complex64>) -> Result<Self> {
        let n = nodes.len();
        if n == 0 {
            return Err(Error::InvalidMeasure(
                "counting measure needs at least one node".into(),
            ));
        }
        let w = 1.0 / n as f64;
        let mut m = QuadMeasure::new(nodes, vec![w; n])?;
        m.total_mass = 1.0;
        Ok(m)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn is_probability(&self) -> bool {
        (self.total_mass - 1.0).abs() <= 1e-12 * self.total_mass.abs().max(1.0)
    }

    /// Scale every weight by `c`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        QuadMeasure::new(
            self.nodes.clone(),
            self.weights.iter().map(|w| c * w).collect(),
        )
    }

    /// Integrate `f` against the measure with compensated summation.
    pub fn integrate(&self, mut f: impl FnMut(Complex64) -> f64) -> f64 {
        let values: Vec<f64> = self.nodes.iter().map(|z| f(*z)).collect();
        weighted_sum(&self.weights, &values)
    }

    /// CSV export with columns `re,im,weight`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("re,im,weight\n");
        for (z, w) in self.nodes.iter().zip(&self.weights) {
            out.push_str(&format!("{},{},{}\n", z.re, z.im, w));
        }
        out
    }
}

/// How a capacity value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CapacityMethod {
    Analytic,
    FeketeProduct,
    ChebyshevNorm,
}

/// Logarithmic capacity value with method tag and an a-posteriori error hint.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CapacityEstimate {
    pub value: f64,
    pub method: CapacityMethod,
    pub n_used: usize,
    pub error_hint: f64,
}

/// Equilibrium measure of the set, discretized with `n_nodes` nodes.
///
/// Disk and segment use their known closed-form measures; all other kinds of
/// positive capacity return the normalized counting measure of an `n_nodes`
/// Fekete ensemble. Finite point sets have zero capacity and are rejected.
pub fn equilibrium_measure(set: &SetSpec, n_nodes: usize) -> Result<QuadMeasure> {
    set.validate()?;
    if set.is_finite_points() {
        return Err(Error::ZeroCapacity);
    }
    if n_nodes == 0 {
        return Err(Error::InvalidMeasure(
            "need at least one quadrature node".into(),
        ));
    }
    match &set.kind {
        SetKind::Disk { center, radius } => {
            let nodes = (0..n_nodes)
                .map(|k| {
                    let theta = 2.0 * std::f64::consts::PI * k as f64 / n_nodes as f64;
                    center + Complex64::from_polar(*radius, theta)
                })
                .collect();
            QuadMeasure::counting(nodes)
        }
        SetKind::Segment { a, b } => {
            // Chebyshev-Gauss nodes of the arcsine density, mapped affinely.
            let mid = 0.5 * (a + b);
            let half = 0.5 * (b - a);
            let nodes = (1..=n_nodes)
                .map(|k| {
                    let x = (std::f64::consts::PI * (2.0 * k as f64 - 1.0)
                        / (2.0 * n_nodes as f64))
                        .cos();
                    mid + half * x
                })
                .collect();
            QuadMeasure::counting(nodes)
        }
        _ => {
            let ensemble = fekete::fekete_points(&set.densified(4 * n_nodes), n_nodes, None)?;
            fekete::counting_measure(&ensemble)
        }
    }
}

/// Logarithmic capacity: analytic where known, Fekete estimates otherwise.
pub fn capacity(set: &SetSpec, n: usize) -> Result<CapacityEstimate> {
    set.validate()?;
    match &set.kind {
        SetKind::Disk { radius, .. } => Ok(CapacityEstimate {
            value: *radius,
            method: CapacityMethod::Analytic,
            n_used: 0,
            error_hint: 0.0,
        }),
        SetKind::Segment { a, b } => Ok(CapacityEstimate {
            value: (b - a).norm() / 4.0,
            method: CapacityMethod::Analytic,
            n_used: 0,
            error_hint: 0.0,
        }),
        SetKind::FinitePoints { .. } => Err(Error::ZeroCapacity),
        _ => capacity_estimate_fekete(set, n),
    }
}

/// Capacity estimated from a degree-`n` Fekete ensemble, regardless of
/// whether an analytic value exists. The reported value is the Chebyshev-norm
/// estimate `||F_n||_E^(1/n)`; the error hint is its distance to the
/// transfinite-diameter estimate from pairwise distances.
pub fn capacity_estimate_fekete(set: &SetSpec, n: usize) -> Result<CapacityEstimate> {
    set.validate()?;
    if set.is_finite_points() {
        return Err(Error::ZeroCapacity);
    }
    if n < 2 {
        return Err(Error::InvalidMeasure(
            "capacity estimate needs n >= 2".into(),
        ));
    }
    // Extremal points cluster near corners and endpoints; a 4x uniform pool
    // leaves several percent of grid bias in the norm, so oversample harder
    // here (capped to keep the pairwise seeding cheap).
    let pool = (32 * n).clamp(4 * n, 8192).max(4 * n);
    let ensemble = fekete::fekete_points(&set.densified(pool), n, None)?;
    let cheb = fekete::fekete_polynomial_norm(&ensemble, set, None)?;
    let product = fekete::transfinite_diameter_estimate(&ensemble);
    Ok(CapacityEstimate {
        value: cheb,
        method: CapacityMethod::ChebyshevNorm,
        n_used: n,
        error_hint: (cheb - product).abs(),
    })
}

/// Logarithmic potential `sum w_i log|z - t_i|`.
///
/// A node hit returns the negative-infinity sentinel rather than an error, so
/// suprema of potentials over a set remain well defined.
pub fn potential(measure: &QuadMeasure, z: Complex64) -> f64 {
    let values: Vec<f64> = measure.nodes.iter().map(|t| (z - t).norm().ln()).collect();
    if measure
        .weights
        .iter()
        .zip(&values)
        .any(|(w, v)| *w > 0.0 && *v == f64::NEG_INFINITY)
    {
        return f64::NEG_INFINITY;
    }
    weighted_sum(&measure.weights, &values)
}

/// Green-function style bound `g(z) = potential(mu_E, z) - log cap(E)`.
///
/// Non-negative on `E` up to quadrature tolerance for regular sets, and
/// `g(z) ~ log|z| - log cap` near infinity.
pub fn green_bound(
    set: &SetSpec,
    measure: &QuadMeasure,
    cap: &CapacityEstimate,
    z: Complex64,
) -> Result<f64> {
    set.validate()?;
    if cap.value <= 0.0 {
        return Err(Error::ZeroCapacity);
    }
    if !measure.is_probability() {
        return Err(Error::InvalidMeasure(
            "green bound needs a probability measure".into(),
        ));
    }
    Ok(potential(measure, z) - cap.value.ln())
}

/// Maximum Frostman defect `|potential(mu, z) - log cap|` over boundary
/// probes kept away from the measure's atoms.
///
/// Atomic approximations of the equilibrium measure have logarithmic spikes
/// at their nodes, so probes closer to a node than a quarter of the local
/// node spacing are skipped.
pub fn frostman_defect(set: &SetSpec, measure: &QuadMeasure, log_cap: f64) -> Result<f64> {
    let probes = set.densified(2 * measure.len() + 1).boundary_nodes()?;
    let spacing = set.diameter()? / measure.len() as f64;
    let mut worst: f64 = 0.0;
    let mut used = 0;
    for z in probes {
        let near = measure
            .nodes
            .iter()
            .map(|t| (z - t).norm())
            .fold(f64::INFINITY, f64::min);
        if near < 0.25 * spacing {
            continue;
        }
        used += 1;
        worst = worst.max((potential(measure, z) - log_cap).abs());
    }
    if used == 0 {
        return Err(Error::NumericFailure("no valid Frostman probes".into()));
    }
    Ok(worst)
}
