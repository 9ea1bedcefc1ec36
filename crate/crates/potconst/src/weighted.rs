//! External-field (weighted) analogues: admissible weights, the weighted
//! farthest-point distance `d_E^w(z) = sup w(t)|z - t|`, built-in weighted
//! equilibrium pairs `(mu_w, F_w)` for the two classical examples with known
//! closed forms, the constants `C_E^w` and `C_E^w(m)`, and a circle-average
//! mass check for the representing measure of `log d^w`.
//!
//! Only four weight kinds are supported. The incomplete-polynomial weight
//! `w(x) = x` on `[0,1]` and the radial weight `w(z) = exp(-|z|)` are the two
//! cases with explicit `(mu_w, F_w)`; `Unit` reduces every weighted operation
//! to its unweighted counterpart, and `Tabulated` carries user data on the
//! boundary grid. General admissible-weight equilibrium solvers are out of
//! scope.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::constants::{constant_ce, constant_cem, ConstantMethod, ConstantReport};
use crate::equilibrium::{self, QuadMeasure};
use crate::error::{Error, Result};
use crate::geometry::{SetKind, SetSpec};
use crate::numeric::{
    adaptive_quadrature, compensated_sum, gauss_chebyshev_third, gauss_legendre, weighted_sum,
};
use crate::optimize::{log_distance_gains, TupleObjective};

/// Admissible weight functions on a set.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightSpec {
    /// `w == 1`; every weighted operation reduces to the unweighted one.
    Unit,
    /// `w(x) = x` on the segment `[0, 1]` (incomplete polynomials).
    IncompleteLorentz,
    /// `w(z) = exp(-|z|)` on the plane, truncated to `|z| <= R_trunc`.
    RadialExp { r_trunc: f64 },
    /// Explicit values on the boundary nodes of the set.
    Tabulated { values: Vec<f64> },
}

/// Breakpoint of the piecewise closed form of `d^w` for the Lorentz weight.
pub const LORENTZ_BREAKPOINT: f64 = 2.0 * (std::f64::consts::SQRT_2 - 1.0);

/// Modified Robin constant for the Lorentz weight: `8 log 2 - 3 log 3`.
pub fn lorentz_robin_constant() -> f64 {
    8.0 * std::f64::consts::LN_2 - 3.0 * 3.0_f64.ln()
}

impl WeightSpec {
    pub fn kind_name(&self) -> &'static str {
        match self {
            WeightSpec::Unit => "unit",
            WeightSpec::IncompleteLorentz => "lorentz",
            WeightSpec::RadialExp { .. } => "radial_exp",
            WeightSpec::Tabulated { .. } => "tabulated",
        }
    }

    /// Check the admissibility requirements of this weight on the given set.
    pub fn is_admissible_on(&self, set: &SetSpec) -> Result<()> {
        set.validate()?;
        match self {
            WeightSpec::Unit => Ok(()),
            WeightSpec::IncompleteLorentz => match &set.kind {
                SetKind::Segment { a, b } => {
                    let zero = Complex64::new(0.0, 0.0);
                    let one = Complex64::new(1.0, 0.0);
                    let fits = ((a - zero).norm() < 1e-12 && (b - one).norm() < 1e-12)
                        || ((a - one).norm() < 1e-12 && (b - zero).norm() < 1e-12);
                    if fits {
                        Ok(())
                    } else {
                        Err(Error::NotAdmissible(
                            "the Lorentz weight lives on the segment [0,1]".into(),
                        ))
                    }
                }
                _ => Err(Error::NotAdmissible(
                    "the Lorentz weight lives on the segment [0,1]".into(),
                )),
            },
            WeightSpec::RadialExp { r_trunc } => {
                if *r_trunc < 4.0 {
                    return Err(Error::NotAdmissible(
                        "radial weight needs R_trunc >= 4 so that |z| w(z) is negligible at the cut".into(),
                    ));
                }
                match &set.kind {
                    SetKind::Disk { center, radius } if center.norm() < 1e-12 && *radius >= 4.0 => Ok(()),
                    _ => Err(Error::NotAdmissible(
                        "radial weight expects a disk centered at 0 with radius >= 4 as the plane truncation".into(),
                    )),
                }
            }
            WeightSpec::Tabulated { values } => {
                let nodes = set.boundary_nodes()?;
                if values.len() != nodes.len() {
                    return Err(Error::NotAdmissible(format!(
                        "tabulated weight has {} values but the set has {} boundary nodes",
                        values.len(),
                        nodes.len()
                    )));
                }
                if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
                    return Err(Error::NotAdmissible(
                        "tabulated values must be finite and >= 0".into(),
                    ));
                }
                if values.iter().all(|v| *v == 0.0) {
                    return Err(Error::NotAdmissible(
                        "tabulated weight vanishes identically".into(),
                    ));
                }
                Ok(())
            }
        }
    }

    /// `log w(z)` for the analytic kinds; `None` when the weight has no value
    /// there (off the set, or tabulated off the grid).
    pub fn log_value_at(&self, set: &SetSpec, z: Complex64) -> Option<f64> {
        match self {
            WeightSpec::Unit => Some(0.0),
            WeightSpec::IncompleteLorentz => {
                let _ = set;
                if z.im.abs() <= 1e-9 && (-1e-12..=1.0 + 1e-12).contains(&z.re) {
                    Some(z.re.clamp(0.0, 1.0).ln())
                } else {
                    None
                }
            }
            WeightSpec::RadialExp { .. } => Some(-z.norm()),
            WeightSpec::Tabulated { .. } => None,
        }
    }

    /// `log w` at each given node. For tabulated weights the nodes must be
    /// the set's own boundary grid.
    pub fn log_values_on(&self, set: &SetSpec, nodes: &[Complex64]) -> Result<Vec<f64>> {
        match self {
            WeightSpec::Tabulated { values } => {
                if values.len() != nodes.len() {
                    return Err(Error::NotAdmissible(
                        "tabulated weight values do not match the node grid".into(),
                    ));
                }
                Ok(values.iter().map(|v| v.ln()).collect())
            }
            _ => nodes
                .iter()
                .map(|z| {
                    self.log_value_at(set, *z).ok_or_else(|| {
                        Error::NotAdmissible(format!(
                            "weight undefined at node ({}, {})",
                            z.re, z.im
                        ))
                    })
                })
                .collect(),
        }
    }

    /// Additional evaluation grid covering the support of the weighted
    /// equilibrium measure, where weighted norms are attained.
    pub fn support_grid(&self, set: &SetSpec, samples: usize) -> Result<Vec<Complex64>> {
        match self {
            WeightSpec::IncompleteLorentz => {
                let mut grid =
                    SetSpec::segment(Complex64::new(0.25, 0.0), Complex64::new(1.0, 0.0))
                        .with_boundary_samples(samples.max(64))
                        .boundary_nodes()?;
                let _ = set;
                grid.push(Complex64::new(LORENTZ_BREAKPOINT, 0.0));
                Ok(grid)
            }
            WeightSpec::RadialExp { .. } => {
                Ok(polar_grid(Complex64::new(0.0, 0.0), 1.0, samples.max(64)))
            }
            _ => Ok(Vec::new()),
        }
    }

    /// `sup over E of w`.
    pub fn sup_weight(&self, set: &SetSpec) -> Result<f64> {
        match self {
            WeightSpec::Unit | WeightSpec::IncompleteLorentz | WeightSpec::RadialExp { .. } => {
                Ok(1.0)
            }
            WeightSpec::Tabulated { values } => {
                self.is_admissible_on(set)?;
                Ok(values.iter().copied().fold(0.0, f64::max))
            }
        }
    }
}

/// Deterministic polar node grid over the disk `|z - center| <= rmax` with at
/// least `min_count` points, ring angles staggered to avoid radial alignment.
pub fn polar_grid(center: Complex64, rmax: f64, min_count: usize) -> Vec<Complex64> {
    let rings = ((min_count as f64 / std::f64::consts::PI).sqrt().ceil() as usize).max(2);
    let mut grid = vec![center];
    for k in 1..=rings {
        let r = rmax * k as f64 / rings as f64;
        let count = ((2.0 * std::f64::consts::PI * k as f64).ceil() as usize).max(8);
        let offset = 0.37 * k as f64;
        for j in 0..count {
            let theta = offset + 2.0 * std::f64::consts::PI * j as f64 / count as f64;
            grid.push(center + Complex64::from_polar(r, theta));
        }
    }
    grid
}

/// The weighted equilibrium pair `(mu_w, F_w)` with its support.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeightedEquilibrium {
    pub mu_w: QuadMeasure,
    pub f_w: f64,
    pub support_descriptor: SetSpec,
}

/// Weighted equilibrium measure and modified Robin constant.
///
/// `Unit` reduces to the unweighted equilibrium measure with
/// `F = -log cap(E)`. The Lorentz weight uses the known density
/// `(2/(pi x)) sqrt((x - 1/4)/(1 - x))` on `[1/4, 1]`, discretized with a
/// Gauss-Jacobi rule matched to the endpoint exponents, and
/// `F_w = 8 log 2 - 3 log 3`. The radial weight has `d mu_w = dr dtheta/(2 pi)`
/// on the unit disk and `F_w = 1`.
pub fn weighted_equilibrium(
    set: &SetSpec,
    weight: &WeightSpec,
    n_nodes: usize,
) -> Result<WeightedEquilibrium> {
    weight.is_admissible_on(set)?;
    match weight {
        WeightSpec::Unit => {
            let mu = equilibrium::equilibrium_measure(set, n_nodes)?;
            let cap = equilibrium::capacity(set, n_nodes.max(16))?;
            Ok(WeightedEquilibrium {
                mu_w: mu,
                f_w: -cap.value.ln(),
                support_descriptor: set.clone(),
            })
        }
        WeightSpec::IncompleteLorentz => {
            // Map [ -1, 1 ] -> [ 1/4, 1 ] by x = 5/8 + 3u/8; the density
            // becomes the Jacobi weight sqrt((1+u)/(1-u)) times the smooth
            // factor 3/(4 pi x).
            let k = n_nodes.max(16);
            let (u, v) = gauss_chebyshev_third(k)?;
            let mut nodes = Vec::with_capacity(k);
            let mut weights = Vec::with_capacity(k);
            for (ui, vi) in u.iter().zip(&v) {
                let x = 0.625 + 0.375 * ui;
                nodes.push(Complex64::new(x, 0.0));
                weights.push(vi * 3.0 / (4.0 * std::f64::consts::PI * x));
            }
            Ok(WeightedEquilibrium {
                mu_w: QuadMeasure::new(nodes, weights)?,
                f_w: lorentz_robin_constant(),
                support_descriptor: SetSpec::segment(
                    Complex64::new(0.25, 0.0),
                    Complex64::new(1.0, 0.0),
                ),
            })
        }
        WeightSpec::RadialExp { .. } => {
            // Product rule for dr dtheta / (2 pi) on the unit disk.
            let radial = ((n_nodes as f64 / 8.0).sqrt().ceil() as usize).max(2);
            let angular = (n_nodes.div_ceil(radial)).max(8);
            let (x, g) = gauss_legendre(radial)?;
            let mut nodes = Vec::with_capacity(radial * angular);
            let mut weights = Vec::with_capacity(radial * angular);
            for (xi, gi) in x.iter().zip(&g) {
                let r = 0.5 * (xi + 1.0);
                for j in 0..angular {
                    let theta = 2.0 * std::f64::consts::PI * j as f64 / angular as f64;
                    nodes.push(Complex64::from_polar(r, theta));
                    weights.push(0.5 * gi / angular as f64);
                }
            }
            Ok(WeightedEquilibrium {
                mu_w: QuadMeasure::new(nodes, weights)?,
                f_w: 1.0,
                support_descriptor: SetSpec::disk(Complex64::new(0.0, 0.0), 1.0),
            })
        }
        WeightSpec::Tabulated { .. } => Err(Error::UnsupportedWeightKind(
            "tabulated weights have no closed-form equilibrium pair".into(),
        )),
    }
}

/// Weighted farthest-point distance `d_E^w(z) = sup over t in E of w(t)|z - t|`.
pub fn weighted_farthest_distance(set: &SetSpec, weight: &WeightSpec, z: Complex64) -> Result<f64> {
    weight.is_admissible_on(set)?;
    match weight {
        WeightSpec::Unit => set.farthest_distance(z),
        WeightSpec::IncompleteLorentz => {
            // sup of t |z - t| over t in [0, 1]: check t = 1 and the interior
            // critical points, roots of 2t^2 - 3xt + (x^2 + y^2) = 0.
            let (x, y) = (z.re, z.im);
            let f = |t: f64| t * (z - Complex64::new(t, 0.0)).norm();
            let mut best = f(1.0);
            let disc = 9.0 * x * x - 8.0 * (x * x + y * y);
            if disc >= 0.0 {
                let s = disc.sqrt();
                for t in [(3.0 * x - s) / 4.0, (3.0 * x + s) / 4.0] {
                    if (0.0..=1.0).contains(&t) {
                        best = best.max(f(t));
                    }
                }
            }
            Ok(best)
        }
        WeightSpec::RadialExp { .. } => {
            // exp(|z| - 1) inside the unit disk, |z| outside (the supremum
            // sits on the ray through the origin opposite to z).
            let r = z.norm();
            Ok(if r <= 1.0 { (r - 1.0).exp() } else { r })
        }
        WeightSpec::Tabulated { values } => {
            let nodes = set.boundary_nodes()?;
            Ok(nodes
                .iter()
                .zip(values)
                .map(|(t, w)| w * (z - t).norm())
                .fold(0.0, f64::max))
        }
    }
}

/// The weighted constant `C_E^w = int log d_E^w dmu_w + F_w`.
pub fn constant_cew(
    set: &SetSpec,
    weight: &WeightSpec,
    n_quadrature: usize,
) -> Result<ConstantReport> {
    weight.is_admissible_on(set)?;
    match weight {
        WeightSpec::Unit => constant_ce(set, n_quadrature),
        WeightSpec::IncompleteLorentz => {
            // The integrand has a kink where the closed form of d^w switches
            // branch, and the density has endpoint singularities. Split at
            // the breakpoint and substitute x = 1/4 + v^2 and x = 1 - u^2 so
            // each piece is analytic, then integrate adaptively.
            let b = LORENTZ_BREAKPOINT;
            let v0 = (b - 0.25).sqrt();
            let u0 = (1.0 - b).sqrt();
            let left = adaptive_quadrature(
                |v| {
                    let x = 0.25 + v * v;
                    (1.0 - x).ln() * 4.0 * v * v / (std::f64::consts::PI * x * (1.0 - x).sqrt())
                },
                0.0,
                v0,
                1e-13,
            );
            let right = adaptive_quadrature(
                |u| {
                    let x = 1.0 - u * u;
                    (x * x / 4.0).ln() * 4.0 * (x - 0.25).sqrt() / (std::f64::consts::PI * x)
                },
                0.0,
                u0,
                1e-13,
            );
            let value = left + right + lorentz_robin_constant();

            // Cross-check against the plain node sum on the measure grid.
            let eq = weighted_equilibrium(set, weight, n_quadrature)?;
            let dvals: Vec<f64> = eq
                .mu_w
                .nodes
                .iter()
                .map(|t| weighted_farthest_distance(set, weight, *t).map(|d| d.ln()))
                .collect::<Result<_>>()?;
            let node_value = weighted_sum(&eq.mu_w.weights, &dvals) + eq.f_w;

            Ok(ConstantReport {
                value,
                exp_value: value.exp(),
                method: ConstantMethod::Quadrature,
                n_quadrature,
                m: None,
                maximizer_tuple: None,
                restarts: 0,
                error_hint: (value - node_value).abs(),
            })
        }
        WeightSpec::RadialExp { .. } => {
            let value = radial_cew_node_value(set, weight, n_quadrature)?;
            let coarse = radial_cew_node_value(set, weight, (n_quadrature / 2).max(8))?;
            Ok(ConstantReport {
                value,
                exp_value: value.exp(),
                method: ConstantMethod::Quadrature,
                n_quadrature,
                m: None,
                maximizer_tuple: None,
                restarts: 0,
                error_hint: (value - coarse).abs(),
            })
        }
        WeightSpec::Tabulated { .. } => Err(Error::UnsupportedWeightKind(
            "no weighted equilibrium pair for tabulated weights".into(),
        )),
    }
}

fn radial_cew_node_value(set: &SetSpec, weight: &WeightSpec, n: usize) -> Result<f64> {
    let eq = weighted_equilibrium(set, weight, n)?;
    // log d^w(z) = |z| - 1 on the support.
    let values: Vec<f64> = eq.mu_w.nodes.iter().map(|z| z.norm() - 1.0).collect();
    Ok(weighted_sum(&eq.mu_w.weights, &values) + eq.f_w)
}

/// The m-tuple weighted constant
/// `C_E^w(m) = sup over (c_k) in E^m of int log max_k w(c_k)|z - c_k| dmu_w + F_w`,
/// by the same multistart coordinate ascent as the unweighted case, over a
/// grid on `S_w` united with the boundary of `E`.
pub fn constant_cewm(
    set: &SetSpec,
    weight: &WeightSpec,
    m: usize,
    n_quadrature: usize,
    restarts: usize,
) -> Result<ConstantReport> {
    if m < 2 {
        return Err(Error::BadM(m));
    }
    weight.is_admissible_on(set)?;
    let restarts = if restarts == 0 { 8 + m } else { restarts };
    match weight {
        WeightSpec::Unit => constant_cem(set, m, n_quadrature, restarts),
        WeightSpec::IncompleteLorentz | WeightSpec::RadialExp { .. } => {
            let value_at = |n: usize, restarts: usize| -> Result<(f64, Vec<Complex64>, usize)> {
                let eq = weighted_equilibrium(set, weight, n)?;
                let mut grid = match weight {
                    WeightSpec::IncompleteLorentz => {
                        let mut g = set.densified(512).boundary_nodes()?;
                        g.extend(weight.support_grid(set, 256)?);
                        g
                    }
                    _ => {
                        // Support grid plus a token ring on the truncation
                        // circle; the weight is negligible out there.
                        let mut g = weight.support_grid(set, 512)?;
                        let r = match &set.kind {
                            SetKind::Disk { radius, .. } => *radius,
                            _ => 4.0,
                        };
                        for j in 0..16 {
                            let theta = 2.0 * std::f64::consts::PI * j as f64 / 16.0;
                            g.push(Complex64::from_polar(r, theta));
                        }
                        g
                    }
                };
                grid.retain(|z| z.re.is_finite() && z.im.is_finite());
                let logw = weight.log_values_on(set, &grid)?;
                let gain = log_distance_gains(&eq.mu_w.nodes, &grid, Some(&logw));
                let obj = TupleObjective::new(grid, eq.mu_w.weights.clone(), gain);
                let sol = obj.maximize(m, restarts, 0x5eed);
                Ok((
                    sol.value + eq.f_w,
                    obj.tuple_points(&sol.indices),
                    sol.restarts,
                ))
            };
            let (value, tuple, used) = value_at(n_quadrature, restarts)?;
            let (coarse, _, _) = value_at((n_quadrature / 2).max(8), (restarts / 2).max(2))?;
            Ok(ConstantReport {
                value,
                exp_value: value.exp(),
                method: ConstantMethod::Optimizer,
                n_quadrature,
                m: Some(m),
                maximizer_tuple: Some(tuple),
                restarts: used,
                error_hint: (value - coarse).abs(),
            })
        }
        WeightSpec::Tabulated { .. } => Err(Error::UnsupportedWeightKind(
            "no weighted equilibrium pair for tabulated weights".into(),
        )),
    }
}

/// Circle average `L(r)` of `log max_k w_k |z - p_k|` over `|z| = r`,
/// by the periodic trapezoid rule.
pub fn circle_average(points: &[Complex64], weights: &[f64], r: f64, n_angles: usize) -> f64 {
    let terms = (0..n_angles).map(|j| {
        let z = Complex64::from_polar(r, 2.0 * std::f64::consts::PI * j as f64 / n_angles as f64);
        points
            .iter()
            .zip(weights)
            .map(|(p, w)| w * (z - p).norm())
            .fold(f64::NEG_INFINITY, f64::max)
            .ln()
    });
    compensated_sum(terms) / n_angles as f64
}

/// Estimate the mass that the representing measure of `log d^w` puts on the
/// disk `|z| < r`, for each requested radius, via the derivative of the
/// circle average: `mass(D_r) ~ r (L(r+h) - L(r-h)) / (2h)` with `h = r*1e-4`.
///
/// The estimates tend to 1 as `r` grows (the measure has unit total mass).
pub fn riesz_mass_check(
    points: &[Complex64],
    weights_at_points: &[f64],
    radii: &[f64],
) -> Result<Vec<(f64, f64)>> {
    if points.is_empty() || points.len() != weights_at_points.len() {
        return Err(Error::BadRadii(
            "need matching non-empty points and weights".into(),
        ));
    }
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            if p == q {
                return Err(Error::BadRadii("points must be distinct".into()));
            }
        }
    }
    if weights_at_points
        .iter()
        .any(|w| !w.is_finite() || *w <= 0.0)
    {
        return Err(Error::BadRadii("point weights must be positive".into()));
    }
    let reach = points.iter().map(|p| p.norm()).fold(0.0, f64::max) + 1.0;
    if radii.is_empty() || radii.iter().any(|r| !r.is_finite() || *r <= reach) {
        return Err(Error::BadRadii(format!(
            "radii must all exceed max|p_k| + 1 = {reach}"
        )));
    }
    let n_angles = 2048;
    Ok(radii
        .iter()
        .map(|&r| {
            let h = r * 1e-4;
            let hi = circle_average(points, weights_at_points, r + h, n_angles);
            let lo = circle_average(points, weights_at_points, r - h, n_angles);
            (r, r * (hi - lo) / (2.0 * h))
        })
        .collect())
}

// --- JSON wire format -------------------------------------------------------
//
// {"kind": "unit"|"lorentz"|"radial_exp"|"tabulated",
//  "R_trunc"?: number, "values"?: [..]}

#[derive(Serialize, Deserialize)]
struct WeightWire {
    kind: String,
    #[serde(rename = "R_trunc", default, skip_serializing_if = "Option::is_none")]
    r_trunc: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    values: Option<Vec<f64>>,
}

impl Serialize for WeightSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = match self {
            WeightSpec::Unit => WeightWire {
                kind: "unit".into(),
                r_trunc: None,
                values: None,
            },
            WeightSpec::IncompleteLorentz => WeightWire {
                kind: "lorentz".into(),
                r_trunc: None,
                values: None,
            },
            WeightSpec::RadialExp { r_trunc } => WeightWire {
                kind: "radial_exp".into(),
                r_trunc: Some(*r_trunc),
                values: None,
            },
            WeightSpec::Tabulated { values } => WeightWire {
                kind: "tabulated".into(),
                r_trunc: None,
                values: Some(values.clone()),
            },
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WeightSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = WeightWire::deserialize(deserializer)?;
        match wire.kind.as_str() {
            "unit" => Ok(WeightSpec::Unit),
            "lorentz" => Ok(WeightSpec::IncompleteLorentz),
            "radial_exp" => Ok(WeightSpec::RadialExp {
                r_trunc: wire.r_trunc.unwrap_or(4.0),
            }),
            "tabulated" => Ok(WeightSpec::Tabulated {
                values: wire
                    .values
                    .ok_or_else(|| D::Error::custom("tabulated weight needs `values`"))?,
            }),
            other => Err(D::Error::custom(format!("unknown weight kind {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn lorentz_segment() -> SetSpec {
        SetSpec::segment(c(0.0, 0.0), c(1.0, 0.0))
    }

    fn truncated_plane() -> SetSpec {
        SetSpec::disk(c(0.0, 0.0), 6.0)
    }

    #[test]
    fn lorentz_equilibrium_has_unit_mass_on_the_support() {
        let eq =
            weighted_equilibrium(&lorentz_segment(), &WeightSpec::IncompleteLorentz, 64).unwrap();
        assert_abs_diff_eq!(eq.mu_w.total_mass, 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(eq.f_w, lorentz_robin_constant(), epsilon = 0.0);
        for z in &eq.mu_w.nodes {
            assert!(z.re > 0.25 && z.re < 1.0, "node {z} outside (1/4, 1)");
            assert_eq!(z.im, 0.0);
        }
    }

    #[test]
    fn radial_equilibrium_is_exact() {
        let eq = weighted_equilibrium(
            &truncated_plane(),
            &WeightSpec::RadialExp { r_trunc: 6.0 },
            128,
        )
        .unwrap();
        assert_eq!(eq.f_w, 1.0);
        assert_abs_diff_eq!(eq.mu_w.total_mass, 1.0, epsilon = 1e-14);
        assert!(eq.mu_w.nodes.iter().all(|z| z.norm() <= 1.0 + 1e-12));
    }

    #[test]
    fn unit_weight_reduces_to_equilibrium_measure() {
        let disk = SetSpec::disk(c(0.0, 0.0), 1.0);
        let eq = weighted_equilibrium(&disk, &WeightSpec::Unit, 32).unwrap();
        assert_abs_diff_eq!(eq.f_w, 0.0, epsilon = 1e-15);
        let mu = equilibrium::equilibrium_measure(&disk, 32).unwrap();
        assert_eq!(eq.mu_w.nodes, mu.nodes);
    }

    #[test]
    fn weighted_distance_closed_forms() {
        let w = WeightSpec::IncompleteLorentz;
        let set = lorentz_segment();
        assert_abs_diff_eq!(
            weighted_farthest_distance(&set, &w, c(0.3, 0.0)).unwrap(),
            0.7,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            weighted_farthest_distance(&set, &w, c(1.0, 0.0)).unwrap(),
            0.25,
            epsilon = 1e-14
        );
        // At the breakpoint both branches agree.
        let b = LORENTZ_BREAKPOINT;
        assert_abs_diff_eq!(1.0 - b, b * b / 4.0, epsilon = 1e-15);

        let rw = WeightSpec::RadialExp { r_trunc: 6.0 };
        let plane = truncated_plane();
        assert_abs_diff_eq!(
            weighted_farthest_distance(&plane, &rw, c(0.0, 0.0)).unwrap(),
            (-1.0_f64).exp(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            weighted_farthest_distance(&plane, &rw, c(0.0, 2.0)).unwrap(),
            2.0
        );
    }

    #[test]
    fn weighted_distance_matches_grid_oracle() {
        // Brute-force oracle on a fine grid of [0,1].
        let set = lorentz_segment();
        let w = WeightSpec::IncompleteLorentz;
        for z in [c(0.1, 0.0), c(0.6, 0.3), c(-0.4, 0.2), c(1.3, -0.7)] {
            let grid_max = (0..=200_000)
                .map(|k| {
                    let t = k as f64 / 200_000.0;
                    t * (z - c(t, 0.0)).norm()
                })
                .fold(0.0, f64::max);
            let closed = weighted_farthest_distance(&set, &w, z).unwrap();
            assert_abs_diff_eq!(closed, grid_max, epsilon = 1e-8);
            assert!(closed >= grid_max - 1e-12);
        }
    }

    #[test]
    fn lorentz_constant_matches_reference() {
        let report = constant_cew(&lorentz_segment(), &WeightSpec::IncompleteLorentz, 64).unwrap();
        // 25-digit adaptive reference: 1.037550517471886.
        assert_abs_diff_eq!(report.value, 1.037550517471886, epsilon = 1e-9);
        assert_abs_diff_eq!(report.exp_value, 2.8222954, epsilon = 1e-5);
    }

    #[test]
    fn radial_constant_is_one_half() {
        let report = constant_cew(
            &truncated_plane(),
            &WeightSpec::RadialExp { r_trunc: 6.0 },
            64,
        )
        .unwrap();
        assert_abs_diff_eq!(report.value, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn unit_weight_constant_reduces_to_ce() {
        let disk = SetSpec::disk(c(0.0, 0.0), 1.0);
        let report = constant_cew(&disk, &WeightSpec::Unit, 64).unwrap();
        assert_abs_diff_eq!(report.value, std::f64::consts::LN_2, epsilon = 1e-15);
    }

    #[test]
    fn weighted_m_constant_chain() {
        let set = lorentz_segment().with_boundary_samples(512);
        let w = WeightSpec::IncompleteLorentz;
        let cew = constant_cew(&set, &w, 256).unwrap().value;
        let m2 = constant_cewm(&set, &w, 2, 256, 4).unwrap().value;
        assert!(m2 <= cew + 1e-3, "C(2) = {m2} vs C = {cew}");
        // Dense tuples approach the full constant.
        let m64 = constant_cewm(&set, &w, 64, 256, 2).unwrap().value;
        assert!(m64 <= cew + 1e-3);
        assert!(cew - m64 <= 5e-3, "plateau gap {}", cew - m64);
        assert!(m2 <= m64 + 1e-3);
    }

    #[test]
    fn unit_weight_m_constant_delegates() {
        let disk = SetSpec::disk(c(0.0, 0.0), 1.0).with_boundary_samples(256);
        let a = constant_cewm(&disk, &WeightSpec::Unit, 2, 256, 4).unwrap();
        let b = constant_cem(&disk, 2, 256, 4).unwrap();
        assert_eq!(a.value, b.value);
    }

    #[test]
    fn riesz_mass_single_point() {
        let out = riesz_mass_check(&[c(0.0, 0.0)], &[1.0], &[2.0, 10.0, 100.0]).unwrap();
        for (_, mass) in out {
            assert_abs_diff_eq!(mass, 1.0, epsilon = 1e-6);
        }
    }

    #[test]
    fn riesz_mass_two_points_matches_cauchy_tail() {
        // For {-1, 1} the representing measure is Cauchy on the bisector and
        // mass(D_r) = (2/pi) atan r; frozen oracle at r = 100.
        let out = riesz_mass_check(&[c(-1.0, 0.0), c(1.0, 0.0)], &[1.0, 1.0], &[100.0]).unwrap();
        assert_abs_diff_eq!(out[0].1, 0.9936340144701835, epsilon = 1e-4);
    }

    #[test]
    fn riesz_mass_estimates_are_nonneg_and_nondecreasing() {
        let out = riesz_mass_check(
            &[c(-1.0, 0.0), c(1.0, 0.0), c(0.0, 0.5)],
            &[1.0, 0.7, 0.4],
            &[4.0, 16.0, 64.0, 256.0],
        )
        .unwrap();
        let mut prev = -1e-9;
        for (_, mass) in out {
            assert!(mass >= -1e-9);
            assert!(mass >= prev - 1e-6);
            prev = mass;
        }
    }

    #[test]
    fn far_field_circle_average() {
        // L(r) - log r tends to sup log w = max(log 1, log 1/2) = 0.
        let points = [c(0.0, 0.0), c(1.0, 0.0)];
        let weights = [1.0, 0.5];
        let r = 1e4;
        let l = circle_average(&points, &weights, r, 2048);
        assert_abs_diff_eq!(l - r.ln(), 0.0, epsilon = 1e-4);
    }

    #[test]
    fn admissibility_rejections() {
        let disk = SetSpec::disk(c(0.0, 0.0), 1.0);
        assert!(matches!(
            WeightSpec::IncompleteLorentz.is_admissible_on(&disk),
            Err(Error::NotAdmissible(_))
        ));
        assert!(matches!(
            WeightSpec::RadialExp { r_trunc: 2.0 }.is_admissible_on(&disk),
            Err(Error::NotAdmissible(_))
        ));
        assert!(matches!(
            weighted_equilibrium(
                &disk,
                &WeightSpec::Tabulated {
                    values: vec![1.0; 512]
                },
                16
            ),
            Err(Error::UnsupportedWeightKind(_))
        ));
        // Radii must exceed max|p_k| + 1.
        assert!(matches!(
            riesz_mass_check(&[c(0.0, 0.0)], &[1.0], &[0.9]),
            Err(Error::BadRadii(_))
        ));
    }

    #[test]
    fn weight_json_round_trip() {
        let w: WeightSpec = serde_json::from_str(r#"{"kind":"radial_exp","R_trunc":5.0}"#).unwrap();
        assert_eq!(w, WeightSpec::RadialExp { r_trunc: 5.0 });
        let s = serde_json::to_string(&WeightSpec::IncompleteLorentz).unwrap();
        assert_eq!(s, r#"{"kind":"lorentz"}"#);
    }

    proptest! {
        #[test]
        fn weighted_distance_is_lipschitz(
            x1 in -2.0..2.0f64, y1 in -2.0..2.0f64,
            x2 in -2.0..2.0f64, y2 in -2.0..2.0f64,
        ) {
            let z1 = c(x1, y1);
            let z2 = c(x2, y2);
            let set = lorentz_segment();
            let w = WeightSpec::IncompleteLorentz;
            let d1 = weighted_farthest_distance(&set, &w, z1).unwrap();
            let d2 = weighted_farthest_distance(&set, &w, z2).unwrap();
            // sup w = 1 on [0,1].
            prop_assert!((d1 - d2).abs() <= (z1 - z2).norm() + 1e-9);

            let plane = truncated_plane();
            let rw = WeightSpec::RadialExp { r_trunc: 6.0 };
            let d1 = weighted_farthest_distance(&plane, &rw, z1).unwrap();
            let d2 = weighted_farthest_distance(&plane, &rw, z2).unwrap();
            prop_assert!((d1 - d2).abs() <= (z1 - z2).norm() + 1e-9);
        }
    }
}
