//! Extremal point configurations: Fekete/Leja points, unweighted and
//! weighted, on discrete candidate pools.
//!
//! Configurations are built by greedy Leja selection followed by single-point
//! exchange passes until no improving swap exists. Exchange restores local
//! maximality of the log-Vandermonde objective, which is all that capacity
//! estimation and equilibrium quadrature need.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::equilibrium::QuadMeasure;
use crate::error::{Error, Result};
use crate::geometry::{SetKind, SetSpec};
use crate::numeric::compensated_sum;
use crate::weighted::WeightSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FeketeMethod {
    ExactExchange,
    GreedyLeja,
}

/// An ordered extremal configuration on a candidate node set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FeketeEnsemble {
    pub points: Vec<Complex64>,
    pub weighted: bool,
    /// `w(a_i)` per point, present iff `weighted`.
    pub weight_values: Option<Vec<f64>>,
    /// `sum_{i<j} log |a_i - a_j|`, plus `(n-1) sum_i log w(a_i)` when
    /// weighted.
    pub log_vandermonde: f64,
    pub method: FeketeMethod,
}

impl FeketeEnsemble {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// CSV export of the configuration points.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("re,im\n");
        for z in &self.points {
            out.push_str(&format!("{},{}\n", z.re, z.im));
        }
        out
    }
}

struct Pool {
    points: Vec<Complex64>,
    /// ln w at each pool point; empty when unweighted.
    log_weights: Vec<f64>,
}

impl Pool {
    fn weighted(&self) -> bool {
        !self.log_weights.is_empty()
    }

    fn log_dist(&self, p: usize, q: usize) -> f64 {
        (self.points[p] - self.points[q]).norm().ln()
    }
}

fn candidate_pool(set: &SetSpec, weight: Option<&WeightSpec>) -> Result<Pool> {
    set.validate()?;
    if let Some(w) = weight {
        w.is_admissible_on(set)?;
    }
    // The radial weight concentrates its equilibrium problem inside the unit
    // disk, so a boundary-only pool cannot hold its extremal points; sample
    // an area grid over the support instead.
    let points = match (weight, &set.kind) {
        (Some(WeightSpec::RadialExp { .. }), SetKind::Disk { center, .. }) => {
            crate::weighted::polar_grid(*center, 1.1, set.boundary_samples)
        }
        _ => set.boundary_nodes()?,
    };
    let log_weights = match weight {
        Some(w) => w.log_values_on(set, &points)?,
        None => Vec::new(),
    };
    Ok(Pool {
        points,
        log_weights,
    })
}

/// Select `n` points maximizing the (weighted) log-Vandermonde objective over
/// the candidate pool of the set.
///
/// The pool is `boundary_nodes(set)` and must hold at least `4n` candidates.
pub fn fekete_points(
    set: &SetSpec,
    n: usize,
    weight: Option<&WeightSpec>,
) -> Result<FeketeEnsemble> {
    if n < 2 {
        return Err(Error::BadConfig("fekete configuration needs n >= 2".into()));
    }
    let pool = candidate_pool(set, weight)?;
    let pool_size = pool.points.len();
    if pool_size < 4 * n {
        return Err(Error::PoolTooSmall {
            needed: 4 * n,
            available: pool_size,
        });
    }

    let weight_exponent = (n - 1) as f64;
    let lw = |p: usize| -> f64 {
        if pool.weighted() {
            pool.log_weights[p]
        } else {
            0.0
        }
    };

    // Greedy Leja phase. Seed with the best pair, then add the candidate with
    // the largest marginal gain.
    let mut selected: Vec<usize> = Vec::with_capacity(n);
    let mut is_selected = vec![false; pool_size];
    let mut best_pair = (0usize, 1usize);
    let mut best_gain = f64::NEG_INFINITY;
    for p in 0..pool_size {
        for q in (p + 1)..pool_size {
            let gain = pool.log_dist(p, q) + weight_exponent * (lw(p) + lw(q));
            if gain > best_gain {
                best_gain = gain;
                best_pair = (p, q);
            }
        }
    }
    selected.push(best_pair.0);
    selected.push(best_pair.1);
    is_selected[best_pair.0] = true;
    is_selected[best_pair.1] = true;

    // cand_sum[p] = sum over selected j (j != p) of log|pool[p] - a_j|.
    let mut cand_sum = vec![0.0_f64; pool_size];
    for (p, sum) in cand_sum.iter_mut().enumerate() {
        for &s in &selected {
            if p != s {
                *sum += pool.log_dist(p, s);
            }
        }
    }

    while selected.len() < n {
        let mut best = f64::NEG_INFINITY;
        let mut best_p = usize::MAX;
        for p in 0..pool_size {
            if is_selected[p] {
                continue;
            }
            let gain = cand_sum[p] + weight_exponent * lw(p);
            if gain > best {
                best = gain;
                best_p = p;
            }
        }
        if best_p == usize::MAX {
            return Err(Error::NumericFailure(
                "Leja selection exhausted the pool".into(),
            ));
        }
        selected.push(best_p);
        is_selected[best_p] = true;
        for (p, sum) in cand_sum.iter_mut().enumerate() {
            if p != best_p {
                *sum += pool.log_dist(p, best_p);
            }
        }
    }

    // Exchange phase: exhaust single-point swaps until none improves.
    let mut converged = false;
    'passes: for _pass in 0..200 {
        let mut improved = false;
        for slot in selected.iter_mut() {
            let cur = *slot;
            let cur_sum = cand_sum[cur] + weight_exponent * lw(cur);
            let mut best_delta = 1e-11;
            let mut best_p = usize::MAX;
            for (p, sum) in cand_sum.iter().enumerate() {
                if is_selected[p] {
                    continue;
                }
                let delta = sum - pool.log_dist(p, cur) + weight_exponent * lw(p) - cur_sum;
                if delta > best_delta {
                    best_delta = delta;
                    best_p = p;
                }
            }
            if best_p != usize::MAX {
                // Swap cur -> best_p and refresh the candidate sums.
                is_selected[cur] = false;
                is_selected[best_p] = true;
                *slot = best_p;
                for (p, sum) in cand_sum.iter_mut().enumerate() {
                    if p != cur {
                        *sum -= pool.log_dist(p, cur);
                    }
                    if p != best_p {
                        *sum += pool.log_dist(p, best_p);
                    }
                }
                improved = true;
            }
        }
        if !improved {
            converged = true;
            break 'passes;
        }
    }

    let points: Vec<Complex64> = selected.iter().map(|&p| pool.points[p]).collect();
    let weight_values = if pool.weighted() {
        Some(
            selected
                .iter()
                .map(|&p| pool.log_weights[p].exp())
                .collect(),
        )
    } else {
        None
    };
    let log_vandermonde = log_vandermonde_of(&points, weight_values.as_deref());
    Ok(FeketeEnsemble {
        points,
        weighted: pool.weighted(),
        weight_values,
        log_vandermonde,
        method: if converged {
            FeketeMethod::ExactExchange
        } else {
            FeketeMethod::GreedyLeja
        },
    })
}

/// Objective value of an explicit configuration.
pub fn log_vandermonde_of(points: &[Complex64], weight_values: Option<&[f64]>) -> f64 {
    let n = points.len();
    let mut terms = Vec::with_capacity(n * (n - 1) / 2 + n);
    for i in 0..n {
        for j in (i + 1)..n {
            terms.push((points[i] - points[j]).norm().ln());
        }
    }
    if let Some(w) = weight_values {
        let exponent = (n - 1) as f64;
        for wi in w {
            terms.push(exponent * wi.ln());
        }
    }
    compensated_sum(terms)
}

/// One full verification pass of the exchange-optimality invariant: true iff
/// no single-point swap with any pool candidate improves the objective.
pub fn verify_exchange_optimality(
    set: &SetSpec,
    ensemble: &FeketeEnsemble,
    weight: Option<&WeightSpec>,
) -> Result<bool> {
    let pool = candidate_pool(set, weight)?;
    let n = ensemble.len();
    let base = ensemble.log_vandermonde;
    for i in 0..n {
        let mut trial = ensemble.points.clone();
        let mut trial_w = ensemble.weight_values.clone();
        for (p, cand) in pool.points.iter().enumerate() {
            if ensemble.points.contains(cand) {
                continue;
            }
            trial[i] = *cand;
            if let Some(tw) = trial_w.as_mut() {
                tw[i] = pool.log_weights[p].exp();
            }
            let v = log_vandermonde_of(&trial, trial_w.as_deref());
            if v > base + 1e-9 * (1.0 + base.abs()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Normalized counting measure of the configuration.
pub fn counting_measure(ensemble: &FeketeEnsemble) -> Result<QuadMeasure> {
    if ensemble.is_empty() {
        return Err(Error::InvalidMeasure("empty ensemble".into()));
    }
    QuadMeasure::counting(ensemble.points.clone())
}

/// Transfinite-diameter estimate: geometric mean of the pairwise distances,
/// i.e. `exp(2 V / (n (n-1)))` with `V` the plain pairwise log sum.
pub fn transfinite_diameter_estimate(ensemble: &FeketeEnsemble) -> f64 {
    let n = ensemble.len();
    let pairlog = log_vandermonde_of(&ensemble.points, None);
    (2.0 * pairlog / (n as f64 * (n as f64 - 1.0))).exp()
}

/// `sup over E of w(z)^n prod |z - a_l|`, reported as the n-th root.
///
/// The unweighted case is the Chebyshev-norm capacity estimate of the set;
/// the weighted case additionally scans the support grid of the weight.
pub fn fekete_polynomial_norm(
    ensemble: &FeketeEnsemble,
    set: &SetSpec,
    weight: Option<&WeightSpec>,
) -> Result<f64> {
    if ensemble.is_empty() {
        return Err(Error::InvalidMeasure("empty ensemble".into()));
    }
    let n = ensemble.len();
    let nf = n as f64;
    let points = ensemble.points.clone();
    let min_samples = (16 * n).max(set.boundary_samples);

    let log_abs_poly =
        move |z: Complex64| -> f64 { compensated_sum(points.iter().map(|a| (z - a).norm().ln())) };

    let max_log = match weight {
        None => set.boundary_supremum(min_samples, log_abs_poly)?.0,
        Some(WeightSpec::Tabulated { .. }) => {
            // Off-node weight values are undefined; take the discrete max.
            let nodes = set.boundary_nodes()?;
            let lw = weight.unwrap().log_values_on(set, &nodes)?;
            nodes
                .iter()
                .zip(&lw)
                .map(|(z, l)| log_abs_poly(*z) + nf * l)
                .fold(f64::NEG_INFINITY, f64::max)
        }
        Some(w) => {
            let f = {
                let w = w.clone();
                let set = set.clone();
                move |z: Complex64| -> f64 {
                    match w.log_value_at(&set, z) {
                        Some(l) => log_abs_poly(z) + nf * l,
                        None => f64::NEG_INFINITY,
                    }
                }
            };
            let mut best = set.boundary_supremum(min_samples, &f)?.0;
            for z in w.support_grid(set, min_samples)? {
                best = best.max(f(z));
            }
            best
        }
    };
    Ok((max_log / nf).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equilibrium::potential;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn unit_disk(samples: usize) -> SetSpec {
        SetSpec::disk(c(0.0, 0.0), 1.0).with_boundary_samples(samples)
    }

    #[test]
    fn disk_three_points_form_equilateral_triangle() {
        // Independent oracle: brute force over all 3-subsets of the pool.
        let set = unit_disk(360);
        let pool = set.boundary_nodes().unwrap();
        let p = pool.len();
        let mut logd = vec![0.0_f64; p * p];
        for i in 0..p {
            for j in 0..p {
                if i != j {
                    logd[i * p + j] = (pool[i] - pool[j]).norm().ln();
                }
            }
        }
        let mut brute_best = f64::NEG_INFINITY;
        for i in 0..p {
            for j in (i + 1)..p {
                let base = logd[i * p + j];
                for k in (j + 1)..p {
                    let v = base + logd[i * p + k] + logd[j * p + k];
                    if v > brute_best {
                        brute_best = v;
                    }
                }
            }
        }

        let ensemble = fekete_points(&set, 3, None).unwrap();
        assert_eq!(ensemble.method, FeketeMethod::ExactExchange);
        assert_abs_diff_eq!(ensemble.log_vandermonde, brute_best, epsilon = 1e-10);
        // Equilateral up to rotation: all pairwise distances equal sqrt(3).
        for i in 0..3 {
            for j in (i + 1)..3 {
                let d = (ensemble.points[i] - ensemble.points[j]).norm();
                assert_abs_diff_eq!(d, 3.0_f64.sqrt(), epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn segment_two_points_are_the_endpoints() {
        let set = SetSpec::segment(c(-1.0, 0.0), c(1.0, 0.0)).with_boundary_samples(101);
        let ensemble = fekete_points(&set, 2, None).unwrap();
        let mut xs: Vec<f64> = ensemble.points.iter().map(|z| z.re).collect();
        xs.sort_by(f64::total_cmp);
        assert_abs_diff_eq!(xs[0], -1.0);
        assert_abs_diff_eq!(xs[1], 1.0);
    }

    #[test]
    fn weighted_pair_stays_in_the_lorentz_support() {
        let set = SetSpec::segment(c(0.0, 0.0), c(1.0, 0.0)).with_boundary_samples(512);
        let ensemble = fekete_points(&set, 2, Some(&WeightSpec::IncompleteLorentz)).unwrap();
        assert!(ensemble.weighted);
        for z in &ensemble.points {
            assert!(
                z.re >= 0.25 - 1e-9 && z.re <= 1.0 + 1e-12,
                "point {z} outside [1/4,1]"
            );
        }
        let w = ensemble.weight_values.as_ref().unwrap();
        for (z, wv) in ensemble.points.iter().zip(w) {
            assert_abs_diff_eq!(*wv, z.re, epsilon = 1e-12);
        }
    }

    #[test]
    fn pool_too_small_is_reported() {
        let set = unit_disk(16);
        assert!(matches!(
            fekete_points(&set, 8, None),
            Err(Error::PoolTooSmall {
                needed: 32,
                available: 16
            })
        ));
    }

    #[test]
    fn exchange_optimality_invariant_holds() {
        let set = unit_disk(128);
        let ensemble = fekete_points(&set, 6, None).unwrap();
        assert!(verify_exchange_optimality(&set, &ensemble, None).unwrap());
    }

    #[test]
    fn counting_measure_examples() {
        let set = unit_disk(64);
        let ensemble = fekete_points(&set, 4, None).unwrap();
        let mu = counting_measure(&ensemble).unwrap();
        for w in &mu.weights {
            assert_abs_diff_eq!(*w, 0.25);
        }

        let seg = SetSpec::segment(c(-1.0, 0.0), c(1.0, 0.0)).with_boundary_samples(65);
        let pair = fekete_points(&seg, 2, None).unwrap();
        let mu = counting_measure(&pair).unwrap();
        assert_abs_diff_eq!(potential(&mu, c(0.0, 0.0)), 0.0, epsilon = 1e-14);

        let ens = fekete_points(&unit_disk(256), 64, None).unwrap();
        let mu = counting_measure(&ens).unwrap();
        assert_abs_diff_eq!(potential(&mu, c(0.0, 0.0)), 0.0, epsilon = 1e-3);
    }

    #[test]
    fn capacity_estimates_disk_and_segment_within_5_percent() {
        // The Chebyshev-norm estimate carries an intrinsic 2^(1/n) factor on
        // the disk (||z^n - c|| = 2), so 5% needs n >= 15; n = 8 sits 9% off.
        let set = unit_disk(512);
        let ensemble = fekete_points(&set, 16, None).unwrap();
        let norm = fekete_polynomial_norm(&ensemble, &set, None).unwrap();
        assert!((norm - 1.0).abs() < 0.05, "disk estimate {norm}");

        // Segment extremal points cluster at the endpoints, so the uniform
        // pool needs to be much denser than 4n to keep the bias small.
        let seg = SetSpec::segment(c(-1.0, 0.0), c(1.0, 0.0)).with_boundary_samples(2048);
        let ensemble = fekete_points(&seg, 32, None).unwrap();
        let norm = fekete_polynomial_norm(&ensemble, &seg, None).unwrap();
        assert!((norm - 0.5).abs() < 0.025, "segment estimate {norm}");
    }

    #[test]
    fn weighted_norm_approaches_the_robin_constant() {
        // For w(x) = x on [0,1] the limit is exp(-(8 log 2 - 3 log 3)) = 27/256.
        let set = SetSpec::segment(c(0.0, 0.0), c(1.0, 0.0)).with_boundary_samples(512);
        let weight = WeightSpec::IncompleteLorentz;
        let ensemble = fekete_points(&set, 32, Some(&weight)).unwrap();
        let norm = fekete_polynomial_norm(&ensemble, &set, Some(&weight)).unwrap();
        let target = 27.0 / 256.0;
        assert!(
            (norm - target).abs() / target < 0.05,
            "weighted norm {norm} vs {target}"
        );
    }

    #[test]
    fn transfinite_diameter_decreases_towards_capacity() {
        let mut last = f64::INFINITY;
        for n in [8usize, 16, 32] {
            let set = unit_disk(4 * n);
            let ensemble = fekete_points(&set, n, None).unwrap();
            let d = transfinite_diameter_estimate(&ensemble);
            assert!(d <= last + 1e-12, "n={n}: {d} > {last}");
            assert!(d >= 1.0 - 1e-9);
            last = d;
        }
    }

    #[test]
    fn chebyshev_norm_estimate_brackets_capacity_from_above() {
        // ||F_n||^(1/n) >= cap for any monic polynomial, so in particular
        // for the Fekete polynomial; check on disk and segment.
        for n in [4usize, 8, 16, 32] {
            let set = unit_disk(4 * n.max(16));
            let e = fekete_points(&set, n, None).unwrap();
            assert!(fekete_polynomial_norm(&e, &set, None).unwrap() >= 1.0 - 1e-9);

            let seg =
                SetSpec::segment(c(-1.0, 0.0), c(1.0, 0.0)).with_boundary_samples(4 * n.max(16));
            let e = fekete_points(&seg, n, None).unwrap();
            assert!(fekete_polynomial_norm(&e, &seg, None).unwrap() >= 0.5 - 1e-9);
        }
    }

    #[test]
    fn similarity_equivariance_on_scaled_pools() {
        // Rotational ties may resolve to a different rotation of the same
        // configuration, so compare rotation-invariant data: the objective
        // shifts by exactly (n choose 2) log a, and the sorted pairwise
        // distances scale by a.
        let n = 5usize;
        let small = unit_disk(96);
        let big = SetSpec::disk(c(0.0, 0.0), 2.0).with_boundary_samples(96);
        let e1 = fekete_points(&small, n, None).unwrap();
        let e2 = fekete_points(&big, n, None).unwrap();
        let pairs = (n * (n - 1) / 2) as f64;
        assert_abs_diff_eq!(
            e2.log_vandermonde - e1.log_vandermonde,
            pairs * std::f64::consts::LN_2,
            epsilon = 1e-9
        );
        let dists = |pts: &[Complex64]| {
            let mut d: Vec<f64> = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .map(|(i, j)| (pts[i] - pts[j]).norm())
                .collect();
            d.sort_by(f64::total_cmp);
            d
        };
        for (a, b) in dists(&e1.points).iter().zip(dists(&e2.points)) {
            assert_abs_diff_eq!(2.0 * a, b, epsilon = 1e-9);
        }
    }
}
