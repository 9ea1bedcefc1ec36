//! Sharp constants for sums of potentials and products of polynomial norms:
//! the set constant `C_E`, its m-tuple refinement `C_E(m)`, the
//! multiplicative constant `M_E = exp(C_E)`, classical comparison constants
//! (Kneser, Borwein, disk closed form), and dominant-set diagnostics.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

use crate::equilibrium::{self, QuadMeasure};
use crate::error::{Error, Result};
use crate::fekete;
use crate::geometry::{SetKind, SetSpec};
use crate::numeric::adaptive_quadrature;
use crate::optimize::{log_distance_gains, TupleObjective};

/// How a constant was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConstantMethod {
    ClosedForm,
    Quadrature,
    Optimizer,
}

/// A computed constant with method tag, optimizer diagnostics and an
/// a-posteriori error hint.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstantReport {
    /// The additive constant (log scale).
    pub value: f64,
    /// `exp(value)`, the multiplicative form.
    pub exp_value: f64,
    pub method: ConstantMethod,
    pub n_quadrature: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximizer_tuple: Option<Vec<Complex64>>,
    pub restarts: usize,
    pub error_hint: f64,
}

impl ConstantReport {
    fn closed_form(value: f64) -> Self {
        ConstantReport {
            value,
            exp_value: value.exp(),
            method: ConstantMethod::ClosedForm,
            n_quadrature: 0,
            m: None,
            maximizer_tuple: None,
            restarts: 0,
            error_hint: 1e-12,
        }
    }

    /// CSV row `set_id,m,value,exp_value,method,n_quadrature,error_hint`.
    pub fn csv_row(&self, set_id: &str) -> String {
        format!(
            "{},{},{},{},{:?},{},{}\n",
            set_id,
            self.m.map_or(String::new(), |m| m.to_string()),
            self.value,
            self.exp_value,
            self.method,
            self.n_quadrature,
            self.error_hint
        )
    }
}

/// `C_[-1,1] = log 2 + (2/pi) int_0^{pi/2} log(1 + sin t) dt`, the segment
/// constant. Invariant under similarity, so it covers every segment.
pub fn segment_constant() -> f64 {
    static VALUE: OnceLock<f64> = OnceLock::new();
    *VALUE.get_or_init(|| {
        let integral = adaptive_quadrature(
            |t| (1.0 + t.sin()).ln(),
            0.0,
            std::f64::consts::FRAC_PI_2,
            1e-13,
        );
        std::f64::consts::LN_2 + 2.0 / std::f64::consts::PI * integral
    })
}

/// Quadrature value of `C_E` for sets without a closed form: integrate
/// `log d_E` against the Fekete counting measure and subtract the log of the
/// Chebyshev-norm capacity estimate from the same ensemble.
fn quadrature_ce(set: &SetSpec, n: usize) -> Result<f64> {
    let ensemble = fekete::fekete_points(&set.densified(4 * n), n, None)?;
    let mu = fekete::counting_measure(&ensemble)?;
    let cheb = fekete::fekete_polynomial_norm(&ensemble, set, None)?;
    let log_cap = cheb.ln();
    let mut integrand = Vec::with_capacity(mu.len());
    for z in &mu.nodes {
        integrand.push(set.farthest_distance(*z)?.ln());
    }
    Ok(crate::numeric::weighted_sum(&mu.weights, &integrand) - log_cap)
}

/// The additive constant `C_E = int log d_E dmu_E - log cap(E)`.
///
/// Closed forms for disks (`log 2`) and segments; Fekete quadrature with a
/// Richardson error hint otherwise.
pub fn constant_ce(set: &SetSpec, n_quadrature: usize) -> Result<ConstantReport> {
    set.validate()?;
    match &set.kind {
        SetKind::FinitePoints { .. } => Err(Error::ZeroCapacity),
        SetKind::Disk { .. } => Ok(ConstantReport::closed_form(std::f64::consts::LN_2)),
        SetKind::Segment { .. } => Ok(ConstantReport::closed_form(segment_constant())),
        _ => {
            if n_quadrature < 4 {
                return Err(Error::InvalidMeasure("need n_quadrature >= 4".into()));
            }
            let value = quadrature_ce(set, n_quadrature)?;
            let coarse = quadrature_ce(set, n_quadrature / 2)?;
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
    }
}

/// The multiplicative constant `M_E = exp(C_E)`.
pub fn constant_me(set: &SetSpec, n_quadrature: usize) -> Result<ConstantReport> {
    constant_ce(set, n_quadrature)
}

/// Shared quadrature inputs for the m-tuple optimizer: the equilibrium
/// quadrature and the log-capacity consistent with it.
pub(crate) fn cem_inputs(set: &SetSpec, n: usize) -> Result<(QuadMeasure, f64)> {
    match &set.kind {
        SetKind::Disk { radius, .. } => {
            Ok((equilibrium::equilibrium_measure(set, n)?, radius.ln()))
        }
        SetKind::Segment { a, b } => Ok((
            equilibrium::equilibrium_measure(set, n)?,
            ((b - a).norm() / 4.0).ln(),
        )),
        _ => {
            let ensemble = fekete::fekete_points(&set.densified(4 * n), n, None)?;
            let mu = fekete::counting_measure(&ensemble)?;
            let cheb = fekete::fekete_polynomial_norm(&ensemble, set, None)?;
            Ok((mu, cheb.ln()))
        }
    }
}

fn cem_optimize(
    set: &SetSpec,
    m: usize,
    n: usize,
    restarts: usize,
) -> Result<(f64, Vec<Complex64>, usize)> {
    let (mu, log_cap) = cem_inputs(set, n)?;
    let grid = set.densified(512).boundary_nodes()?;
    let gain = log_distance_gains(&mu.nodes, &grid, None);
    let obj = TupleObjective::new(grid, mu.weights.clone(), gain);
    let sol = obj.maximize(m, restarts, 0x5eed);
    Ok((
        sol.value - log_cap,
        obj.tuple_points(&sol.indices),
        sol.restarts,
    ))
}

/// The m-tuple constant
/// `C_E(m) = max over (boundary E)^m of int log max_k |z - c_k| dmu_E - log cap(E)`,
/// by multistart coordinate ascent over a boundary grid.
///
/// `restarts == 0` selects the default of `8 + m` random restarts (one
/// max-spread start is always added). For disks the closed form is computed
/// as well; the reported value is the larger of the two and the error hint is
/// their distance, which exposes any optimizer shortfall.
pub fn constant_cem(
    set: &SetSpec,
    m: usize,
    n_quadrature: usize,
    restarts: usize,
) -> Result<ConstantReport> {
    if m < 2 {
        return Err(Error::BadM(m));
    }
    set.validate()?;
    if set.is_finite_points() {
        return Err(Error::ZeroCapacity);
    }
    let restarts = if restarts == 0 { 8 + m } else { restarts };
    let n = n_quadrature.max(8);
    let (opt_value, tuple, used_restarts) = cem_optimize(set, m, n, restarts)?;

    let (value, error_hint) = if matches!(set.kind, SetKind::Disk { .. }) {
        let closed = disk_constant_closed_form(m)?;
        (opt_value.max(closed), (opt_value - closed).abs())
    } else {
        // Richardson-style hint from a cheaper half-resolution run.
        let (coarse, _, _) = cem_optimize(set, m, (n / 2).max(8), (restarts / 2).max(2))?;
        (opt_value, (opt_value - coarse).abs())
    };

    Ok(ConstantReport {
        value,
        exp_value: value.exp(),
        method: ConstantMethod::Optimizer,
        n_quadrature: n,
        m: Some(m),
        maximizer_tuple: Some(tuple),
        restarts: used_restarts,
        error_hint,
    })
}

/// Closed form for the disk: `C_D(m) = (m/pi) int_0^{pi/m} log(2 cos(t/2)) dt`.
/// Strictly increasing in m with limit `log 2`.
pub fn disk_constant_closed_form(m: usize) -> Result<f64> {
    if m < 2 {
        return Err(Error::BadM(m));
    }
    let mf = m as f64;
    let upper = std::f64::consts::PI / mf;
    let integral = adaptive_quadrature(|t| (2.0 * (0.5 * t).cos()).ln(), 0.0, upper, 1e-12);
    Ok(mf / std::f64::consts::PI * integral)
}

/// Log of the two-factor segment constant
/// `K_{l,n} = 2^(n-1) prod_{k=1}^{l} (1+cos((2k-1)pi/(2n))) prod_{k=1}^{n-l} (...)`.
/// An empty product (l = 0 or l = n) contributes 1.
pub fn kneser_constant_log(l: usize, n: usize) -> Result<f64> {
    if n < 1 || l > n {
        return Err(Error::BadDegrees { l, n });
    }
    let nf = n as f64;
    let factor =
        |k: usize| (1.0 + ((2.0 * k as f64 - 1.0) * std::f64::consts::PI / (2.0 * nf)).cos()).ln();
    let mut total = (nf - 1.0) * std::f64::consts::LN_2;
    for k in 1..=l {
        total += factor(k);
    }
    for k in 1..=(n - l) {
        total += factor(k);
    }
    Ok(total)
}

/// `K_{l,n}` itself; overflows to infinity for very large degrees, use
/// [`kneser_constant_log`] then.
pub fn kneser_constant(l: usize, n: usize) -> Result<f64> {
    Ok(kneser_constant_log(l, n)?.exp())
}

/// Log of the multifactor segment bound
/// `2^(n-1) prod_{k=1}^{floor(n/2)} (1+cos((2k-1)pi/(2n)))^2`; its n-th root
/// tends to the segment constant `exp(C_[-1,1])`.
pub fn borwein_constant_log(n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::BadDegrees { l: 0, n });
    }
    let nf = n as f64;
    let mut total = (nf - 1.0) * std::f64::consts::LN_2;
    for k in 1..=(n / 2) {
        total +=
            2.0 * (1.0 + ((2.0 * k as f64 - 1.0) * std::f64::consts::PI / (2.0 * nf)).cos()).ln();
    }
    Ok(total)
}

/// Cardinality of a dominant set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cardinality {
    Finite(usize),
    Infinite,
}

/// A small dominant set: boundary points on which the farthest distance is
/// attained for every node of the equilibrium support.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DominantSetReport {
    pub set_points: Vec<Complex64>,
    pub cardinality: Cardinality,
    /// For each support node, the index into `set_points` of an attaining
    /// point.
    pub certificate: Vec<usize>,
}

/// Find a small covering set of farthest-distance attainers for the support
/// of `mu`, and flag the infinite case.
///
/// For every support node the attaining boundary points of `d_E` are
/// collected (tolerance 1e-9); a greedy set cover extracts a small dominant
/// set. When the distinct attainers exceed a quarter of the support size the
/// dominant set is reported as infinite: the attainers fill a boundary arc,
/// as happens for smooth boundaries.
pub fn dominant_set(set: &SetSpec, mu: &QuadMeasure) -> Result<DominantSetReport> {
    set.validate()?;
    if mu.is_empty() || !mu.is_probability() {
        return Err(Error::InvalidMeasure(
            "dominant set needs an equilibrium quadrature".into(),
        ));
    }
    let pool = set.densified(2 * mu.len()).boundary_nodes()?;
    let n = mu.len();
    let tol = 1e-9;

    let mut attainers: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut distinct = vec![false; pool.len()];
    for z in &mu.nodes {
        let dists: Vec<f64> = pool.iter().map(|p| (z - p).norm()).collect();
        let dmax = dists.iter().copied().fold(0.0, f64::max);
        let hit: Vec<usize> = (0..pool.len())
            .filter(|&p| dists[p] >= dmax - tol * (1.0 + dmax))
            .collect();
        for &p in &hit {
            distinct[p] = true;
        }
        attainers.push(hit);
    }
    let distinct_count = distinct.iter().filter(|b| **b).count();
    let infinite = distinct_count > n / 4;

    // Greedy set cover over the support nodes.
    let mut covered = vec![false; n];
    let mut chosen: Vec<usize> = Vec::new();
    let mut certificate = vec![usize::MAX; n];
    while covered.iter().any(|c| !c) {
        let mut best_p = usize::MAX;
        let mut best_count = 0usize;
        for (p, live) in distinct.iter().enumerate() {
            if !live {
                continue;
            }
            let count = (0..n)
                .filter(|&i| !covered[i] && attainers[i].contains(&p))
                .count();
            if count > best_count {
                best_count = count;
                best_p = p;
            }
        }
        if best_p == usize::MAX {
            return Err(Error::NumericFailure("set cover failed to progress".into()));
        }
        let chosen_idx = chosen.len();
        chosen.push(best_p);
        for i in 0..n {
            if !covered[i] && attainers[i].contains(&best_p) {
                covered[i] = true;
                certificate[i] = chosen_idx;
            }
        }
    }

    Ok(DominantSetReport {
        set_points: chosen.iter().map(|&p| pool[p]).collect(),
        cardinality: if infinite {
            Cardinality::Infinite
        } else {
            Cardinality::Finite(chosen.len())
        },
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn unit_disk() -> SetSpec {
        SetSpec::disk(c(0.0, 0.0), 1.0)
    }

    fn unit_segment() -> SetSpec {
        SetSpec::segment(c(-1.0, 0.0), c(1.0, 0.0))
    }

    fn unit_square() -> SetSpec {
        SetSpec::polygon(vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0)])
    }

    #[test]
    fn disk_constant_is_log_two_for_any_disk() {
        for set in [unit_disk(), SetSpec::disk(c(3.0, -2.0), 0.25)] {
            let report = constant_ce(&set, 64).unwrap();
            assert_eq!(report.method, ConstantMethod::ClosedForm);
            assert_abs_diff_eq!(report.value, std::f64::consts::LN_2);
            assert_abs_diff_eq!(report.exp_value, 2.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn segment_constant_matches_reference() {
        let report = constant_ce(&unit_segment(), 64).unwrap();
        // 30-digit quadrature reference: 1.16624361612327512.
        assert_abs_diff_eq!(report.value, 1.1662436161232751, epsilon = 1e-10);
        assert_abs_diff_eq!(report.exp_value, 3.2099123, epsilon = 1e-6);
        // Similarity invariance is exact for the closed form.
        let other = constant_ce(&SetSpec::segment(c(0.0, 0.0), c(1.0, 0.0)), 64).unwrap();
        assert_eq!(report.value, other.value);
    }

    #[test]
    fn square_constant_sits_in_the_known_bracket() {
        let report = constant_ce(&unit_square(), 128).unwrap();
        assert_eq!(report.method, ConstantMethod::Quadrature);
        assert!(
            report.value >= std::f64::consts::LN_2 - 1e-6,
            "{}",
            report.value
        );
        assert!(report.value <= 4.0_f64.ln(), "{}", report.value);
        // C_E <= log(diam/cap): diam = sqrt(2), cap ~ 0.5901703.
        let bound = (2.0_f64.sqrt() / 0.5901702995).ln();
        assert!(
            report.value <= bound + 0.02,
            "{} vs {}",
            report.value,
            bound
        );
    }

    #[test]
    fn centrally_symmetric_sets_stay_below_the_segment_constant() {
        // Centrally symmetric continua containing the center have
        // C_E <= C_[-2,2] = segment constant. The square is one (similarity
        // invariance lets us use the unit square).
        let report = constant_ce(&unit_square(), 128).unwrap();
        assert!(
            report.value <= segment_constant() + 1e-3,
            "{} vs {}",
            report.value,
            segment_constant()
        );
    }

    #[test]
    fn square_constant_similarity_invariance() {
        let base = constant_ce(&unit_square(), 96).unwrap();
        let rot = Complex64::from_polar(2.0, 0.7);
        let shift = c(-3.0, 1.5);
        let moved = SetSpec::polygon(
            vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0)]
                .into_iter()
                .map(|v| v * rot + shift)
                .collect(),
        );
        let other = constant_ce(&moved, 96).unwrap();
        assert_abs_diff_eq!(base.value, other.value, epsilon = 1e-3);
    }

    #[test]
    fn disk_m_constant_matches_closed_form() {
        let set = unit_disk().with_boundary_samples(512);
        let report = constant_cem(&set, 2, 512, 6).unwrap();
        // Reference value of (2/pi) int_0^{pi/2} log(2 cos(t/2)) dt, i.e.
        // 2*Catalan/pi, frozen from a 30-digit evaluation.
        assert_abs_diff_eq!(report.value, 0.5831218080616376, epsilon = 1e-3);
        assert!(
            report.error_hint <= 1e-3,
            "optimizer shortfall {}",
            report.error_hint
        );
        assert!(report.value < std::f64::consts::LN_2);
        assert!(report.maximizer_tuple.is_some());
        // The maximizing pair on the disk is antipodal.
        let t = report.maximizer_tuple.unwrap();
        assert_abs_diff_eq!((t[0] + t[1]).norm(), 0.0, epsilon = 1e-6);
    }

    #[test]
    fn segment_m_constant_equals_ce_for_m_two() {
        let report = constant_cem(&unit_segment().with_boundary_samples(512), 2, 1024, 4).unwrap();
        assert_abs_diff_eq!(report.value, segment_constant(), epsilon = 1e-3);
    }

    #[test]
    fn closed_form_properties() {
        assert!(matches!(disk_constant_closed_form(1), Err(Error::BadM(1))));
        let c2 = disk_constant_closed_form(2).unwrap();
        assert_abs_diff_eq!(c2, 0.5831218080616376, epsilon = 1e-10);
        // Riemann-sum oracle with 10^6 nodes.
        let n = 1_000_000;
        let h = std::f64::consts::FRAC_PI_2 / n as f64;
        let riemann: f64 = (0..n)
            .map(|k| (2.0 * (0.5 * (k as f64 + 0.5) * h).cos()).ln() * h)
            .sum::<f64>()
            * 2.0
            / std::f64::consts::PI;
        assert_abs_diff_eq!(c2, riemann, epsilon = 1e-9);

        // Strictly increasing toward log 2, strict gap through m = 64,
        // gap >= 1e-3 up to m = 16 (the true gap decays like 0.41/m^2).
        let mut prev = c2;
        for m in 3..=64 {
            let cm = disk_constant_closed_form(m).unwrap();
            assert!(cm > prev, "m={m}");
            assert!(cm < std::f64::consts::LN_2, "m={m}");
            if m <= 16 {
                assert!(std::f64::consts::LN_2 - cm >= 1e-3, "m={m}");
            }
            prev = cm;
        }
        // Tail: C_D(10000) within 1e-4 of log 2.
        let tail = disk_constant_closed_form(10000).unwrap();
        assert_abs_diff_eq!(tail, std::f64::consts::LN_2, epsilon = 1e-4);
        // Bracketing sanity: log 2 lies within 0.12 above C_D(2).
        assert!(c2 < std::f64::consts::LN_2 && std::f64::consts::LN_2 < c2 + 0.12);
    }

    #[test]
    fn kneser_values() {
        let k12 = kneser_constant(1, 2).unwrap();
        assert_abs_diff_eq!(k12, 3.0 + 2.0 * 2.0_f64.sqrt(), epsilon = 1e-12);
        // l = 0: empty first product.
        let k02 = kneser_constant(0, 2).unwrap();
        assert_abs_diff_eq!(k02, 1.0, epsilon = 1e-12);
        assert!(matches!(
            kneser_constant(3, 2),
            Err(Error::BadDegrees { .. })
        ));
    }

    #[test]
    fn borwein_root_approaches_segment_constant() {
        let log_bound = borwein_constant_log(1000).unwrap();
        let root = (log_bound / 1000.0).exp();
        assert!((root - 3.20991).abs() < 1e-2, "{root}");
        // And per reference evaluation the root is 3.2076889... from below.
        assert_abs_diff_eq!(root, 3.2076889697656073, epsilon = 1e-9);
    }

    #[test]
    fn dominant_sets() {
        // Segment: the two endpoints dominate.
        let seg = unit_segment();
        let mu = equilibrium::equilibrium_measure(&seg, 128).unwrap();
        let report = dominant_set(&seg, &mu).unwrap();
        assert_eq!(report.cardinality, Cardinality::Finite(2));
        let mut xs: Vec<f64> = report.set_points.iter().map(|p| p.re).collect();
        xs.sort_by(f64::total_cmp);
        assert_abs_diff_eq!(xs[0], -1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(xs[1], 1.0, epsilon = 1e-9);
        assert!(report.certificate.iter().all(|&i| i < 2));

        // Obtuse triangle: the endpoints of the longest side.
        let tri = SetSpec::polygon(vec![c(0.0, 0.0), c(4.0, 0.0), c(1.0, 1.0)]);
        let mu = equilibrium::equilibrium_measure(&tri, 96).unwrap();
        let report = dominant_set(&tri, &mu).unwrap();
        assert_eq!(report.cardinality, Cardinality::Finite(2));
        for p in &report.set_points {
            let at_a = (p - c(0.0, 0.0)).norm() < 1e-9;
            let at_b = (p - c(4.0, 0.0)).norm() < 1e-9;
            assert!(at_a || at_b, "unexpected dominant point {p}");
        }

        // Disk: attainers fill the whole circle.
        let mu = equilibrium::equilibrium_measure(&unit_disk(), 128).unwrap();
        let report = dominant_set(&unit_disk(), &mu).unwrap();
        assert_eq!(report.cardinality, Cardinality::Infinite);
    }

    #[test]
    fn ordering_against_ce_on_the_square() {
        let set = unit_square();
        let c2 = constant_cem(&set, 2, 128, 4).unwrap().value;
        let c3 = constant_cem(&set, 3, 128, 4).unwrap().value;
        let ce = constant_ce(&set, 128).unwrap().value;
        assert!(c2 <= c3 + 1e-3, "{c2} vs {c3}");
        assert!(c3 <= ce + 1e-3, "{c3} vs {ce}");
    }
}
