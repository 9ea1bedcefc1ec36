//! Empirical verification of the norm-product inequalities and of their
//! sharpness: random factorization checks, the Fekete partition construction,
//! the growing-constant demo for countable sets, and generalized-polynomial
//! checks.

use std::cell::RefCell;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::constants::constant_cem;
use crate::error::{Error, Result};
use crate::fekete;
use crate::geometry::{SetKind, SetSpec};
use crate::numeric::compensated_sum;
use crate::weighted::{constant_cewm, WeightSpec};

type BigRational = Ratio<BigInt>;

/// Record of one factorization experiment against the inequality chain
/// `sum_j log ||w^(n_j) P_j|| <= n C(m) + log ||w^n prod P_j||
///                             <= n C + log ||w^n prod P_j||`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactorizationExperiment {
    pub set_id: String,
    pub weight: WeightSpec,
    /// Degree of each factor (real-valued for generalized polynomials).
    pub factor_degrees: Vec<f64>,
    pub n_total: f64,
    /// `sum_j log ||w^(n_j) P_j||`.
    pub lhs: f64,
    /// `n C(m) + log ||w^n prod P_j||`.
    pub rhs_m: f64,
    /// `n C + log ||w^n prod P_j||`.
    pub rhs: f64,
    /// `exp((lhs - log||prod||) / n)`, the per-degree norm-product ratio.
    pub ratio_root: f64,
}

impl FactorizationExperiment {
    pub const CSV_HEADER: &'static str = "set_id,weight,m,n_total,lhs,rhs_m,rhs,ratio_root\n";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}\n",
            self.set_id,
            self.weight.kind_name(),
            self.factor_degrees.len(),
            self.n_total,
            self.lhs,
            self.rhs_m,
            self.rhs,
            self.ratio_root
        )
    }
}

/// Shared context for a batch of experiments on one `(set, weight)` pair.
/// The constants `C` and `C(m)` are computed once and cached across
/// experiments, since the m-tuple optimizer dominates the cost.
pub struct Verifier {
    set: SetSpec,
    weight: WeightSpec,
    n_quadrature: usize,
    restarts: usize,
    norm_samples: usize,
    ce: f64,
    cem_cache: RefCell<BTreeMap<usize, f64>>,
}

impl Verifier {
    pub fn new(
        set: SetSpec,
        weight: WeightSpec,
        n_quadrature: usize,
        restarts: usize,
    ) -> Result<Self> {
        set.validate()?;
        weight.is_admissible_on(&set)?;
        let n_quadrature = n_quadrature.max(8);
        // The constant is evaluated as a node sum on the same quadrature the
        // m-tuple optimizer uses. Pointwise log max_k w(c_k)|z - c_k| never
        // exceeds log d^w(z), so the chain rhs_m <= rhs holds by construction
        // instead of depending on cross-method quadrature agreement.
        let ce = match (&weight, &set.kind) {
            // Finite sets carry no constant; experiments on them only make
            // sense for the degenerate-norm checks.
            (_, SetKind::FinitePoints { .. }) => f64::INFINITY,
            (WeightSpec::Unit, _) => {
                let (mu, log_cap) = crate::constants::cem_inputs(&set, n_quadrature)?;
                let mut vals = Vec::with_capacity(mu.len());
                for z in &mu.nodes {
                    vals.push(set.farthest_distance(*z)?.ln());
                }
                crate::numeric::weighted_sum(&mu.weights, &vals) - log_cap
            }
            _ => {
                let eq = crate::weighted::weighted_equilibrium(&set, &weight, n_quadrature)?;
                let mut vals = Vec::with_capacity(eq.mu_w.len());
                for z in &eq.mu_w.nodes {
                    vals.push(crate::weighted::weighted_farthest_distance(&set, &weight, *z)?.ln());
                }
                crate::numeric::weighted_sum(&eq.mu_w.weights, &vals) + eq.f_w
            }
        };
        Ok(Verifier {
            set,
            weight,
            n_quadrature,
            restarts,
            norm_samples: 1024,
            ce,
            cem_cache: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn set(&self) -> &SetSpec {
        &self.set
    }

    /// `C_E^w` of the context.
    pub fn constant(&self) -> f64 {
        self.ce
    }

    /// `C_E^w(m)` of the context, cached.
    pub fn constant_m(&self, m: usize) -> Result<f64> {
        if m < 2 {
            // A single factor needs no correction at all.
            return Ok(0.0);
        }
        if let Some(v) = self.cem_cache.borrow().get(&m) {
            return Ok(*v);
        }
        let v = match self.weight {
            WeightSpec::Unit => constant_cem(&self.set, m, self.n_quadrature, self.restarts)?.value,
            _ => constant_cewm(&self.set, &self.weight, m, self.n_quadrature, self.restarts)?.value,
        };
        self.cem_cache.borrow_mut().insert(m, v);
        Ok(v)
    }

    /// `log sup over E of w(z)^wexp * prod |z - z_k|^(r_k)`.
    fn log_norm(&self, zeros: &[(Complex64, f64)], wexp: f64) -> Result<f64> {
        let zeros = zeros.to_vec();
        let poly = move |z: Complex64| -> f64 {
            compensated_sum(zeros.iter().map(|(a, r)| r * (z - a).norm().ln()))
        };
        let max_log = match &self.weight {
            WeightSpec::Unit => self.set.boundary_supremum(self.norm_samples, poly)?.0,
            WeightSpec::Tabulated { .. } => {
                let nodes = self.set.boundary_nodes()?;
                let lw = self.weight.log_values_on(&self.set, &nodes)?;
                nodes
                    .iter()
                    .zip(&lw)
                    .map(|(z, l)| poly(*z) + wexp * l)
                    .fold(f64::NEG_INFINITY, f64::max)
            }
            w => {
                let f = {
                    let w = w.clone();
                    let set = self.set.clone();
                    move |z: Complex64| match w.log_value_at(&set, z) {
                        Some(l) => poly(z) + wexp * l,
                        None => f64::NEG_INFINITY,
                    }
                };
                let mut best = self.set.boundary_supremum(self.norm_samples, &f)?.0;
                for z in w.support_grid(&self.set, self.norm_samples)? {
                    best = best.max(f(z));
                }
                best
            }
        };
        if max_log == f64::NEG_INFINITY {
            return Err(Error::ZeroNorm);
        }
        if max_log.is_nan() {
            return Err(Error::NumericFailure("norm evaluation produced NaN".into()));
        }
        Ok(max_log)
    }

    fn experiment_from_factors(
        &self,
        factors: &[Vec<(Complex64, f64)>],
    ) -> Result<FactorizationExperiment> {
        let degrees: Vec<f64> = factors
            .iter()
            .map(|f| f.iter().map(|(_, r)| *r).sum::<f64>())
            .collect();
        let n: f64 = degrees.iter().sum();
        if n <= 0.0 {
            return Err(Error::EmptyFactor);
        }
        let mut lhs_terms = Vec::with_capacity(factors.len());
        for (f, d) in factors.iter().zip(&degrees) {
            lhs_terms.push(self.log_norm(f, *d)?);
        }
        let lhs = compensated_sum(lhs_terms.iter().copied());
        let all: Vec<(Complex64, f64)> = factors.iter().flatten().copied().collect();
        let log_prod = self.log_norm(&all, n)?;
        let c_m = self.constant_m(factors.len())?;
        let rhs_m = n * c_m + log_prod;
        let rhs = n * self.ce + log_prod;

        // The chain is a theorem; a violation beyond grid tolerance means a
        // computation bug, so surface it rather than returning bad data.
        let tol = 1e-9 * n + 1e-12;
        if lhs > rhs_m + tol || rhs_m > rhs + tol {
            return Err(Error::NumericFailure(format!(
                "inequality chain violated: lhs={lhs}, rhs_m={rhs_m}, rhs={rhs}"
            )));
        }

        Ok(FactorizationExperiment {
            set_id: self.set.descriptor(),
            weight: self.weight.clone(),
            factor_degrees: degrees,
            n_total: n,
            lhs,
            rhs_m,
            rhs,
            ratio_root: ((lhs - log_prod) / n).exp(),
        })
    }

    /// Check the norm-product chain for ordinary polynomial factors given by
    /// their zero multisets.
    pub fn product_inequality_check(
        &self,
        zeros: &[Vec<Complex64>],
    ) -> Result<FactorizationExperiment> {
        if zeros.is_empty() || zeros.iter().any(|f| f.is_empty()) {
            return Err(Error::EmptyFactor);
        }
        let factors: Vec<Vec<(Complex64, f64)>> = zeros
            .iter()
            .map(|f| f.iter().map(|z| (*z, 1.0)).collect())
            .collect();
        self.experiment_from_factors(&factors)
    }

    /// Check the chain for generalized polynomials `prod |z - z_k|^(r_k)`
    /// with positive real exponents.
    pub fn generalized_polynomial_check(
        &self,
        factors: &[Vec<(Complex64, f64)>],
    ) -> Result<FactorizationExperiment> {
        if factors.is_empty() || factors.iter().any(|f| f.is_empty()) {
            return Err(Error::EmptyFactor);
        }
        for f in factors {
            for (_, r) in f {
                if !r.is_finite() || *r <= 0.0 {
                    return Err(Error::BadExponent(format!("exponent {r} must be positive")));
                }
            }
        }
        self.experiment_from_factors(factors)
    }

    /// The sharpness construction: split the n-point Fekete configuration
    /// into groups by which maximizer-tuple point attains `d_m`, form the
    /// factor polynomials from the groups, and report the experiment. As n
    /// grows the ratio root climbs towards `exp(C(m))`.
    pub fn fekete_partition_experiment(
        &self,
        m: usize,
        n: usize,
    ) -> Result<FactorizationExperiment> {
        if m < 2 {
            return Err(Error::BadM(m));
        }
        if n < m {
            return Err(Error::PoolTooSmall {
                needed: m,
                available: n,
            });
        }
        let tuple = match self.weight {
            WeightSpec::Unit => constant_cem(&self.set, m, self.n_quadrature, self.restarts)?
                .maximizer_tuple
                .expect("optimizer reports a tuple"),
            _ => constant_cewm(&self.set, &self.weight, m, self.n_quadrature, self.restarts)?
                .maximizer_tuple
                .expect("optimizer reports a tuple"),
        };
        let weight_opt = match self.weight {
            WeightSpec::Unit => None,
            _ => Some(&self.weight),
        };
        let ensemble = fekete::fekete_points(&self.set.densified(4 * n), n, weight_opt)?;
        let groups = partition_by_attainment(&ensemble.points, &tuple, |c| match weight_opt {
            None => 0.0,
            Some(w) => w.log_value_at(&self.set, *c).unwrap_or(f64::NEG_INFINITY),
        });
        let factors: Vec<Vec<(Complex64, f64)>> = groups
            .iter()
            .map(|g| g.iter().map(|&i| (ensemble.points[i], 1.0)).collect())
            .collect();
        self.experiment_from_factors(&factors)
    }

    /// Seeded batch of random factorization experiments: `count` draws of `m`
    /// factors with total degree `n_total`, zeros placed on the boundary grid
    /// and on interior points scaled towards the centroid.
    pub fn random_factorizations(
        &self,
        m: usize,
        n_total: usize,
        seed: u64,
        count: usize,
    ) -> Result<Vec<FactorizationExperiment>> {
        if m == 0 || n_total < m {
            return Err(Error::BadConfig(format!(
                "need 1 <= m <= n_total, got m={m}, n={n_total}"
            )));
        }
        let pool = self.set.boundary_nodes()?;
        let centroid = pool.iter().sum::<Complex64>() / pool.len() as f64;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let mut degrees = vec![1usize; m];
            for _ in 0..(n_total - m) {
                let j = rng.gen_range(0..m);
                degrees[j] += 1;
            }
            let zeros: Vec<Vec<Complex64>> = degrees
                .iter()
                .map(|&d| {
                    (0..d)
                        .map(|_| {
                            let node = pool[rng.gen_range(0..pool.len())];
                            if rng.gen_bool(0.5) {
                                node
                            } else {
                                centroid + (node - centroid) * rng.gen_range(0.0..1.0)
                            }
                        })
                        .collect()
                })
                .collect();
            out.push(self.product_inequality_check(&zeros)?);
        }
        Ok(out)
    }
}

/// Assign each point to the tuple entry attaining
/// `max_k w(c_k) |a - c_k|`, ties to the lowest index, and return the groups
/// (possibly empty) as index lists. Groups are disjoint and cover all points.
pub fn partition_by_attainment(
    points: &[Complex64],
    tuple: &[Complex64],
    log_weight: impl Fn(&Complex64) -> f64,
) -> Vec<Vec<usize>> {
    let lw: Vec<f64> = tuple.iter().map(&log_weight).collect();
    let mut groups = vec![Vec::new(); tuple.len()];
    for (i, a) in points.iter().enumerate() {
        let mut best = f64::NEG_INFINITY;
        let mut best_k = 0usize;
        for (k, c) in tuple.iter().enumerate() {
            let v = lw[k] + (a - c).norm().ln();
            if v > best + 1e-15 {
                best = v;
                best_k = k;
            }
        }
        groups[best_k].push(i);
    }
    groups
}

fn validate_sequence(a: &[f64], n: usize) -> Result<()> {
    if n == 0 || n > a.len() {
        return Err(Error::BadSequence(format!(
            "need 1 <= n <= len(A) = {}",
            a.len()
        )));
    }
    if a.iter().any(|x| !x.is_finite() || *x < 1.0) {
        return Err(Error::BadSequence(
            "sequence entries must be finite and >= 1".into(),
        ));
    }
    if a.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::BadSequence("sequence must be nondecreasing".into()));
    }
    Ok(())
}

fn countable_set_points(a: &[f64]) -> Vec<f64> {
    // x_1 = 1, x_k = 1/(2 A_k) for k >= 2, plus the accumulation point 0.
    let mut xs = vec![1.0];
    xs.extend(a.iter().skip(1).map(|ak| 1.0 / (2.0 * ak)));
    xs
}

/// Growing-constant demo on a countable set: builds
/// `E = {1} u {1/(2 A_k)} u {0}`, the linear factors `P_j(x) = x - x_j`, and
/// returns `prod ||P_j||_E / ||prod P_j||_E`, which is at least `A_n`.
pub fn countable_set_demo(a: &[f64], n: usize) -> Result<f64> {
    validate_sequence(a, n)?;
    let xs = countable_set_points(a);
    let mut e = xs.clone();
    e.push(0.0);
    let norm = |f: &dyn Fn(f64) -> f64| e.iter().map(|x| f(*x)).fold(0.0, f64::max);
    let mut num = 1.0;
    for xj in &xs[..n] {
        num *= norm(&|x| (x - xj).abs());
    }
    let den = norm(&|x| xs[..n].iter().map(|xj| (x - xj).abs()).product());
    if den == 0.0 {
        return Err(Error::ZeroNorm);
    }
    Ok(num / den)
}

/// Exact-rational version of [`countable_set_demo`]; every finite f64 is a
/// rational, so the construction and the norms are evaluated without
/// rounding.
pub fn countable_set_demo_exact(a: &[f64], n: usize) -> Result<BigRational> {
    validate_sequence(a, n)?;
    let to_q = |x: f64| {
        BigRational::from_float(x).ok_or_else(|| Error::BadSequence("non-finite entry".into()))
    };
    let two = BigRational::from_integer(BigInt::from(2));
    let mut xs: Vec<BigRational> = vec![BigRational::one()];
    for ak in a.iter().skip(1) {
        xs.push(BigRational::one() / (&two * to_q(*ak)?));
    }
    let mut e = xs.clone();
    e.push(BigRational::zero());

    let mut num = BigRational::one();
    for xj in &xs[..n] {
        let best = e
            .iter()
            .map(|x| (x - xj).abs())
            .max()
            .expect("non-empty point set");
        num *= best;
    }
    let den = e
        .iter()
        .map(|x| {
            let mut p = BigRational::one();
            for xj in &xs[..n] {
                p *= (x - xj).abs();
            }
            p
        })
        .max()
        .expect("non-empty point set");
    if den.is_zero() {
        return Err(Error::ZeroNorm);
    }
    Ok(num / den)
}
