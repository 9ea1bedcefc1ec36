//! Shared numerical kernels: compensated summation, adaptive quadrature and
//! the Gauss rules used by the measure builders.

use crate::error::{Error, Result};

/// Neumaier compensated sum. Deterministic regardless of value magnitudes,
/// used everywhere a quadrature sum feeds a reported constant.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Compensated dot product sum(w[i] * f[i]). Terms with zero weight are
/// skipped so that `0 * -inf` cannot poison the sum.
pub fn weighted_sum(weights: &[f64], values: &[f64]) -> f64 {
    debug_assert_eq!(weights.len(), values.len());
    compensated_sum(
        weights
            .iter()
            .zip(values)
            .filter(|(w, _)| **w != 0.0)
            .map(|(w, v)| w * v),
    )
}

fn simpson(f: &mut impl FnMut(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
    let c = 0.5 * (a + b);
    let fc = f(c);
    ((b - a) / 6.0 * (fa + 4.0 * fc + fb), c, fc)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_step(
    f: &mut impl FnMut(f64) -> f64,
    a: f64,
    fa: f64,
    b: f64,
    fb: f64,
    c: f64,
    fc: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let (left, cl, fcl) = simpson(f, a, fa, c, fc);
    let (right, cr, fcr) = simpson(f, c, fc, b, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adaptive_step(f, a, fa, c, fc, cl, fcl, left, 0.5 * tol, depth - 1)
        + adaptive_step(f, c, fc, b, fb, cr, fcr, right, 0.5 * tol, depth - 1)
}

/// Adaptive Simpson quadrature of a smooth integrand on [a, b] with absolute
/// tolerance `tol`. Integrable endpoint behaviour must be removed by the
/// caller (substitution) before calling.
pub fn adaptive_quadrature(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let (whole, c, fc) = simpson(&mut f, a, fa, b, fb);
    adaptive_step(&mut f, a, fa, b, fb, c, fc, whole, tol.max(1e-15), 48)
}

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on the
/// three-term recurrence.
pub fn gauss_legendre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::BadConfig("Gauss-Legendre rule needs n >= 1".into()));
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre recurrence for P_n(x) and P_n'(x).
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = nf * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    Ok((nodes, weights))
}

/// Gauss rule for the weight sqrt((1+u)/(1-u)) on [-1, 1] (Jacobi with
/// exponents -1/2 and +1/2). The orthogonal polynomials are the Chebyshev
/// polynomials of the third kind, so nodes and weights are explicit:
/// u_i = cos((2i-1)pi/(2n+1)), w_i = (2pi/(2n+1)) (1+u_i).
pub fn gauss_chebyshev_third(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::BadConfig("quadrature rule needs n >= 1".into()));
    }
    let denom = 2.0 * n as f64 + 1.0;
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for i in 1..=n {
        let theta = (2.0 * i as f64 - 1.0) * std::f64::consts::PI / denom;
        let u = theta.cos();
        nodes.push(u);
        weights.push(2.0 * std::f64::consts::PI / denom * (1.0 + u));
    }
    Ok((nodes, weights))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn compensated_sum_cancellation() {
        let xs = [1e16, 1.0, -1e16];
        assert_eq!(compensated_sum(xs), 1.0);
    }

    #[test]
    fn weighted_sum_skips_zero_weight_infinities() {
        let w = [0.0, 0.5, 0.5];
        let v = [f64::NEG_INFINITY, 2.0, 4.0];
        assert_eq!(weighted_sum(&w, &v), 3.0);
    }

    #[test]
    fn simpson_matches_known_integrals() {
        let v = adaptive_quadrature(|x| x.exp(), 0.0, 1.0, 1e-12);
        assert_abs_diff_eq!(v, std::f64::consts::E - 1.0, epsilon = 1e-11);
        let v = adaptive_quadrature(
            |t| (1.0 + t.sin()).ln(),
            0.0,
            std::f64::consts::FRAC_PI_2,
            1e-13,
        );
        // Frozen from a 30-digit reference evaluation of the same integral.
        assert_abs_diff_eq!(v, 0.743138143202637, epsilon = 1e-11);
    }

    #[test]
    fn gauss_legendre_polynomial_exactness() {
        for n in [2usize, 5, 8, 16] {
            let (x, w) = gauss_legendre(n).unwrap();
            for deg in 0..(2 * n) {
                let quad: f64 = x
                    .iter()
                    .zip(&w)
                    .map(|(xi, wi)| wi * xi.powi(deg as i32))
                    .sum();
                let exact = if deg % 2 == 0 {
                    2.0 / (deg as f64 + 1.0)
                } else {
                    0.0
                };
                assert_abs_diff_eq!(quad, exact, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn chebyshev_third_kind_exactness() {
        // Moments of sqrt((1+u)/(1-u)): m_0 = pi, m_1 = pi/2, m_2 = pi/2,
        // m_3 = 3pi/8 (computed by reducing to int_0^pi cos^j(1+cos)).
        let moments = [
            std::f64::consts::PI,
            std::f64::consts::PI / 2.0,
            std::f64::consts::PI / 2.0,
            3.0 * std::f64::consts::PI / 8.0,
        ];
        let (x, w) = gauss_chebyshev_third(2).unwrap();
        for (deg, m) in moments.iter().enumerate() {
            let quad: f64 = x
                .iter()
                .zip(&w)
                .map(|(xi, wi)| wi * xi.powi(deg as i32))
                .sum();
            assert_abs_diff_eq!(quad, *m, epsilon = 1e-12);
        }
    }
}
