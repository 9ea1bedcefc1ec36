//! Multistart coordinate ascent for m-tuple boundary optimization.
//!
//! The objective has the shape `F(t_1..t_m) = sum_i w_i * max_k G[t_k][i]`
//! where `G[g][i]` is a precomputed log-gain of grid candidate `g` against
//! quadrature node `i`. Each coordinate update is an exhaustive scan of the
//! grid, made O(nodes) per candidate by tracking, per node, the best and
//! second-best contribution over the current tuple.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::numeric::compensated_sum;

/// Precomputed data for the tuple objective.
pub struct TupleObjective {
    /// Column-major gains: `gain[g * n_nodes + i]`.
    pub gain: Vec<f64>,
    pub node_weights: Vec<f64>,
    pub n_nodes: usize,
    pub n_grid: usize,
    /// Grid candidate locations, used for spread starts and reporting.
    pub grid: Vec<Complex64>,
}

#[derive(Debug, Clone)]
pub struct TupleSolution {
    pub value: f64,
    pub indices: Vec<usize>,
    pub restarts: usize,
}

impl TupleObjective {
    pub fn new(grid: Vec<Complex64>, node_weights: Vec<f64>, gain: Vec<f64>) -> Self {
        let n_nodes = node_weights.len();
        let n_grid = grid.len();
        assert_eq!(gain.len(), n_nodes * n_grid);
        TupleObjective {
            gain,
            node_weights,
            n_nodes,
            n_grid,
            grid,
        }
    }

    fn column(&self, g: usize) -> &[f64] {
        &self.gain[g * self.n_nodes..(g + 1) * self.n_nodes]
    }

    /// Objective value of an explicit tuple, with compensated summation.
    pub fn evaluate(&self, tuple: &[usize]) -> f64 {
        let terms = (0..self.n_nodes).map(|i| {
            let best = tuple
                .iter()
                .map(|&t| self.gain[t * self.n_nodes + i])
                .fold(f64::NEG_INFINITY, f64::max);
            self.node_weights[i] * best
        });
        compensated_sum(terms)
    }

    /// Greedy max-min spread start: the m grid points of largest pairwise
    /// spread, seeded from the grid diameter pair.
    pub fn spread_start(&self, m: usize) -> Vec<usize> {
        let g = &self.grid;
        let mut best = (0usize, 0usize);
        let mut best_d = -1.0;
        for i in 0..g.len() {
            for j in (i + 1)..g.len() {
                let d = (g[i] - g[j]).norm();
                if d > best_d {
                    best_d = d;
                    best = (i, j);
                }
            }
        }
        let mut chosen = vec![best.0, best.1];
        while chosen.len() < m {
            let mut far = 0usize;
            let mut far_d = -1.0;
            for (i, z) in g.iter().enumerate() {
                let d = chosen
                    .iter()
                    .map(|&c| (z - g[c]).norm())
                    .fold(f64::INFINITY, f64::min);
                if d > far_d {
                    far_d = d;
                    far = i;
                }
            }
            chosen.push(far);
        }
        chosen.truncate(m);
        chosen
    }

    /// Coordinate ascent from `tuple` until no single-coordinate move helps.
    fn ascend(&self, tuple: &mut [usize]) -> f64 {
        let n = self.n_nodes;
        let m = tuple.len();
        // Per node: best and second-best gain over the tuple, plus the owner.
        let mut top1 = vec![f64::NEG_INFINITY; n];
        let mut owner = vec![usize::MAX; n];
        let mut top2 = vec![f64::NEG_INFINITY; n];
        let refresh = |tuple: &[usize], top1: &mut [f64], owner: &mut [usize], top2: &mut [f64]| {
            for i in 0..n {
                top1[i] = f64::NEG_INFINITY;
                top2[i] = f64::NEG_INFINITY;
                owner[i] = usize::MAX;
            }
            for (k, &t) in tuple.iter().enumerate() {
                let col = self.column(t);
                for i in 0..n {
                    let v = col[i];
                    if v > top1[i] {
                        top2[i] = top1[i];
                        top1[i] = v;
                        owner[i] = k;
                    } else if v > top2[i] {
                        top2[i] = v;
                    }
                }
            }
        };
        refresh(tuple, &mut top1, &mut owner, &mut top2);

        let mut value = self.evaluate(tuple);
        let mut rest = vec![0.0_f64; n];
        for _pass in 0..100 {
            let mut moved = false;
            for k in 0..m {
                for i in 0..n {
                    rest[i] = if owner[i] == k { top2[i] } else { top1[i] };
                }
                let mut best_val = f64::NEG_INFINITY;
                let mut best_g = tuple[k];
                for g in 0..self.n_grid {
                    let col = self.column(g);
                    let mut s = 0.0;
                    for i in 0..n {
                        let v = if col[i] > rest[i] { col[i] } else { rest[i] };
                        s += self.node_weights[i] * v;
                    }
                    if s > best_val {
                        best_val = s;
                        best_g = g;
                    }
                }
                if best_g != tuple[k] {
                    tuple[k] = best_g;
                    refresh(tuple, &mut top1, &mut owner, &mut top2);
                    let new_value = self.evaluate(tuple);
                    if new_value > value + 1e-13 * (1.0 + value.abs()) {
                        value = new_value;
                        moved = true;
                    } else {
                        value = value.max(new_value);
                    }
                }
            }
            if !moved {
                break;
            }
        }
        self.evaluate(tuple)
    }

    /// Multistart maximization: one spread start plus `restarts` random
    /// m-tuples. Restarts run independently (in parallel) and the reduction
    /// is deterministic: maximum value, ties broken by the lexicographically
    /// smallest index tuple.
    pub fn maximize(&self, m: usize, restarts: usize, seed: u64) -> TupleSolution {
        use rand::{Rng, SeedableRng};
        let starts: Vec<Vec<usize>> = std::iter::once(self.spread_start(m))
            .chain((0..restarts).map(|r| {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(
                    seed ^ (r as u64 + 1).wrapping_mul(0x9E3779B97F4A7C15),
                );
                (0..m).map(|_| rng.gen_range(0..self.n_grid)).collect()
            }))
            .collect();

        let results: Vec<(f64, Vec<usize>)> = starts
            .into_par_iter()
            .map(|mut tuple| {
                let v = self.ascend(&mut tuple);
                (v, tuple)
            })
            .collect();

        let mut best: Option<(f64, Vec<usize>)> = None;
        for (v, mut tuple) in results {
            tuple.sort_unstable();
            match &best {
                None => best = Some((v, tuple)),
                Some((bv, bt)) => {
                    if v > *bv || (v == *bv && tuple < *bt) {
                        best = Some((v, tuple));
                    }
                }
            }
        }
        let (value, indices) = best.expect("at least one start");
        TupleSolution {
            value,
            indices,
            restarts: restarts + 1,
        }
    }

    /// Points of a tuple, sorted lexicographically by (re, im).
    pub fn tuple_points(&self, indices: &[usize]) -> Vec<Complex64> {
        let mut pts: Vec<Complex64> = indices.iter().map(|&i| self.grid[i]).collect();
        pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        pts
    }
}

/// Build the log-distance gain table `log|node_i - grid_g|` with optional
/// per-candidate log-weight offsets folded in.
pub fn log_distance_gains(
    nodes: &[Complex64],
    grid: &[Complex64],
    log_weights: Option<&[f64]>,
) -> Vec<f64> {
    let n = nodes.len();
    let mut gain = vec![0.0_f64; n * grid.len()];
    for (g, c) in grid.iter().enumerate() {
        let offset = log_weights.map_or(0.0, |lw| lw[g]);
        let col = &mut gain[g * n..(g + 1) * n];
        for (i, z) in nodes.iter().enumerate() {
            col[i] = (z - c).norm().ln() + offset;
        }
    }
    gain
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn recovers_antipodal_optimum_on_a_ring() {
        // Nodes and grid both on the unit circle; the best 2-tuple for the
        // average of log max distances is an antipodal pair.
        let n = 64;
        let nodes: Vec<Complex64> = (0..n)
            .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64))
            .collect();
        let grid = nodes.clone();
        let gain = log_distance_gains(&nodes, &grid, None);
        let obj = TupleObjective::new(grid, vec![1.0 / n as f64; n], gain);
        let sol = obj.maximize(2, 4, 7);
        let a = obj.grid[sol.indices[0]];
        let b = obj.grid[sol.indices[1]];
        // With nodes aligned to the grid the discrete objective ties across
        // gaps of 31, 32 and 33 steps, so allow one grid step off center.
        assert!(
            (a + b).norm() <= 1.5 * 2.0 * std::f64::consts::PI / n as f64,
            "{}",
            (a + b).norm()
        );
        // Value is the Riemann sum of log max(|z-c1|,|z-c2|) over the circle,
        // close to the continuum optimum 0.5831218.
        assert_abs_diff_eq!(sol.value, 0.5831218080616376, epsilon = 2e-3);
        assert!(sol.value < std::f64::consts::LN_2);
    }

    #[test]
    fn deterministic_across_runs() {
        let n = 32;
        let nodes: Vec<Complex64> = (0..n)
            .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64))
            .collect();
        let gain = log_distance_gains(&nodes, &nodes, None);
        let obj = TupleObjective::new(nodes.clone(), vec![1.0 / n as f64; n], gain);
        let s1 = obj.maximize(3, 6, 42);
        let s2 = obj.maximize(3, 6, 42);
        assert_eq!(s1.indices, s2.indices);
        assert_eq!(s1.value, s2.value);
    }
}
