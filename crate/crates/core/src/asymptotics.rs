//! The function Φ, its maximization over the polytope Ω, and partition
//! constructors for the lower bound.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::GradedLieAlgebra;
use crate::codim::{graded_codimension, CodimOptions};
use crate::error::{Error, Result};
use crate::symmetric::Partition;

/// `−Σ x_i ln x_i` with `0 ln 0 = 0`.
pub fn entropy(x: &[f64]) -> f64 {
    -x.iter()
        .filter(|&&v| v > 0.0)
        .map(|&v| v * v.ln())
        .sum::<f64>()
}

/// `Φ(x) = 1 / ∏ x_i^{x_i}`.
pub fn phi(x: &[f64]) -> Result<f64> {
    if let Some(&bad) = x.iter().find(|&&v| v < 0.0 || v.is_nan()) {
        return Err(Error::NegativeInput(bad.to_string()));
    }
    Ok(entropy(x).exp())
}

/// `(q − 3) + 2√2`.
pub fn closed_form_max(q: usize) -> f64 {
    q as f64 - 3.0 + 2.0 * std::f64::consts::SQRT_2
}

/// The `q + 1` inequality constraints of Ω as coefficient rows `a · x ≥ 0`.
fn constraint_rows(q: usize) -> Vec<Vec<f64>> {
    let mut rows = Vec::new();
    for i in 0..q - 1 {
        let mut a = vec![0.0; q];
        a[i] = 1.0;
        a[i + 1] = -1.0;
        rows.push(a);
    }
    let mut last = vec![0.0; q];
    last[q - 1] = 1.0;
    rows.push(last);
    let mut tail = vec![0.0; q];
    tail[0] += 1.0;
    tail[q - 2] -= 1.0;
    tail[q - 1] -= 1.0;
    rows.push(tail);
    rows
}

/// Largest violation of the constraints of Ω (0 when feasible).
pub fn infeasibility(x: &[f64]) -> f64 {
    let q = x.len();
    if q < 2 {
        return (x.iter().sum::<f64>() - 1.0).abs();
    }
    let mut worst = (x.iter().sum::<f64>() - 1.0).abs();
    for a in constraint_rows(q) {
        let g: f64 = a.iter().zip(x).map(|(ai, xi)| ai * xi).sum();
        worst = worst.max(-g);
    }
    worst
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationResult {
    pub value: f64,
    pub point: Vec<f64>,
    pub iterations: usize,
    /// Bound on `log Φ(opt) − log Φ(point)` from the barrier duality gap.
    pub tolerance: f64,
    pub infeasibility: f64,
}

/// Random strictly feasible point of Ω.
pub fn random_interior_point(q: usize, rng: &mut impl Rng) -> Vec<f64> {
    let mut x = vec![0.0; q];
    x[q - 1] = rng.gen_range(0.1..1.0);
    for i in (1..q - 1).rev() {
        x[i] = x[i + 1] + rng.gen_range(0.01..1.0);
    }
    x[0] = x[1] + x[q - 1] + rng.gen_range(0.01..1.0);
    let s: f64 = x.iter().sum();
    x.iter().map(|v| v / s).collect()
}

/// Solves a small dense system by Gaussian elimination with partial pivoting.
fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            if f != 0.0 {
                for c in col..n {
                    a[r][c] -= f * a[col][c];
                }
                b[r] -= f * b[col];
            }
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let s: f64 = (r + 1..n).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    Some(x)
}

pub const MAX_ITERATIONS: usize = 10_000;

/// Maximizes `log Φ` (the entropy) over Ω with a log-barrier interior-point
/// method started from a seeded random interior point.
///
/// Stops when the barrier duality gap on `log Φ` is below `tol / (q · 10)`.
pub fn maximize_phi(q: usize, tol: f64, seed: u64) -> Result<OptimizationResult> {
    if q < 2 {
        return Err(Error::Infeasible(format!("q = {q} is below 2")));
    }
    if q == 2 {
        // Ω = {(1, 0)}
        return Ok(OptimizationResult {
            value: 1.0,
            point: vec![1.0, 0.0],
            iterations: 0,
            tolerance: 0.0,
            infeasibility: 0.0,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = random_interior_point(q, &mut rng);
    let rows = constraint_rows(q);
    let m = rows.len() as f64;
    let target_gap = (tol / (10.0 * q as f64)).max(1e-14);
    let mut t = 1.0;
    let mut iterations = 0;
    let slack = |x: &[f64], a: &[f64]| a.iter().zip(x).map(|(ai, xi)| ai * xi).sum::<f64>();
    // barrier objective: t·(Σ x ln x) − Σ ln g_j(x)
    let objective = |x: &[f64], t: f64| -> f64 {
        let mut f = -t * entropy(x);
        for a in &rows {
            let g = slack(x, a);
            if g <= 0.0 {
                return f64::INFINITY;
            }
            f -= g.ln();
        }
        f
    };
    loop {
        // centering by equality-constrained Newton
        for _ in 0..200 {
            iterations += 1;
            if iterations > MAX_ITERATIONS {
                return Err(Error::NonConvergence(MAX_ITERATIONS));
            }
            let mut grad: Vec<f64> = x.iter().map(|&v| t * (v.ln() + 1.0)).collect();
            let mut hess = vec![vec![0.0; q]; q];
            for i in 0..q {
                hess[i][i] = t / x[i];
            }
            for a in &rows {
                let g = slack(&x, a);
                for i in 0..q {
                    grad[i] -= a[i] / g;
                    for j in 0..q {
                        hess[i][j] += a[i] * a[j] / (g * g);
                    }
                }
            }
            // KKT system [H 1; 1ᵀ 0]
            let mut kkt = vec![vec![0.0; q + 1]; q + 1];
            for i in 0..q {
                kkt[i][..q].copy_from_slice(&hess[i]);
                kkt[i][q] = 1.0;
                kkt[q][i] = 1.0;
            }
            let mut rhs: Vec<f64> = grad.iter().map(|g| -g).collect();
            rhs.push(0.0);
            let sol = solve_dense(kkt, rhs).ok_or(Error::NonConvergence(iterations))?;
            let dx = &sol[..q];
            let decrement: f64 = -dx.iter().zip(&grad).map(|(d, g)| d * g).sum::<f64>();
            if decrement / 2.0 < 1e-15 {
                break;
            }
            let f0 = objective(&x, t);
            let mut step = 1.0;
            loop {
                let cand: Vec<f64> = x.iter().zip(dx).map(|(xi, di)| xi + step * di).collect();
                if cand.iter().all(|&v| v > 0.0)
                    && objective(&cand, t) <= f0 - 0.25 * step * decrement
                {
                    x = cand;
                    break;
                }
                step *= 0.5;
                if step < 1e-20 {
                    break;
                }
            }
            if step < 1e-20 {
                break;
            }
        }
        if m / t < target_gap {
            break;
        }
        t *= 8.0;
    }
    let value = phi(&x)?;
    Ok(OptimizationResult {
        value,
        point: x.clone(),
        iterations,
        tolerance: m / t,
        infeasibility: infeasibility(&x),
    })
}

/// `μ_i = ⌊n α_i⌋` for `i ≥ 2` and `μ_1 = n − Σ_{i≥2} μ_i`.
///
/// `alpha` must be a probability vector. Membership in Ω is not required;
/// a vector that is not weakly decreasing is reported as `NonMonotone`
/// when the parts come out of order.
pub fn mu_partition(alpha: &[f64], n: usize) -> Result<Partition> {
    if alpha.is_empty() {
        return Err(Error::Infeasible("empty vector".into()));
    }
    if let Some(bad) = alpha.iter().find(|a| !(**a >= 0.0)) {
        return Err(Error::Infeasible(format!("entry {bad} is negative")));
    }
    let total: f64 = alpha.iter().sum();
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::Infeasible(format!("entries sum to {total}")));
    }
    // a tiny allowance so that e.g. 10 · 0.3 floors to 3
    let floor = |a: f64| ((n as f64) * a + 1e-9).floor().max(0.0) as usize;
    let mut mu: Vec<usize> = alpha.iter().skip(1).map(|&a| floor(a)).collect();
    let rest: usize = mu.iter().sum();
    if rest > n {
        return Err(Error::Infeasible(format!("floors sum to {rest} > {n}")));
    }
    mu.insert(0, n - rest);
    if mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NonMonotone(format!(
            "parts {mu:?} are not weakly decreasing"
        )));
    }
    Partition::new(mu.into_iter().filter(|&p| p > 0).collect())
}

pub const UPPER_BOUND: f64 = 2.0 + 2.0 * std::f64::consts::SQRT_2;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundRow {
    pub n: usize,
    pub c_n: u128,
    pub nth_root: f64,
    pub upper_bound: f64,
    /// `(dim L)^{n+1}`.
    pub trivial_bound: u128,
    pub certified: bool,
}

impl BoundRow {
    pub fn within_trivial(&self) -> bool {
        self.c_n <= self.trivial_bound
    }

    pub fn within_upper(&self) -> bool {
        self.nth_root <= 4.829
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub rows: Vec<BoundRow>,
}

impl BoundReport {
    pub const LIMIT_NOTE: &'static str =
        "the limit of c_n^(1/n) is asymptotic and is not verified at finite n";

    pub fn passed(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.within_trivial() && r.within_upper())
    }
}

/// `c_n`, `c_n^{1/n}` and both bounds for each `n` in the range.
pub fn bound_report(
    alg: &GradedLieAlgebra,
    ns: impl IntoIterator<Item = usize>,
    opts: &CodimOptions,
) -> Result<BoundReport> {
    let mut rows = Vec::new();
    for n in ns {
        let r = graded_codimension(alg, n, opts)?;
        let trivial = (alg.dim() as u128)
            .checked_pow(n as u32 + 1)
            .ok_or(Error::Overflow)?;
        rows.push(BoundRow {
            n,
            c_n: r.value,
            nth_root: (r.value as f64).powf(1.0 / n as f64),
            upper_bound: UPPER_BOUND,
            trivial_bound: trivial,
            certified: r.report.certified,
        });
    }
    Ok(BoundReport { rows })
}
