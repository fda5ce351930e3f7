//! The Regev central polynomial of `t × t` matrices, alternating in
//! `x_1..x_{t²}` and in `y_1..y_{t²}`.

use std::collections::HashMap;
use std::ops::{Add, Mul, Neg};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::symmetric::{permutations_of, Permutation};

pub const NAIVE_MAX_T: usize = 2;
pub const DP_MAX_T: usize = 3;

/// Scalars the evaluators work over.
pub trait Ring: Clone + Zero + One + PartialEq + Neg<Output = Self> + Send + Sync {}

impl<T> Ring for T where T: Clone + Zero + One + PartialEq + Neg<Output = T> + Send + Sync {}

/// Dense square matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Ring> Mat<T> {
    pub fn zeros(n: usize) -> Self {
        Mat {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: rows.iter().map(Vec::len).find(|&l| l != n).unwrap_or(0),
            });
        }
        Ok(Mat {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix unit `e_{ij}`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n);
        m.data[i * n + j] = T::one();
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// `Some(c)` when the matrix is `c·I`.
    pub fn scalar_value(&self) -> Option<T> {
        let n = self.n;
        let c = self.data.first().cloned().unwrap_or_else(T::zero);
        for i in 0..n {
            for j in 0..n {
                let v = self.get(i, j);
                if (i == j && *v != c) || (i != j && !v.is_zero()) {
                    return None;
                }
            }
        }
        Some(c)
    }
}

impl<T: Ring> Mat<T>
where
    for<'a> &'a T: Mul<&'a T, Output = T> + Add<&'a T, Output = T>,
{
    pub fn mul(&self, other: &Mat<T>) -> Mat<T> {
        let n = self.n;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] = &out.data[i * n + j] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat<T>) -> Mat<T> {
        Mat {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Mat<T> {
        self.map(|x| -x.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    X,
    Y,
}

/// `x y (x x x)(y y y) … (x^{2t−1})(y^{2t−1})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegevDescriptor {
    pub t: usize,
}

impl RegevDescriptor {
    pub fn new(t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::GuardExceeded("t must be positive".into()));
        }
        Ok(RegevDescriptor { t })
    }

    /// Block sizes `1, 1, 3, 3, …, 2t−1, 2t−1`, alternating x-blocks and y-blocks.
    pub fn block_sizes(&self) -> Vec<(Slot, usize)> {
        (0..self.t)
            .flat_map(|k| [(Slot::X, 2 * k + 1), (Slot::Y, 2 * k + 1)])
            .collect()
    }

    pub fn slots(&self) -> Vec<Slot> {
        self.block_sizes()
            .into_iter()
            .flat_map(|(s, len)| std::iter::repeat(s).take(len))
            .collect()
    }

    pub fn degree(&self) -> usize {
        2 * self.t * self.t
    }

    pub fn arity(&self) -> usize {
        self.t * self.t
    }
}

fn check_args<T: Ring>(desc: &RegevDescriptor, xs: &[Mat<T>], ys: &[Mat<T>]) -> Result<usize> {
    let m = desc.arity();
    if xs.len() != m || ys.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: if xs.len() != m { xs.len() } else { ys.len() },
        });
    }
    let n = xs[0].n();
    if let Some(bad) = xs.iter().chain(ys).find(|a| a.n() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: bad.n(),
        });
    }
    Ok(n)
}

/// The full double sum over `σ, τ ∈ S_{t²}`.
pub fn regev_eval_naive<T: Ring>(
    desc: &RegevDescriptor,
    xs: &[Mat<T>],
    ys: &[Mat<T>],
) -> Result<Mat<T>>
where
    for<'a> &'a T: Mul<&'a T, Output = T> + Add<&'a T, Output = T>,
{
    if desc.t > NAIVE_MAX_T {
        return Err(Error::GuardExceeded(format!(
            "naive evaluation needs t <= {NAIVE_MAX_T}, got {}",
            desc.t
        )));
    }
    let n = check_args(desc, xs, ys)?;
    let slots = desc.slots();
    let perms: Vec<(bool, Vec<usize>)> = permutations_of(&(0..desc.arity()).collect::<Vec<_>>())
        .into_iter()
        .map(|p| {
            (
                Permutation::from_images(p.clone())
                    .expect("permutation")
                    .sign()
                    < 0,
                p,
            )
        })
        .collect();
    let mut acc = Mat::zeros(n);
    for (neg_s, sigma) in &perms {
        for (neg_t, tau) in &perms {
            let (mut xi, mut yi) = (0, 0);
            let mut prod = Mat::identity(n);
            for s in &slots {
                let next = match s {
                    Slot::X => {
                        xi += 1;
                        &xs[sigma[xi - 1]]
                    }
                    Slot::Y => {
                        yi += 1;
                        &ys[tau[yi - 1]]
                    }
                };
                prod = prod.mul(next);
                if prod.is_zero() {
                    break;
                }
            }
            acc = if neg_s != neg_t {
                acc.add(&prod.neg())
            } else {
                acc.add(&prod)
            };
        }
    }
    Ok(acc)
}

/// Same value as [`regev_eval_naive`] by a signed dynamic program over pairs of
/// used index subsets, scanning the slots left to right.
pub fn regev_eval_dp<T: Ring>(
    desc: &RegevDescriptor,
    xs: &[Mat<T>],
    ys: &[Mat<T>],
) -> Result<Mat<T>>
where
    for<'a> &'a T: Mul<&'a T, Output = T> + Add<&'a T, Output = T>,
{
    if desc.t > DP_MAX_T {
        return Err(Error::GuardExceeded(format!(
            "subset DP needs t <= {DP_MAX_T}, got {}",
            desc.t
        )));
    }
    let n = check_args(desc, xs, ys)?;
    let m = desc.arity();
    let mut layer: HashMap<(u32, u32), Mat<T>> = HashMap::new();
    layer.insert((0, 0), Mat::identity(n));
    for slot in desc.slots() {
        let mut next: HashMap<(u32, u32), Mat<T>> = HashMap::with_capacity(layer.len() * 2);
        for ((sx, sy), prefix) in layer {
            let (used, args) = match slot {
                Slot::X => (sx, xs),
                Slot::Y => (sy, ys),
            };
            for i in 0..m {
                if used & (1 << i) != 0 {
                    continue;
                }
                let inversions = (used >> (i + 1)).count_ones();
                let mut term = prefix.mul(&args[i]);
                if term.is_zero() {
                    continue;
                }
                if inversions % 2 == 1 {
                    term = term.neg();
                }
                let key = match slot {
                    Slot::X => (sx | 1 << i, sy),
                    Slot::Y => (sx, sy | 1 << i),
                };
                match next.get_mut(&key) {
                    Some(v) => *v = v.add(&term),
                    None => {
                        next.insert(key, term);
                    }
                }
            }
        }
        layer = next;
    }
    Ok(layer.into_values().next().unwrap_or_else(|| Mat::zeros(n)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub t: usize,
    pub tuples: usize,
    pub non_scalar: usize,
    pub nonzero: usize,
    /// Distinct nonzero scalar values seen.
    pub scalars: Vec<i64>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.non_scalar == 0 && self.nonzero > 0
    }
}

/// Index-th tuple of matrix units: base-`t²` digits, `x_1` first.
pub fn unit_tuple(t: usize, index: usize) -> (Vec<Mat<i64>>, Vec<Mat<i64>>) {
    let m = t * t;
    let mut rest = index;
    let mut units = Vec::with_capacity(2 * m);
    for _ in 0..2 * m {
        let u = rest % m;
        rest /= m;
        units.push(Mat::unit(t, u / t, u % t));
    }
    let ys = units.split_off(m);
    (units, ys)
}

/// Scalar value (if any) of `f_t` at the `index`-th matrix-unit tuple.
pub fn sweep_value(t: usize, index: usize) -> Option<i64> {
    let (xs, ys) = unit_tuple(t, index);
    let desc = RegevDescriptor { t };
    regev_eval_dp(&desc, &xs, &ys)
        .expect("sizes are consistent")
        .scalar_value()
}

/// Evaluates `f_t` on every tuple of matrix units (`(t²)^{2t²}` tuples).
pub fn centrality_sweep(t: usize) -> Result<SweepReport> {
    if t > 2 {
        return Err(Error::GuardExceeded(format!(
            "full sweep needs t <= 2, got {t}"
        )));
    }
    let m = t * t;
    let total = m.pow(2 * m as u32);
    let values: Vec<Option<i64>> = (0..total)
        .into_par_iter()
        .map(|i| sweep_value(t, i))
        .collect();
    let mut scalars: Vec<i64> = values
        .iter()
        .flatten()
        .copied()
        .filter(|&v| v != 0)
        .collect();
    let nonzero = scalars.len();
    scalars.sort_unstable();
    scalars.dedup();
    Ok(SweepReport {
        t,
        tuples: total,
        non_scalar: values.iter().filter(|v| v.is_none()).count(),
        nonzero,
        scalars,
    })
}

/// Seeded random integer tuples with entries in `-range..=range`.
pub fn random_tuples(
    t: usize,
    count: usize,
    range: i64,
    seed: u64,
) -> Vec<(Vec<Mat<i128>>, Vec<Mat<i128>>)> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mat = |rng: &mut rand_chacha::ChaCha8Rng| Mat {
        n: t,
        data: (0..t * t)
            .map(|_| rng.gen_range(-range..=range) as i128)
            .collect(),
    };
    (0..count)
        .map(|_| {
            let xs = (0..t * t).map(|_| mat(&mut rng)).collect();
            let ys = (0..t * t).map(|_| mat(&mut rng)).collect();
            (xs, ys)
        })
        .collect()
}
