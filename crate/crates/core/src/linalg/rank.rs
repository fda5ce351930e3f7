//! Rank of integer matrices stored as sparse rows.
//!
//! Exact ranks use fraction-free elimination: a row is reduced against a pivot
//! row by cross-multiplication and the result is divided by its content, so no
//! rational arithmetic is ever needed. The kernel first runs on checked `i128`
//! and restarts on `BigInt` if any intermediate overflows. Modular ranks run the
//! same elimination over `Z/p` for random primes above 2^61.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{primitive_integer_vector, QMatrix};

/// Sparse integer row: `(column, value)` pairs sorted by column, no zero values.
pub type SparseRow = Vec<(u32, i128)>;

/// Builds a sparse row from a dense slice.
pub fn sparse_from_dense(v: &[i128]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| **x != 0)
        .map(|(i, &x)| (i as u32, x))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankMode {
    Exact,
    Modular,
    /// Exact when `rows * cols <= exact_entry_limit`, modular above.
    Auto {
        exact_entry_limit: usize,
    },
}

impl Default for RankMode {
    fn default() -> Self {
        RankMode::Auto {
            exact_entry_limit: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankMethod {
    Exact,
    Modular(Vec<u64>),
}

/// Rank together with how it was obtained.
///
/// `certified` is true for exact ranks, and for modular ranks only when every
/// prime agreed; in the latter case `probabilistic` flags the caveat that a
/// modular rank can undercount the rational rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub rank: usize,
    pub method: RankMethod,
    pub certified: bool,
    pub probabilistic: bool,
}

impl RankReport {
    pub fn exact(rank: usize) -> Self {
        RankReport {
            rank,
            method: RankMethod::Exact,
            certified: true,
            probabilistic: false,
        }
    }

    /// Sums ranks of independent blocks; the method degrades to modular if any block was.
    pub fn combine<'a>(reports: impl IntoIterator<Item = &'a RankReport>) -> RankReport {
        let mut out = RankReport::exact(0);
        let mut primes: Vec<u64> = Vec::new();
        let mut modular = false;
        for r in reports {
            out.rank += r.rank;
            out.certified &= r.certified;
            out.probabilistic |= r.probabilistic;
            if let RankMethod::Modular(ps) = &r.method {
                modular = true;
                for p in ps {
                    if !primes.contains(p) {
                        primes.push(*p);
                    }
                }
            }
        }
        if modular {
            primes.sort_unstable();
            out.method = RankMethod::Modular(primes);
        }
        out
    }

    pub fn method_name(&self) -> &'static str {
        match self.method {
            RankMethod::Exact => "exact",
            RankMethod::Modular(_) => "modular",
        }
    }
}

trait ExactInt: Clone + PartialEq + Sized {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn mul_checked(&self, o: &Self) -> Option<Self>;
    fn sub_checked(&self, o: &Self) -> Option<Self>;
    fn gcd_with(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
    fn is_neg(&self) -> bool;
    fn negate(&self) -> Self;
    fn is_unit(&self) -> bool;
}

impl ExactInt for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    // i128::MIN is rejected so that gcd and negation never overflow.
    fn mul_checked(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o).filter(|&v| v != i128::MIN)
    }
    fn sub_checked(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o).filter(|&v| v != i128::MIN)
    }
    fn gcd_with(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn negate(&self) -> Self {
        -*self
    }
    fn is_unit(&self) -> bool {
        *self == 1
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_checked(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub_checked(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn gcd_with(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_neg(&self) -> bool {
        Signed::is_negative(self)
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_unit(&self) -> bool {
        One::is_one(self)
    }
}

struct Overflow;

/// Incremental fraction-free semi-echelon basis (leading terms distinct).
struct IntEchelon<T: ExactInt> {
    rows: Vec<Vec<(u32, T)>>,
    lead: HashMap<u32, usize>,
}

impl<T: ExactInt> IntEchelon<T> {
    fn new() -> Self {
        IntEchelon {
            rows: Vec::new(),
            lead: HashMap::new(),
        }
    }

    fn normalize(row: &mut [(u32, T)]) {
        let mut g = T::zero();
        for (_, x) in row.iter() {
            g = g.gcd_with(x);
            if g.is_unit() {
                break;
            }
        }
        if !g.is_zero() && !g.is_unit() {
            for (_, x) in row.iter_mut() {
                *x = x.div_exact(&g);
            }
        }
        if row.first().is_some_and(|(_, x)| x.is_neg()) {
            for (_, x) in row.iter_mut() {
                *x = x.negate();
            }
        }
    }

    /// `b*row - a*pivot` merged, dropping zeros.
    fn combine(
        row: &[(u32, T)],
        b: &T,
        pivot: &[(u32, T)],
        a: &T,
    ) -> Result<Vec<(u32, T)>, Overflow> {
        let mut out = Vec::with_capacity(row.len() + pivot.len());
        let (mut i, mut j) = (0, 0);
        while i < row.len() || j < pivot.len() {
            let ci = row.get(i).map_or(u32::MAX, |e| e.0);
            let cj = pivot.get(j).map_or(u32::MAX, |e| e.0);
            if ci < cj {
                out.push((ci, row[i].1.mul_checked(b).ok_or(Overflow)?));
                i += 1;
            } else if cj < ci {
                out.push((
                    cj,
                    T::zero()
                        .sub_checked(&pivot[j].1.mul_checked(a).ok_or(Overflow)?)
                        .ok_or(Overflow)?,
                ));
                j += 1;
            } else {
                let x = row[i].1.mul_checked(b).ok_or(Overflow)?;
                let y = pivot[j].1.mul_checked(a).ok_or(Overflow)?;
                let v = x.sub_checked(&y).ok_or(Overflow)?;
                if !v.is_zero() {
                    out.push((ci, v));
                }
                i += 1;
                j += 1;
            }
        }
        Ok(out)
    }

    /// Inserts a row; `Ok(true)` iff it was independent of the rows so far.
    fn insert(&mut self, mut row: Vec<(u32, T)>) -> Result<bool, Overflow> {
        Self::normalize(&mut row);
        loop {
            let Some((c, a)) = row.first().cloned() else {
                return Ok(false);
            };
            match self.lead.get(&c) {
                Some(&pi) => {
                    let pivot = &self.rows[pi];
                    let b = pivot[0].1.clone();
                    let g = a.gcd_with(&b);
                    let (a, b) = (a.div_exact(&g), b.div_exact(&g));
                    row = Self::combine(&row, &b, pivot, &a)?;
                    Self::normalize(&mut row);
                }
                None => {
                    self.lead.insert(c, self.rows.len());
                    self.rows.push(row);
                    return Ok(true);
                }
            }
        }
    }
}

/// Exact rank; also returns the indices of a maximal independent subset of rows
/// (the rows that raised the rank when inserted in order).
pub fn exact_rank_with_basis(rows: &[SparseRow]) -> (usize, Vec<usize>) {
    let mut ech = IntEchelon::<i128>::new();
    let mut picked = Vec::new();
    let mut overflowed = false;
    for (k, r) in rows.iter().enumerate() {
        match ech.insert(r.clone()) {
            Ok(true) => picked.push(k),
            Ok(false) => {}
            Err(Overflow) => {
                overflowed = true;
                break;
            }
        }
    }
    if !overflowed {
        return (picked.len(), picked);
    }
    let big: Vec<Vec<(u32, BigInt)>> = rows
        .iter()
        .map(|r| r.iter().map(|&(c, x)| (c, BigInt::from(x))).collect())
        .collect();
    exact_rank_big_with_basis(&big)
}

pub fn exact_rank(rows: &[SparseRow]) -> usize {
    exact_rank_with_basis(rows).0
}

pub fn exact_rank_big_with_basis(rows: &[Vec<(u32, BigInt)>]) -> (usize, Vec<usize>) {
    let mut ech = IntEchelon::<BigInt>::new();
    let mut picked = Vec::new();
    for (k, r) in rows.iter().enumerate() {
        let independent = matches!(ech.insert(r.clone()), Ok(true));
        if independent {
            picked.push(k);
        }
    }
    (picked.len(), picked)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// A uniformly chosen prime in `[2^61, 2^62)`.
pub fn random_prime(rng: &mut impl Rng) -> u64 {
    loop {
        let c = rng.gen_range((1u64 << 61)..(1u64 << 62)) | 1;
        if is_prime_u64(c) {
            return c;
        }
    }
}

fn to_mod(x: i128, p: u64) -> u64 {
    x.rem_euclid(p as i128) as u64
}

/// Rank of the rows modulo the prime `p`. Never exceeds the rational rank.
pub fn modular_rank(rows: &[SparseRow], p: u64) -> usize {
    let mut pivots: Vec<Vec<(u32, u64)>> = Vec::new();
    let mut lead: HashMap<u32, usize> = HashMap::new();
    for r in rows {
        let mut row: Vec<(u32, u64)> = r
            .iter()
            .map(|&(c, x)| (c, to_mod(x, p)))
            .filter(|&(_, x)| x != 0)
            .collect();
        loop {
            let Some(&(c, a)) = row.first() else { break };
            match lead.get(&c) {
                Some(&pi) => {
                    let pivot = &pivots[pi];
                    let mut out = Vec::with_capacity(row.len() + pivot.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < pivot.len() {
                        let ci = row.get(i).map_or(u32::MAX, |e| e.0);
                        let cj = pivot.get(j).map_or(u32::MAX, |e| e.0);
                        if ci < cj {
                            out.push(row[i]);
                            i += 1;
                        } else if cj < ci {
                            out.push((cj, p - mul_mod(a, pivot[j].1, p)));
                            j += 1;
                        } else {
                            let v = (row[i].1 + p - mul_mod(a, pivot[j].1, p)) % p;
                            if v != 0 {
                                out.push((ci, v));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                    row = out;
                }
                None => {
                    let inv = pow_mod(a, p - 2, p);
                    for e in row.iter_mut() {
                        e.1 = mul_mod(e.1, inv, p);
                    }
                    lead.insert(c, pivots.len());
                    pivots.push(row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Rank of integer sparse rows according to `mode`. `ncols` is only used by
/// `RankMode::Auto` to size the block.
pub fn rank_rows(rows: &[SparseRow], ncols: usize, mode: RankMode, seed: u64) -> RankReport {
    let exact = match mode {
        RankMode::Exact => true,
        RankMode::Modular => false,
        RankMode::Auto { exact_entry_limit } => {
            rows.len().saturating_mul(ncols) <= exact_entry_limit
        }
    };
    if exact {
        return RankReport::exact(exact_rank(rows));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let primes = [random_prime(&mut rng), random_prime(&mut rng)];
    let ranks: Vec<usize> = primes.iter().map(|&p| modular_rank(rows, p)).collect();
    let agree = ranks.windows(2).all(|w| w[0] == w[1]);
    RankReport {
        rank: *ranks.iter().max().unwrap_or(&0),
        method: RankMethod::Modular(primes.to_vec()),
        certified: agree,
        probabilistic: true,
    }
}

/// Rank of a rational matrix. Rows are cleared to primitive integer vectors first.
pub fn rank_certified(m: &QMatrix, mode: RankMode, seed: u64) -> RankReport {
    let big: Vec<Vec<(u32, BigInt)>> = m
        .to_rows()
        .iter()
        .map(|r| {
            primitive_integer_vector(r)
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !num_traits::Zero::is_zero(x))
                .map(|(c, x)| (c as u32, x))
                .collect()
        })
        .collect();
    let small: Option<Vec<SparseRow>> = big
        .iter()
        .map(|r| {
            r.iter()
                .map(|(c, x)| x.to_i128().map(|v| (*c, v)))
                .collect()
        })
        .collect();
    match small {
        Some(rows) => rank_rows(&rows, m.cols(), mode, seed),
        None => RankReport::exact(exact_rank_big_with_basis(&big).0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::QMatrix;

    #[test]
    fn identity_and_zero() {
        let id = QMatrix::identity(5);
        assert_eq!(rank_certified(&id, RankMode::Exact, 0).rank, 5);
        let z = QMatrix::zeros(4, 6);
        assert_eq!(rank_certified(&z, RankMode::Exact, 0).rank, 0);
        assert_eq!(rank_certified(&z, RankMode::Modular, 0).rank, 0);
    }

    #[test]
    fn modular_agrees_with_exact_on_random_integer_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..20 {
            let rank_target = rng.gen_range(1..=20);
            // product of 20xk and kx30 matrices has rank <= k
            let a: Vec<Vec<i64>> = (0..20)
                .map(|_| (0..rank_target).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            let b: Vec<Vec<i64>> = (0..rank_target)
                .map(|_| (0..30).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            let rows: Vec<SparseRow> = (0..20)
                .map(|i| {
                    let dense: Vec<i128> = (0..30)
                        .map(|j| (0..rank_target).map(|k| (a[i][k] * b[k][j]) as i128).sum())
                        .collect();
                    sparse_from_dense(&dense)
                })
                .collect();
            let exact = exact_rank(&rows);
            let modular = rank_rows(&rows, 30, RankMode::Modular, trial);
            assert!(exact <= rank_target);
            assert_eq!(modular.rank, exact);
            assert!(modular.certified && modular.probabilistic);
        }
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = 1i128 << 100;
        let rows = vec![
            vec![(0, big), (1, 3)],
            vec![(0, 3), (1, big)],
            vec![(0, big + 3), (1, big + 3)],
        ];
        assert_eq!(exact_rank(&rows), 2);
    }

    #[test]
    fn primes_are_prime() {
        assert!(is_prime_u64(2_305_843_009_213_693_951)); // 2^61 - 1
        assert!(!is_prime_u64(2_305_843_009_213_693_953));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = random_prime(&mut rng);
        assert!(p > 1 << 30 && is_prime_u64(p));
    }

    #[test]
    fn combine_reports() {
        let a = RankReport::exact(3);
        let b = RankReport {
            rank: 2,
            method: RankMethod::Modular(vec![5, 7]),
            certified: true,
            probabilistic: true,
        };
        let c = RankReport::combine([&a, &b]);
        assert_eq!(c.rank, 5);
        assert_eq!(c.method_name(), "modular");
        assert!(c.probabilistic);
    }
}
