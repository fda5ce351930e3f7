//! Partitions, permutations, Young tableaux and symmetrizers.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::q;
use crate::poly::{apply_permutation, LiePolynomial};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Drops zeros and sorts the parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| (row - j - 1) + (conj.0[j] - i - 1) + 1)
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition(Vec::new()));
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in lexicographically descending order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `n! / ∏ hooks`.
pub fn specht_dim(lambda: &Partition) -> BigUint {
    let hooks = lambda
        .hook_lengths()
        .into_iter()
        .flatten()
        .fold(BigUint::one(), |acc, h| acc * BigUint::from(h));
    factorial(lambda.n()) / hooks
}

fn branching_memo() -> &'static Mutex<HashMap<Partition, BigUint>> {
    static MEMO: OnceLock<Mutex<HashMap<Partition, BigUint>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `dim S^λ = Σ_{removable corners c} dim S^{λ - c}`, memoized across calls.
pub fn specht_dim_branching(lambda: &Partition) -> BigUint {
    if lambda.n() <= 1 {
        return BigUint::one();
    }
    if let Some(v) = branching_memo().lock().expect("memo lock").get(lambda) {
        return v.clone();
    }
    let parts = lambda.parts();
    let mut total = BigUint::zero();
    for i in 0..parts.len() {
        if i + 1 == parts.len() || parts[i] > parts[i + 1] {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            total += specht_dim_branching(&Partition::from_unsorted(smaller));
        }
    }
    branching_memo()
        .lock()
        .expect("memo lock")
        .insert(lambda.clone(), total.clone());
    total
}

/// A permutation of `0..n`; `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidTableau(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Transposition of `a` and `b` in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a, b);
        p
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycle lengths, sorted descending.
    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.n()];
        let mut lens = Vec::new();
        for i in 0..self.n() {
            if !seen[i] {
                let mut len = 0;
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    j = self.images[j];
                    len += 1;
                }
                lens.push(len);
            }
        }
        Partition::from_unsorted(lens)
    }

    pub fn sign(&self) -> i64 {
        let ct = self.cycle_type();
        if ct.parts().iter().filter(|&&l| l % 2 == 0).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// All permutations of `items` (as image lists), in lexicographic order.
pub fn permutations_of<T: Clone + Ord>(items: &[T]) -> Vec<Vec<T>> {
    let mut cur: Vec<T> = items.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    // next_permutation
    loop {
        let n = cur.len();
        if n < 2 {
            return out;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Every element of `S_n`, lexicographic.
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    let items: Vec<usize> = (0..n).collect();
    permutations_of(&items)
        .into_iter()
        .map(|images| Permutation { images })
        .collect()
}

/// All permutations of `0..n` that preserve each of the given disjoint sets.
fn set_stabilizer(n: usize, sets: &[Vec<usize>]) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(n)];
    for set in sets {
        if set.len() < 2 {
            continue;
        }
        let perms = permutations_of(set);
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for p in &out {
            for images in &perms {
                let mut q = p.clone();
                for (src, &dst) in set.iter().zip(images) {
                    q.images[*src] = dst;
                }
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// A filling of a Young diagram by `0..n`, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct YoungTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let n = shape.n();
        let mut seen = vec![false; n];
        for &x in rows.iter().flatten() {
            if x >= n || seen[x] {
                return Err(Error::InvalidTableau(format!(
                    "entry {x} repeated or out of range"
                )));
            }
            seen[x] = true;
        }
        Ok(YoungTableau { shape, rows })
    }

    /// Fills the diagram column by column, top to bottom.
    pub fn column_filled(shape: &Partition) -> Self {
        let conj = shape.conjugate();
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
        let mut next = 0;
        for (j, &h) in conj.parts().iter().enumerate() {
            for row in rows.iter_mut().take(h) {
                row[j] = next;
                next += 1;
            }
        }
        YoungTableau {
            shape: shape.clone(),
            rows,
        }
    }

    /// Fills the diagram row by row, left to right.
    pub fn row_filled(shape: &Partition) -> Self {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&p| {
                let r: Vec<usize> = (next..next + p).collect();
                next += p;
                r
            })
            .collect();
        YoungTableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let conj = self.shape.conjugate();
        conj.parts()
            .iter()
            .enumerate()
            .map(|(j, &h)| (0..h).map(|i| self.rows[i][j]).collect())
            .collect()
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .columns()
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }

    pub fn row_group_order(&self) -> u128 {
        self.rows
            .iter()
            .map(|r| (1..=r.len() as u128).product::<u128>())
            .product()
    }

    pub fn column_group_order(&self) -> u128 {
        self.columns()
            .iter()
            .map(|c| (1..=c.len() as u128).product::<u128>())
            .product()
    }

    pub fn row_group(&self) -> Vec<Permutation> {
        set_stabilizer(self.n(), &self.rows)
    }

    pub fn column_group(&self) -> Vec<Permutation> {
        set_stabilizer(self.n(), &self.columns())
    }
}

impl fmt::Debug for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Every standard tableau of the given shape.
pub fn standard_tableaux(shape: &Partition) -> Vec<YoungTableau> {
    fn rec(
        shape: &[usize],
        fill: &mut Vec<Vec<usize>>,
        next: usize,
        n: usize,
        out: &mut Vec<YoungTableau>,
    ) {
        if next == n {
            out.push(YoungTableau::new(fill.clone()).expect("valid filling"));
            return;
        }
        for i in 0..shape.len() {
            let len = fill[i].len();
            if len < shape[i] && (i == 0 || fill[i - 1].len() > len) {
                fill[i].push(next);
                rec(shape, fill, next + 1, n, out);
                fill[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut fill = vec![Vec::new(); shape.len()];
    rec(shape.parts(), &mut fill, 0, shape.n(), &mut out);
    out
}

pub const DEFAULT_SYMMETRIZER_CAP: u128 = 10_000_000;

/// `Σ sgn(τ) τ∘σ` over `σ ∈ R_T`, `τ ∈ C_T`, as explicit signed permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizerSum {
    pub n: usize,
    pub terms: Vec<(i64, Permutation)>,
}

/// Expands `e*_T = Σ sgn(τ) τ∘σ`, refusing when `|R_T|·|C_T|` exceeds `cap`.
pub fn young_symmetrizer_star(t: &YoungTableau, cap: u128) -> Result<SymmetrizerSum> {
    let terms = t.row_group_order() * t.column_group_order();
    if terms > cap {
        return Err(Error::SymmetrizerTooLarge { terms, cap });
    }
    let rows = t.row_group();
    let cols = t.column_group();
    let mut out = Vec::with_capacity(terms as usize);
    for tau in &cols {
        let s = tau.sign();
        for sigma in &rows {
            out.push((s, tau.compose(sigma)));
        }
    }
    Ok(SymmetrizerSum {
        n: t.n(),
        terms: out,
    })
}

/// `Σ sign · π(p)`, with coefficients of identical monomials merged.
pub fn apply_symmetrizer(s: &SymmetrizerSum, p: &LiePolynomial) -> Result<LiePolynomial> {
    if s.n != p.degree() {
        return Err(Error::SizeMismatch {
            perm: s.n,
            poly: p.degree(),
        });
    }
    let mut terms = Vec::with_capacity(s.terms.len() * p.len());
    for (sign, perm) in &s.terms {
        let moved = apply_permutation(p, perm)?;
        let c = q(*sign);
        terms.extend(moved.terms().iter().map(|(a, b)| (a * &c, b.clone())));
    }
    Ok(LiePolynomial::new_unchecked(p.degree(), terms).merged())
}

/// Row-symmetrizer `a_T = Σ_{σ ∈ R_T} σ`.
pub fn row_symmetrizer(t: &YoungTableau) -> SymmetrizerSum {
    SymmetrizerSum {
        n: t.n(),
        terms: t.row_group().into_iter().map(|p| (1, p)).collect(),
    }
}

/// Column antisymmetrizer `b_T = Σ_{τ ∈ C_T} sgn(τ) τ`.
pub fn column_antisymmetrizer(t: &YoungTableau) -> SymmetrizerSum {
    SymmetrizerSum {
        n: t.n(),
        terms: t
            .column_group()
            .into_iter()
            .map(|p| (p.sign(), p))
            .collect(),
    }
}

/// Product in the group algebra: `(Σ a_i g_i)(Σ b_j h_j) = Σ a_i b_j g_i∘h_j`.
pub fn symmetrizer_product(a: &SymmetrizerSum, b: &SymmetrizerSum) -> SymmetrizerSum {
    let mut acc: HashMap<Permutation, i64> = HashMap::new();
    for (sa, g) in &a.terms {
        for (sb, h) in &b.terms {
            *acc.entry(g.compose(h)).or_insert(0) += sa * sb;
        }
    }
    let mut terms: Vec<(i64, Permutation)> = acc
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(p, c)| (c, p))
        .collect();
    terms.sort_by(|x, y| x.1.cmp(&y.1));
    SymmetrizerSum { n: a.n, terms }
}

/// The region of partitions allowed by the θ-valuation of the five-dimensional
/// example: `λ_6 = 0` and `λ_1 + 1 ≥ λ_4 + λ_5`.
pub fn theta_admissible(lambda: &Partition) -> bool {
    lambda.part(6) == 0 && lambda.part(1) + 1 >= lambda.part(4) + lambda.part(5)
}

/// Irreducible character `χ^λ` at a permutation of cycle type `mu`, by the
/// Murnaghan–Nakayama rule.
pub fn character(lambda: &Partition, mu: &Partition) -> i64 {
    fn rec(
        parts: Vec<usize>,
        cycles: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), i64>,
    ) -> i64 {
        let Some((&k, rest)) = cycles.split_first() else {
            return if parts.iter().all(|&p| p == 0) { 1 } else { 0 };
        };
        let key = (parts.clone(), cycles.len());
        if let Some(v) = memo.get(&key) {
            return *v;
        }
        // beta-numbers: removing a k-rim hook = moving a bead from b to b - k
        let len = parts.len();
        let beta: Vec<i64> = parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 + (len - 1 - i) as i64)
            .collect();
        let mut total = 0;
        for i in 0..len {
            let target = beta[i] - k as i64;
            if target < 0 || beta.contains(&target) {
                continue;
            }
            let crossed = beta.iter().filter(|&&b| b > target && b < beta[i]).count();
            let mut nb = beta.clone();
            nb[i] = target;
            nb.sort_unstable_by(|a, b| b.cmp(a));
            let np: Vec<usize> = nb
                .iter()
                .enumerate()
                .map(|(j, &b)| (b - (len - 1 - j) as i64) as usize)
                .collect();
            let sign = if crossed % 2 == 0 { 1 } else { -1 };
            total += sign * rec(np, rest, memo);
        }
        memo.insert(key, total);
        total
    }
    rec(lambda.parts().to_vec(), mu.parts(), &mut HashMap::new())
}

/// Number of permutations of cycle type `mu` in `S_n`.
pub fn class_size(mu: &Partition) -> BigUint {
    let mut z = BigUint::one();
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    for (k, m) in counts {
        z *= BigUint::from(k).pow(m as u32) * factorial(m);
    }
    factorial(mu.n()) / z
}

/// A permutation of the given cycle type, cycles on consecutive points.
pub fn class_representative(mu: &Partition) -> Permutation {
    let n = mu.n();
    let mut images: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in mu.parts() {
        for i in 0..len {
            images[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    Permutation { images }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(0), vec![p(&[])]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(6).len(), 11);
        let five = partitions_of(5);
        assert_eq!(five.first().unwrap(), &p(&[5]));
        assert_eq!(five.last().unwrap(), &p(&[1, 1, 1, 1, 1]));
        assert!(five.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn parse_and_display() {
        let l: Partition = "2,2,2,1,1".parse().unwrap();
        assert_eq!(l, p(&[2, 2, 2, 1, 1]));
        assert_eq!(l.to_string(), "2,2,2,1,1");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
    }

    #[test]
    fn small_specht_dims() {
        assert_eq!(specht_dim(&p(&[4])), BigUint::one());
        assert_eq!(specht_dim(&p(&[1, 1, 1])), BigUint::one());
        assert_eq!(specht_dim(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(specht_dim_branching(&p(&[2, 2])), BigUint::from(2u32));
        assert_eq!(specht_dim_branching(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(specht_dim_branching(&p(&[1])), BigUint::one());
        for n in 1..7 {
            for l in partitions_of(n) {
                assert_eq!(specht_dim(&l), BigUint::from(standard_tableaux(&l).len()));
            }
        }
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        for n in 0..=8 {
            let s = partitions_of(n)
                .iter()
                .fold(BigUint::zero(), |acc, l| acc + specht_dim(l).pow(2));
            assert_eq!(s, factorial(n));
        }
    }

    #[test]
    fn permutation_basics() {
        let s = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let t = Permutation::transposition(3, 0, 1);
        assert_eq!(s.compose(&t).images(), &[2, 1, 0]);
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(3));
        assert_eq!(s.sign(), 1);
        assert_eq!(t.sign(), -1);
        assert_eq!(symmetric_group(4).len(), 24);
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn symmetrizer_examples() {
        let t = YoungTableau::new(vec![vec![0, 1]]).unwrap();
        let s = young_symmetrizer_star(&t, DEFAULT_SYMMETRIZER_CAP).unwrap();
        let mut terms = s.terms.clone();
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        assert_eq!(
            terms,
            vec![
                (1, Permutation::identity(2)),
                (1, Permutation::transposition(2, 0, 1))
            ]
        );

        let t = YoungTableau::new(vec![vec![0], vec![1]]).unwrap();
        let mut terms = young_symmetrizer_star(&t, DEFAULT_SYMMETRIZER_CAP)
            .unwrap()
            .terms;
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        assert_eq!(
            terms,
            vec![
                (1, Permutation::identity(2)),
                (-1, Permutation::transposition(2, 0, 1))
            ]
        );

        let t = YoungTableau::column_filled(&p(&[2, 2, 2, 1, 1]));
        assert_eq!(t.row_group_order() * t.column_group_order(), 5760);
        assert_eq!(
            young_symmetrizer_star(&t, DEFAULT_SYMMETRIZER_CAP)
                .unwrap()
                .terms
                .len(),
            5760
        );
        assert!(matches!(
            young_symmetrizer_star(&t, 100),
            Err(Error::SymmetrizerTooLarge {
                terms: 5760,
                cap: 100
            })
        ));
    }

    #[test]
    fn symmetrizer_is_quasi_idempotent() {
        // (e*)^2 = (n!/dim S^λ) e*
        for l in partitions_of(4) {
            let t = YoungTableau::column_filled(&l);
            let e = young_symmetrizer_star(&t, DEFAULT_SYMMETRIZER_CAP).unwrap();
            let e_merged = symmetrizer_product(
                &SymmetrizerSum {
                    n: 4,
                    terms: vec![(1, Permutation::identity(4))],
                },
                &e,
            );
            let sq = symmetrizer_product(&e, &e);
            let gamma = 24 / specht_dim(&l).to_u64_digits().first().copied().unwrap_or(0) as i64;
            let scaled: Vec<(i64, Permutation)> = e_merged
                .terms
                .iter()
                .map(|(c, p)| (c * gamma, p.clone()))
                .collect();
            assert_eq!(sq.terms, scaled, "{l:?}");
        }
    }

    #[test]
    fn column_filled_tableau() {
        let t = YoungTableau::column_filled(&p(&[3, 2]));
        assert_eq!(t.rows(), &[vec![0, 2, 4], vec![1, 3]]);
        assert_eq!(t.columns(), vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert!(t.is_standard());
    }

    #[test]
    fn theta_examples() {
        assert!(theta_admissible(&p(&[2, 2, 2, 1, 1])));
        assert!(!theta_admissible(&p(&[1, 1, 1, 1, 1, 1])));
        assert!(!theta_admissible(&p(&[3, 3, 3, 3, 3])));
        assert!(theta_admissible(&p(&[1, 1, 1, 1, 1])));
        for n in 0..=6 {
            let bad: Vec<Partition> = partitions_of(n)
                .into_iter()
                .filter(|l| !theta_admissible(l))
                .collect();
            if n == 6 {
                assert_eq!(bad, vec![p(&[1, 1, 1, 1, 1, 1])]);
            } else {
                assert!(bad.is_empty());
            }
        }
    }

    #[test]
    fn characters_orthogonality() {
        for n in 1..=6 {
            let parts = partitions_of(n);
            let nf = factorial(n);
            for a in &parts {
                assert_eq!(
                    character(a, &p(&vec![1; n])),
                    specht_dim(a).to_string().parse::<i64>().unwrap()
                );
                for b in &parts {
                    let mut s = num_bigint::BigInt::zero();
                    for mu in &parts {
                        s += num_bigint::BigInt::from(class_size(mu))
                            * character(a, mu)
                            * character(b, mu);
                    }
                    let expected = if a == b {
                        num_bigint::BigInt::from(nf.clone())
                    } else {
                        num_bigint::BigInt::zero()
                    };
                    assert_eq!(s, expected);
                }
            }
        }
    }

    #[test]
    fn class_representatives_have_their_type() {
        for mu in partitions_of(6) {
            assert_eq!(class_representative(&mu).cycle_type(), mu);
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..8, 1..6).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn conjugation_preserves_dimension(l in arb_partition()) {
            prop_assert_eq!(specht_dim(&l), specht_dim(&l.conjugate()));
            prop_assert_eq!(l.conjugate().conjugate(), l);
        }

        #[test]
        fn hook_matches_branching(l in arb_partition()) {
            prop_assert_eq!(specht_dim(&l), specht_dim_branching(&l));
        }

        #[test]
        fn compose_is_associative(
            x in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
            y in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
            z in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
        ) {
            let a: Vec<Permutation> = [x, y, z].into_iter().map(|v| Permutation::from_images(v).unwrap()).collect();
            let (x, y, z) = (&a[0], &a[1], &a[2]);
            prop_assert_eq!(x.compose(&y.compose(z)), x.compose(y).compose(z));
            prop_assert_eq!(x.compose(y).sign(), x.sign() * y.sign());
        }
    }
}
