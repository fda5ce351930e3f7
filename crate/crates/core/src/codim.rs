//! Graded codimensions and cocharacter multiplicities from evaluation blocks.
//!
//! A block collects, for one labeling of `x_1..x_n` by semigroup elements, the
//! values of every spanning left-normed monomial at every basis tuple whose
//! degrees match the labeling. Its row rank is the dimension of that labeling's
//! share of `V_n / (V_n ∩ Id)`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::GradedLieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::rank::{exact_rank_with_basis, rank_rows, RankMode, RankReport, SparseRow};
use crate::symmetric::{partitions_of, specht_dim, theta_admissible, Partition, YoungTableau};

/// Structure constants scaled to integers, for fast exact evaluation.
#[derive(Debug, Clone)]
pub struct IntAlgebra {
    dim: usize,
    degree: Vec<usize>,
    semigroup_size: usize,
    table: Vec<Vec<Vec<(usize, i128)>>>,
}

impl IntAlgebra {
    /// Brackets computed here equal `denom` times the true ones; ranks are unaffected.
    pub fn new(alg: &GradedLieAlgebra) -> Result<Self> {
        let s = alg.int_structure()?;
        Ok(IntAlgebra {
            dim: alg.dim(),
            degree: alg.degrees().to_vec(),
            semigroup_size: alg.semigroup().size(),
            table: s.table,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket(&self, a: &[i128], b: &[i128]) -> Result<Vec<i128>> {
        let mut out = vec![0i128; self.dim];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let xy = x.checked_mul(y).ok_or(Error::Overflow)?;
                for &(k, c) in &self.table[i][j] {
                    let t = xy.checked_mul(c).ok_or(Error::Overflow)?;
                    out[k] = out[k].checked_add(t).ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(out)
    }

    fn homogeneous_basis(&self, t: usize) -> Vec<usize> {
        (0..self.dim).filter(|&i| self.degree[i] == t).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodimOptions {
    pub rank_mode: RankMode,
    pub seed: u64,
    /// Largest `n` accepted by `graded_codimension`.
    pub cap: usize,
    /// Largest `n` accepted by the cocharacter computations.
    pub cochar_cap: usize,
    /// Use the `(n-1)!` monomials starting with `x_1` instead of all `n!`.
    pub reduced: bool,
    /// Compute one block per multiset of labels and weight it by its orbit size.
    pub orbit: bool,
}

impl Default for CodimOptions {
    fn default() -> Self {
        CodimOptions {
            rank_mode: RankMode::default(),
            seed: 0,
            cap: 7,
            cochar_cap: 6,
            reduced: true,
            orbit: true,
        }
    }
}

/// Evaluations of the spanning monomials for one labeling.
#[derive(Debug, Clone)]
pub struct EvaluationBlock {
    pub labeling: Vec<usize>,
    /// Left-normed index orders, one per row.
    pub rows: Vec<Vec<usize>>,
    /// Basis tuples, one per group of `dim` columns.
    pub tuples: Vec<Vec<usize>>,
    pub dim: usize,
    /// Sparse rows; column `c` is tuple `c / dim`, output coordinate `c % dim`.
    pub matrix: Vec<SparseRow>,
}

impl EvaluationBlock {
    pub fn ncols(&self) -> usize {
        self.tuples.len() * self.dim
    }

    /// Global code of a local column: `(Σ j_i d^{n-1-i}) · d + k`.
    pub fn global_column(&self, local: u32) -> u64 {
        let d = self.dim as u64;
        let t = &self.tuples[local as usize / self.dim];
        let code = t.iter().fold(0u64, |acc, &j| acc * d + j as u64);
        code * d + (local as u64 % d)
    }
}

fn index_orders(n: usize, reduced: bool) -> Vec<Vec<usize>> {
    let rest: Vec<usize> = if reduced {
        (1..n).collect()
    } else {
        (0..n).collect()
    };
    let perms = crate::symmetric::permutations_of(&rest);
    if reduced {
        perms
            .into_iter()
            .map(|p| std::iter::once(0).chain(p).collect())
            .collect()
    } else {
        perms
    }
}

fn factorial_usize(k: usize) -> usize {
    (1..=k).product()
}

/// Builds the evaluation block of a labeling.
pub fn evaluation_block(
    ialg: &IntAlgebra,
    labeling: &[usize],
    reduced: bool,
) -> Result<EvaluationBlock> {
    let n = labeling.len();
    if n == 0 {
        return Err(Error::InvalidAlgebra("degree must be at least 1".into()));
    }
    for &t in labeling {
        if t >= ialg.semigroup_size {
            return Err(Error::InvalidDegree {
                degree: t,
                size: ialg.semigroup_size,
            });
        }
    }
    let d = ialg.dim;
    let choices: Vec<Vec<usize>> = labeling
        .iter()
        .map(|&t| ialg.homogeneous_basis(t))
        .collect();
    let rows = index_orders(n, reduced);
    let mut matrix: Vec<SparseRow> = vec![Vec::new(); rows.len()];
    let mut tuples = Vec::new();
    if choices.iter().any(Vec::is_empty) {
        return Ok(EvaluationBlock {
            labeling: labeling.to_vec(),
            rows,
            tuples,
            dim: d,
            matrix,
        });
    }
    let mut idx = vec![0usize; n];
    let basis_vec = |j: usize| {
        let mut v = vec![0i128; d];
        v[j] = 1;
        v
    };
    loop {
        let tuple: Vec<usize> = idx
            .iter()
            .enumerate()
            .map(|(i, &c)| choices[i][c])
            .collect();
        let col0 = (tuples.len() * d) as u32;
        let values: Vec<Vec<i128>> = tuple.iter().map(|&j| basis_vec(j)).collect();
        let mut row = 0usize;
        let mut used = vec![false; n];
        let firsts: Vec<usize> = if reduced { vec![0] } else { (0..n).collect() };
        for f in firsts {
            used[f] = true;
            dfs(
                ialg,
                &values,
                &mut used,
                values[f].clone(),
                1,
                &mut row,
                col0,
                &mut matrix,
            )?;
            used[f] = false;
        }
        tuples.push(tuple);
        // advance mixed radix, last position fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(EvaluationBlock {
                    labeling: labeling.to_vec(),
                    rows,
                    tuples,
                    dim: d,
                    matrix,
                });
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    ialg: &IntAlgebra,
    values: &[Vec<i128>],
    used: &mut [bool],
    cur: Vec<i128>,
    depth: usize,
    row: &mut usize,
    col0: u32,
    matrix: &mut [SparseRow],
) -> Result<()> {
    let n = values.len();
    if depth == n {
        for (k, &x) in cur.iter().enumerate() {
            if x != 0 {
                matrix[*row].push((col0 + k as u32, x));
            }
        }
        *row += 1;
        return Ok(());
    }
    if cur.iter().all(|&x| x == 0) {
        *row += factorial_usize(n - depth);
        return Ok(());
    }
    for i in 0..n {
        if used[i] {
            continue;
        }
        used[i] = true;
        let next = ialg.bracket(&cur, &values[i])?;
        dfs(ialg, values, used, next, depth + 1, row, col0, matrix)?;
        used[i] = false;
    }
    Ok(())
}

/// Per-labeling contribution to a codimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSummary {
    pub labeling: Vec<usize>,
    /// Number of labelings sharing this block's rank.
    pub multiplicity: u128,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodimResult {
    pub n: usize,
    pub value: u128,
    pub report: RankReport,
    pub blocks: Vec<BlockSummary>,
}

fn all_labelings(n: usize, k: usize) -> Vec<Vec<usize>> {
    let total = k.pow(n as u32);
    (0..total)
        .map(|mut x| {
            let mut l = vec![0; n];
            for i in (0..n).rev() {
                l[i] = x % k;
                x /= k;
            }
            l
        })
        .collect()
}

/// Weakly increasing labelings with the number of labelings in their orbit.
fn orbit_labelings(n: usize, k: usize) -> Vec<(Vec<usize>, u128)> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for t in start..k {
            cur.push(t);
            rec(n, k, t, cur, out);
            cur.pop();
        }
    }
    let mut reps = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut reps);
    let fact = |m: usize| (1..=m as u128).product::<u128>();
    reps.into_iter()
        .map(|l| {
            let mut counts = vec![0usize; k];
            for &t in &l {
                counts[t] += 1;
            }
            let mult = fact(n) / counts.iter().map(|&c| fact(c)).product::<u128>();
            (l, mult)
        })
        .collect()
}

fn block_seed(seed: u64, labeling: &[usize]) -> u64 {
    labeling
        .iter()
        .fold(seed ^ 0x9e37_79b9_7f4a_7c15, |acc, &t| {
            acc.rotate_left(7).wrapping_mul(0x100_0000_01b3) ^ t as u64
        })
}

fn check_valid(alg: &GradedLieAlgebra) -> Result<()> {
    let report = alg.validate();
    if !report.is_valid() {
        let first = report
            .violations
            .first()
            .map(|v| v.to_string())
            .unwrap_or_default();
        return Err(Error::InvalidAlgebra(format!("axiom violated: {first}")));
    }
    Ok(())
}

/// `c_n = Σ_labelings rank(block)`.
pub fn graded_codimension(
    alg: &GradedLieAlgebra,
    n: usize,
    opts: &CodimOptions,
) -> Result<CodimResult> {
    if n == 0 {
        return Err(Error::InvalidAlgebra("degree must be at least 1".into()));
    }
    if n > opts.cap {
        return Err(Error::CapExceeded { n, cap: opts.cap });
    }
    check_valid(alg)?;
    let ialg = IntAlgebra::new(alg)?;
    let k = alg.semigroup().size();
    let labelings: Vec<(Vec<usize>, u128)> = if opts.orbit {
        orbit_labelings(n, k)
    } else {
        all_labelings(n, k).into_iter().map(|l| (l, 1)).collect()
    };
    let results: Vec<Result<(BlockSummary, RankReport)>> = labelings
        .par_iter()
        .map(|(l, mult)| {
            let block = evaluation_block(&ialg, l, opts.reduced)?;
            let report = rank_rows(
                &block.matrix,
                block.ncols(),
                opts.rank_mode,
                block_seed(opts.seed, l),
            );
            Ok((
                BlockSummary {
                    labeling: l.clone(),
                    multiplicity: *mult,
                    rows: block.rows.len(),
                    cols: block.ncols(),
                    rank: report.rank,
                },
                report,
            ))
        })
        .collect();
    let mut blocks = Vec::with_capacity(results.len());
    let mut reports = Vec::with_capacity(results.len());
    let mut value = 0u128;
    for r in results {
        let (b, rep) = r?;
        value += b.multiplicity * b.rank as u128;
        blocks.push(b);
        reports.push(rep);
    }
    Ok(CodimResult {
        n,
        value,
        report: RankReport::combine(&reports),
        blocks,
    })
}

/// A spanning set of `V_n / (V_n ∩ Id)` realized as functions on basis tuples:
/// each vector maps global column codes to values.
#[derive(Debug, Clone)]
pub struct QuotientModule {
    pub n: usize,
    pub dim: usize,
    pub vectors: Vec<Vec<(u64, i128)>>,
    /// Labeling of each vector.
    pub labelings: Vec<Vec<usize>>,
}

impl QuotientModule {
    /// Independent evaluation rows of every labeling's block (exact ranks).
    pub fn build(alg: &GradedLieAlgebra, n: usize, opts: &CodimOptions) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidAlgebra("degree must be at least 1".into()));
        }
        if n > opts.cochar_cap {
            return Err(Error::CapExceeded {
                n,
                cap: opts.cochar_cap,
            });
        }
        check_valid(alg)?;
        let ialg = IntAlgebra::new(alg)?;
        let d = alg.dim();
        if (d as f64).powi(n as i32 + 1) >= u64::MAX as f64 {
            return Err(Error::CapExceeded {
                n,
                cap: opts.cochar_cap,
            });
        }
        let labelings = all_labelings(n, alg.semigroup().size());
        let parts: Vec<Result<Vec<(Vec<usize>, Vec<(u64, i128)>)>>> = labelings
            .par_iter()
            .map(|l| {
                let block = evaluation_block(&ialg, l, opts.reduced)?;
                let (_, basis) = exact_rank_with_basis(&block.matrix);
                Ok(basis
                    .into_iter()
                    .map(|r| {
                        let v = block.matrix[r]
                            .iter()
                            .map(|&(c, x)| (block.global_column(c), x))
                            .collect();
                        (l.clone(), v)
                    })
                    .collect())
            })
            .collect();
        let mut vectors = Vec::new();
        let mut labs = Vec::new();
        for p in parts {
            for (l, v) in p? {
                labs.push(l);
                vectors.push(v);
            }
        }
        Ok(QuotientModule {
            n,
            dim: d,
            vectors,
            labelings: labs,
        })
    }

    pub fn dim_module(&self) -> usize {
        self.vectors.len()
    }

    /// Splits a column code into the basis tuple and the output coordinate.
    pub fn decode(&self, code: u64) -> (Vec<usize>, usize) {
        let d = self.dim as u64;
        let k = (code % d) as usize;
        let mut t = code / d;
        let mut tuple = vec![0; self.n];
        for i in (0..self.n).rev() {
            tuple[i] = (t % d) as usize;
            t /= d;
        }
        (tuple, k)
    }

    pub fn encode(&self, tuple: &[usize], k: usize) -> u64 {
        let d = self.dim as u64;
        tuple.iter().fold(0u64, |acc, &j| acc * d + j as u64) * d + k as u64
    }
}

/// Sorts values within each row of the tableau; returns the canonical tuple and
/// the order of its row-stabilizer.
fn row_canonical(tuple: &[usize], rows: &[Vec<usize>]) -> (Vec<usize>, i128) {
    let mut out = tuple.to_vec();
    let mut stab: i128 = 1;
    for row in rows {
        let mut vals: Vec<usize> = row.iter().map(|&p| tuple[p]).collect();
        vals.sort_unstable();
        let mut run = 1i128;
        for w in 1..vals.len() {
            if vals[w] == vals[w - 1] {
                run += 1;
                stab *= run;
            } else {
                run = 1;
            }
        }
        let mut positions = row.clone();
        positions.sort_unstable();
        for (p, v) in positions.into_iter().zip(vals) {
            out[p] = v;
        }
    }
    (out, stab)
}

/// Tuples with strictly increasing values down every tableau column.
fn column_representatives(n: usize, d: usize, cols: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let total = d.pow(n as u32);
    'outer: for mut x in 0..total {
        let mut t = vec![0; n];
        for i in (0..n).rev() {
            t[i] = x % d;
            x /= d;
        }
        for c in cols {
            let mut sorted = c.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| t[w[0]] >= t[w[1]]) {
                continue 'outer;
            }
        }
        out.push(t);
    }
    out
}

/// Multiplicity report for one tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub multiplicity: usize,
    pub report: RankReport,
    /// Dimension of `a_T · M`.
    pub row_symmetrized_dim: usize,
}

/// `m_λ = dim e*_T M` with `e*_T = b_T a_T`, computed in two stages:
/// `a_T` via row orbits of tuples, then `b_T` on column-strict tuples.
pub fn multiplicity_in(
    module: &QuotientModule,
    t: &YoungTableau,
    opts: &CodimOptions,
) -> Result<MultiplicityReport> {
    if t.n() != module.n {
        return Err(Error::SizeMismatch {
            perm: t.n(),
            poly: module.n,
        });
    }
    let rows = t.rows().to_vec();
    let cols = t.columns();
    let d = module.dim;

    // stage 1: orbit sums under R_T
    let mut canon_index: HashMap<u64, u32> = HashMap::new();
    let mut sym_rows: Vec<SparseRow> = Vec::with_capacity(module.vectors.len());
    for v in &module.vectors {
        let mut acc: HashMap<u32, i128> = HashMap::new();
        for &(code, x) in v {
            let (tuple, k) = module.decode(code);
            let (canon, _) = row_canonical(&tuple, &rows);
            let key = module.encode(&canon, k);
            let next = canon_index.len() as u32;
            let idx = *canon_index.entry(key).or_insert(next);
            let e = acc.entry(idx).or_insert(0);
            *e = e.checked_add(x).ok_or(Error::Overflow)?;
        }
        let mut row: SparseRow = acc.into_iter().filter(|(_, x)| *x != 0).collect();
        row.sort_unstable_by_key(|(c, _)| *c);
        sym_rows.push(row);
    }
    let (a_dim, a_basis) = exact_rank_with_basis(&sym_rows);
    if a_dim == 0 {
        return Ok(MultiplicityReport {
            multiplicity: 0,
            report: RankReport::exact(0),
            row_symmetrized_dim: 0,
        });
    }

    // inverted index: canonical key -> (basis row, value)
    let mut inverted: HashMap<u32, Vec<(usize, i128)>> = HashMap::new();
    for (r, &b) in a_basis.iter().enumerate() {
        for &(c, x) in &sym_rows[b] {
            inverted.entry(c).or_default().push((r, x));
        }
    }

    // stage 2: Σ_τ sgn τ |Stab_R(c∘τ)| w[canon(c∘τ)] at column-strict c
    let col_group = t.column_group();
    let reps = column_representatives(module.n, d, &cols);
    let mut out_rows: Vec<HashMap<u32, i128>> = vec![HashMap::new(); a_dim];
    for (ri, c) in reps.iter().enumerate() {
        for tau in &col_group {
            let moved: Vec<usize> = (0..module.n).map(|i| c[tau.apply(i)]).collect();
            let (canon, stab) = row_canonical(&moved, &rows);
            let coef = stab * tau.sign() as i128;
            for k in 0..d {
                let key = module.encode(&canon, k);
                let Some(idx) = canon_index.get(&key) else {
                    continue;
                };
                let Some(list) = inverted.get(idx) else {
                    continue;
                };
                let col = (ri * d + k) as u32;
                for &(r, x) in list {
                    let e = out_rows[r].entry(col).or_insert(0);
                    let term = coef.checked_mul(x).ok_or(Error::Overflow)?;
                    *e = e.checked_add(term).ok_or(Error::Overflow)?;
                }
            }
        }
    }
    let final_rows: Vec<SparseRow> = out_rows
        .into_iter()
        .map(|m| {
            let mut r: SparseRow = m.into_iter().filter(|(_, x)| *x != 0).collect();
            r.sort_unstable_by_key(|(c, _)| *c);
            r
        })
        .collect();
    let report = rank_rows(&final_rows, reps.len() * d, opts.rank_mode, opts.seed);
    Ok(MultiplicityReport {
        multiplicity: report.rank,
        report,
        row_symmetrized_dim: a_dim,
    })
}

/// `m_λ` for the column-filled tableau of `λ`.
pub fn multiplicity(
    alg: &GradedLieAlgebra,
    lambda: &Partition,
    opts: &CodimOptions,
) -> Result<MultiplicityReport> {
    let module = QuotientModule::build(alg, lambda.n(), opts)?;
    multiplicity_in(&module, &YoungTableau::column_filled(lambda), opts)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocharacterRow {
    pub lambda: Partition,
    pub multiplicity: usize,
    pub specht_dim: BigUint,
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocharacterTable {
    pub n: usize,
    pub rows: Vec<CocharacterRow>,
    /// Dimension of the quotient module, i.e. `c_n`.
    pub module_dim: usize,
}

impl CocharacterTable {
    /// `Σ m_λ · dim S^λ`.
    pub fn weighted_sum(&self) -> BigUint {
        self.rows.iter().fold(BigUint::zero(), |acc, r| {
            acc + &r.specht_dim * BigUint::from(r.multiplicity)
        })
    }

    pub fn get(&self, lambda: &Partition) -> Option<usize> {
        self.rows
            .iter()
            .find(|r| &r.lambda == lambda)
            .map(|r| r.multiplicity)
    }
}

pub fn cocharacter_table(
    alg: &GradedLieAlgebra,
    n: usize,
    opts: &CodimOptions,
) -> Result<CocharacterTable> {
    let module = QuotientModule::build(alg, n, opts)?;
    cocharacter_table_in(&module, opts)
}

pub fn cocharacter_table_in(
    module: &QuotientModule,
    opts: &CodimOptions,
) -> Result<CocharacterTable> {
    let parts = partitions_of(module.n);
    let results: Vec<Result<CocharacterRow>> = parts
        .par_iter()
        .map(|l| {
            let r = multiplicity_in(module, &YoungTableau::column_filled(l), opts)?;
            Ok(CocharacterRow {
                lambda: l.clone(),
                multiplicity: r.multiplicity,
                specht_dim: specht_dim(l),
                certified: r.report.certified,
            })
        })
        .collect();
    let rows = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(CocharacterTable {
        n: module.n,
        rows,
        module_dim: module.dim_module(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaReport {
    pub n: usize,
    /// `(λ, admissible, m_λ)` for every `λ ⊢ n`.
    pub rows: Vec<(Partition, bool, usize)>,
    /// Inadmissible shapes with `m_λ ≠ 0`.
    pub violations: Vec<Partition>,
    /// Admissible shapes that happen to have `m_λ = 0`.
    pub admissible_zero: Vec<Partition>,
}

impl ThetaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `m_λ = 0` for every `λ ⊢ n` outside the θ-region.
pub fn theta_crosscheck(
    alg: &GradedLieAlgebra,
    n: usize,
    opts: &CodimOptions,
) -> Result<ThetaReport> {
    let table = cocharacter_table(alg, n, opts)?;
    Ok(theta_report(&table))
}

pub fn theta_report(table: &CocharacterTable) -> ThetaReport {
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    let mut admissible_zero = Vec::new();
    for r in &table.rows {
        let adm = theta_admissible(&r.lambda);
        if !adm && r.multiplicity != 0 {
            violations.push(r.lambda.clone());
        }
        if adm && r.multiplicity == 0 {
            admissible_zero.push(r.lambda.clone());
        }
        rows.push((r.lambda.clone(), adm, r.multiplicity));
    }
    ThetaReport {
        n: table.n,
        rows,
        violations,
        admissible_zero,
    }
}

/// `c_n` as `u64` when it fits (convenience for reports).
pub fn codim_u64(r: &CodimResult) -> Option<u64> {
    r.value.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::FiniteSemigroup;

    fn exact() -> CodimOptions {
        CodimOptions {
            rank_mode: RankMode::Exact,
            ..Default::default()
        }
    }

    #[test]
    fn small_codimensions_of_example_algebra() {
        let l = GradedLieAlgebra::example_algebra();
        assert_eq!(graded_codimension(&l, 1, &exact()).unwrap().value, 2);
        assert_eq!(graded_codimension(&l, 2, &exact()).unwrap().value, 4);
    }

    #[test]
    fn abelian_codimension_vanishes() {
        let a =
            GradedLieAlgebra::abelian(FiniteSemigroup::z2_multiplicative(), vec![0, 1, 1]).unwrap();
        assert_eq!(graded_codimension(&a, 2, &exact()).unwrap().value, 0);
        assert_eq!(graded_codimension(&a, 1, &exact()).unwrap().value, 2);
    }

    #[test]
    fn cap_is_enforced() {
        let l = GradedLieAlgebra::example_algebra();
        assert!(matches!(
            graded_codimension(&l, 8, &exact()),
            Err(Error::CapExceeded { n: 8, cap: 7 })
        ));
    }

    #[test]
    fn orbit_and_reduction_agree_with_full_enumeration() {
        let l = GradedLieAlgebra::example_algebra();
        for n in 1..=4 {
            let fast = graded_codimension(&l, n, &exact()).unwrap().value;
            let slow = graded_codimension(
                &l,
                n,
                &CodimOptions {
                    orbit: false,
                    reduced: false,
                    ..exact()
                },
            )
            .unwrap()
            .value;
            assert_eq!(fast, slow, "n = {n}");
        }
    }

    #[test]
    fn sl2_ordinary_codimensions() {
        // c_1 = 1, c_2 = 1 and c_3 = 2 for a simple algebra of dimension 3
        let s = GradedLieAlgebra::sl2();
        let c: Vec<u128> = (1..=3)
            .map(|n| graded_codimension(&s, n, &exact()).unwrap().value)
            .collect();
        assert_eq!(c, vec![1, 1, 2]);
    }

    #[test]
    fn first_multiplicities() {
        let l = GradedLieAlgebra::example_algebra();
        let one = Partition::new(vec![1]).unwrap();
        assert_eq!(multiplicity(&l, &one, &exact()).unwrap().multiplicity, 2);
        let t = cocharacter_table(&l, 2, &exact()).unwrap();
        assert_eq!(t.weighted_sum(), BigUint::from(4u32));
        let a = GradedLieAlgebra::abelian(FiniteSemigroup::trivial(), vec![0, 0]).unwrap();
        assert_eq!(
            multiplicity(&a, &Partition::new(vec![2]).unwrap(), &exact())
                .unwrap()
                .multiplicity,
            0
        );
    }

    #[test]
    fn row_canonical_form() {
        let rows = vec![vec![0, 2], vec![1]];
        let (c, stab) = row_canonical(&[3, 1, 3], &rows);
        assert_eq!(c, vec![3, 1, 3]);
        assert_eq!(stab, 2);
        let (c, stab) = row_canonical(&[4, 0, 2], &rows);
        assert_eq!(c, vec![2, 0, 4]);
        assert_eq!(stab, 1);
    }
}
