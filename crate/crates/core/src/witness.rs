//! The alternating witness polynomials `f_1..f_8` and their brackets `f`, `f'`, `f''`
//! for the five-dimensional example, with a fixed reference substitution.

use rayon::prelude::*;

use crate::algebra::{AlgebraElement, GradedLieAlgebra};
use crate::codim::IntAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::poly::{alternating_polynomial, Bracket, LiePolynomial};
use crate::symmetric::{permutations_of, Partition, Permutation, YoungTableau};

/// Slot pattern `(label, position of the variable among i_1..i_k)` of each `f_k`.
pub fn block_pattern(kind: usize) -> &'static [(usize, usize)] {
    match kind {
        1 => &[(0, 1), (0, 3), (1, 2), (0, 0), (1, 4)],
        2 => &[(0, 1), (0, 3), (1, 2), (0, 0)],
        3 => &[(0, 1), (0, 0), (1, 2)],
        4 => &[(0, 0), (1, 2), (1, 1)],
        5 => &[(0, 0), (0, 1)],
        6 => &[(0, 0), (1, 1)],
        7 => &[(0, 0)],
        8 => &[(1, 0)],
        _ => panic!("witness blocks are numbered 1..=8"),
    }
}

/// Basis indices of the example algebra substituted into `i_1..i_k` of `f_k`
/// (`(u,0)=0, (u,u)=1, (v,0)=2, (v,v)=3, (t,0)=4`).
pub fn reference_rows(kind: usize) -> &'static [usize] {
    match kind {
        1 => &[4, 0, 1, 2, 3],
        2 => &[4, 0, 1, 2],
        3 => &[4, 0, 1],
        4 => &[4, 3, 1],
        5 => &[4, 0],
        6 => &[4, 3],
        7 => &[4],
        8 => &[1],
        _ => panic!("witness blocks are numbered 1..=8"),
    }
}

pub fn block_size(kind: usize) -> usize {
    block_pattern(kind).len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessVariant {
    /// `β_7 ≠ 0`
    F,
    /// `β_7 = 0`, `β_5 ≠ 0`
    FPrime,
    /// `β_5 = β_7 = 0`
    FDoublePrime,
}

impl WitnessVariant {
    pub fn name(&self) -> &'static str {
        match self {
            WitnessVariant::F => "f",
            WitnessVariant::FPrime => "f'",
            WitnessVariant::FDoublePrime => "f''",
        }
    }
}

/// `β_2..β_8` together with `λ_5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BetaVector {
    pub lambda5: usize,
    /// `beta[0] = β_2`, …, `beta[6] = β_8`.
    pub beta: [usize; 7],
}

impl BetaVector {
    pub fn new(lambda5: usize, beta: [usize; 7]) -> Result<Self> {
        if lambda5 == 0 {
            return Err(Error::InconsistentBeta("λ_5 must be positive".into()));
        }
        let b = |k: usize| beta[k - 2];
        if b(3) + b(5) + b(7) != lambda5 {
            return Err(Error::InconsistentBeta(format!(
                "β_3 + β_5 + β_7 = {} but λ_5 = {lambda5}",
                b(3) + b(5) + b(7)
            )));
        }
        Ok(BetaVector { lambda5, beta })
    }

    /// `β_k` for `k ∈ 2..=8`.
    pub fn get(&self, k: usize) -> usize {
        self.beta[k - 2]
    }

    /// Number of columns of each block kind, in tableau order `f_1..f_8`.
    pub fn column_counts(&self) -> [usize; 8] {
        let mut c = [0; 8];
        c[0] = self.lambda5;
        c[1..8].copy_from_slice(&self.beta);
        c
    }

    pub fn degree(&self) -> usize {
        self.column_counts()
            .iter()
            .enumerate()
            .map(|(i, &c)| c * block_size(i + 1))
            .sum()
    }

    /// Shape of the tableau: columns of heights 5,4,3,3,2,2,1,1 repeated by count.
    pub fn shape(&self) -> Partition {
        let heights: Vec<usize> = self
            .column_counts()
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat(block_size(i + 1)).take(c))
            .collect();
        Partition::from_unsorted(heights).conjugate()
    }

    pub fn variant(&self) -> WitnessVariant {
        if self.get(7) != 0 {
            WitnessVariant::F
        } else if self.get(5) != 0 {
            WitnessVariant::FPrime
        } else {
            WitnessVariant::FDoublePrime
        }
    }

    /// A β-vector for `λ` with `λ_6 = 0`, `λ_5 > 0` and `λ_4 + λ_5 ≤ λ_1`,
    /// filling `β_7`, then `β_5`, then `β_3` greedily.
    pub fn from_partition(lambda: &Partition) -> Result<Self> {
        let l = |i: usize| lambda.part(i);
        if l(6) != 0 || l(5) == 0 || l(4) + l(5) > l(1) {
            return Err(Error::InconsistentBeta(format!(
                "{lambda} needs λ_6 = 0, λ_5 > 0 and λ_4 + λ_5 ≤ λ_1"
            )));
        }
        let mut rem = l(5);
        let b7 = rem.min(l(1) - l(2));
        rem -= b7;
        let b5 = rem.min(l(2) - l(3));
        rem -= b5;
        let b3 = rem;
        debug_assert!(b3 <= l(3) - l(4));
        let beta = [
            l(4) - l(5),
            b3,
            l(3) - l(4) - b3,
            b5,
            l(2) - l(3) - b5,
            b7,
            l(1) - l(2) - b7,
        ];
        BetaVector::new(l(5), beta)
    }
}

/// One copy of `f_k` on its own variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessBlock {
    pub kind: usize,
    /// Global indices of `i_1..i_k`.
    pub vars: Vec<usize>,
}

/// `f`, `f'` or `f''` kept in factored form: a left-normed bracket of blocks.
#[derive(Debug, Clone)]
pub struct WitnessPolynomial {
    pub beta: BetaVector,
    pub variant: WitnessVariant,
    /// Blocks in bracket order.
    pub blocks: Vec<WitnessBlock>,
    /// Column-filled tableau whose columns are the blocks' variable sets.
    pub tableau: YoungTableau,
}

/// Builds the witness for a β-vector.
pub fn build_f_family(beta: &BetaVector) -> Result<WitnessPolynomial> {
    let beta = BetaVector::new(beta.lambda5, beta.beta)?;
    let counts = beta.column_counts();
    // columns in tableau order, variables numbered column by column
    let mut columns: Vec<Vec<WitnessBlock>> = vec![Vec::new(); 8];
    let mut next = 0;
    for (k, &c) in counts.iter().enumerate() {
        let size = block_size(k + 1);
        for _ in 0..c {
            columns[k].push(WitnessBlock {
                kind: k + 1,
                vars: (next..next + size).collect(),
            });
            next += size;
        }
    }
    let mut pools: Vec<std::vec::IntoIter<WitnessBlock>> =
        columns.into_iter().map(Vec::into_iter).collect();
    let mut take = |kind: usize| {
        pools[kind - 1]
            .next()
            .expect("column counts match the bracket pattern")
    };
    let variant = beta.variant();
    let mut seq = Vec::new();
    let (pair3, pair5, pair7) = match variant {
        WitnessVariant::F => (beta.get(3), beta.get(5), beta.get(7) - 1),
        WitnessVariant::FPrime => (beta.get(3), beta.get(5) - 1, 0),
        WitnessVariant::FDoublePrime => (beta.get(3) - 1, 0, 0),
    };
    for (pairs, other) in [(pair3, 3), (pair5, 5), (pair7, 7)] {
        for _ in 0..pairs {
            seq.push(take(1));
            seq.push(take(other));
        }
    }
    seq.push(take(1));
    for (kind, count) in [
        (2, beta.get(2)),
        (4, beta.get(4)),
        (6, beta.get(6)),
        (8, beta.get(8)),
    ] {
        for _ in 0..count {
            seq.push(take(kind));
        }
    }
    seq.push(take(match variant {
        WitnessVariant::F => 7,
        WitnessVariant::FPrime => 5,
        WitnessVariant::FDoublePrime => 3,
    }));
    let tableau = YoungTableau::column_filled(&beta.shape());
    Ok(WitnessPolynomial {
        beta,
        variant,
        blocks: seq,
        tableau,
    })
}

/// Reference values: each block's `i_k` gets the `k`-th row entry of its column.
pub fn reference_substitution(beta: &BetaVector) -> Result<Vec<AlgebraElement>> {
    let w = build_f_family(beta)?;
    let mut out = vec![AlgebraElement::zero(5); w.degree()];
    for b in &w.blocks {
        for (r, &v) in b.vars.iter().enumerate() {
            out[v] = AlgebraElement::basis(5, reference_rows(b.kind)[r]);
        }
    }
    Ok(out)
}

impl WitnessPolynomial {
    pub fn degree(&self) -> usize {
        self.beta.degree()
    }

    /// Number of monomials after expanding all alternating sums.
    pub fn expanded_len(&self) -> u128 {
        self.blocks
            .iter()
            .map(|b| (1..=b.vars.len() as u128).product::<u128>())
            .product()
    }

    /// Expands to an explicit polynomial (bracket trees, not left-normed),
    /// refusing above `cap` monomials.
    pub fn to_lie_polynomial(&self, cap: u128) -> Result<LiePolynomial> {
        let len = self.expanded_len();
        if len > cap {
            return Err(Error::SymmetrizerTooLarge { terms: len, cap });
        }
        let n = self.degree();
        let mut acc: Vec<(Q, Bracket)> = Vec::new();
        for (bi, b) in self.blocks.iter().enumerate() {
            let poly = block_polynomial(n, b)?;
            if bi == 0 {
                acc = poly.terms().to_vec();
            } else {
                let mut next = Vec::with_capacity(acc.len() * poly.len());
                for (c1, m1) in &acc {
                    for (c2, m2) in poly.terms() {
                        next.push((c1 * c2, Bracket::node(m1.clone(), m2.clone())));
                    }
                }
                acc = next;
            }
        }
        LiePolynomial::new(n, acc)
    }

    /// Exact value at an assignment `index → element` of the example algebra.
    pub fn evaluate(
        &self,
        alg: &GradedLieAlgebra,
        assignment: &[AlgebraElement],
    ) -> Result<AlgebraElement> {
        let ev = WitnessEvaluator::new(alg)?;
        ev.evaluate(self, assignment)
    }
}

/// Terms of one block's alternating sum. The block alone is not multilinear
/// in all `n` variables, so the terms are kept unchecked.
fn block_polynomial(n: usize, b: &WitnessBlock) -> Result<LiePolynomial> {
    let local = alternating_polynomial(
        b.vars.len(),
        block_pattern(b.kind),
        &(0..b.vars.len()).collect::<Vec<_>>(),
    )?;
    let terms = local
        .terms()
        .iter()
        .map(|(c, m)| (c.clone(), m.map_indices(&|i| b.vars[i])))
        .collect();
    Ok(LiePolynomial::new_unchecked(n, terms))
}

/// Fast exact evaluator for witness polynomials over an algebra with integral
/// structure constants.
pub struct WitnessEvaluator<'a> {
    alg: &'a GradedLieAlgebra,
    ialg: IntAlgebra,
    perms: Vec<Vec<(i128, Vec<usize>)>>,
}

impl<'a> WitnessEvaluator<'a> {
    pub fn new(alg: &'a GradedLieAlgebra) -> Result<Self> {
        if alg.int_structure()?.denom != 1 {
            return Err(Error::InvalidAlgebra(
                "witness evaluation needs integral structure constants".into(),
            ));
        }
        let perms = (1..=5)
            .map(|m| {
                permutations_of(&(0..m).collect::<Vec<usize>>())
                    .into_iter()
                    .map(|p| {
                        (
                            Permutation::from_images(p.clone())
                                .expect("permutation")
                                .sign() as i128,
                            p,
                        )
                    })
                    .collect()
            })
            .collect();
        Ok(WitnessEvaluator {
            alg,
            ialg: IntAlgebra::new(alg)?,
            perms,
        })
    }

    fn projected(&self, values: &[Vec<i128>], index: usize, label: usize) -> Vec<i128> {
        values[index]
            .iter()
            .enumerate()
            .map(|(i, &x)| if self.alg.degree(i) == label { x } else { 0 })
            .collect()
    }

    fn block_value(&self, b: &WitnessBlock, values: &[Vec<i128>]) -> Result<Vec<i128>> {
        let pattern = block_pattern(b.kind);
        let d = self.ialg.dim();
        let mut acc = vec![0i128; d];
        for (sign, p) in &self.perms[b.vars.len() - 1] {
            let mut cur: Option<Vec<i128>> = None;
            for &(label, r) in pattern {
                let v = self.projected(values, b.vars[p[r]], label);
                cur = Some(match cur {
                    None => v,
                    Some(c) => self.ialg.bracket(&c, &v)?,
                });
                if cur.as_ref().is_some_and(|c| c.iter().all(|&x| x == 0)) {
                    break;
                }
            }
            for (a, x) in acc.iter_mut().zip(cur.expect("blocks are nonempty")) {
                *a = a.checked_add(sign * x).ok_or(Error::Overflow)?;
            }
        }
        Ok(acc)
    }

    fn evaluate_int(&self, w: &WitnessPolynomial, values: &[Vec<i128>]) -> Result<Vec<i128>> {
        let mut cur: Option<Vec<i128>> = None;
        for b in &w.blocks {
            let v = self.block_value(b, values)?;
            cur = Some(match cur {
                None => v,
                Some(c) => self.ialg.bracket(&c, &v)?,
            });
            if cur.as_ref().is_some_and(|c| c.iter().all(|&x| x == 0)) {
                break;
            }
        }
        Ok(cur.expect("witnesses have at least one block"))
    }

    fn to_int(&self, assignment: &[AlgebraElement], n: usize) -> Result<Vec<Vec<i128>>> {
        if assignment.len() < n {
            return Err(Error::MissingIndex(assignment.len() + 1));
        }
        assignment
            .iter()
            .map(|x| {
                if x.dim() != self.alg.dim() {
                    return Err(Error::DimensionMismatch {
                        expected: self.alg.dim(),
                        got: x.dim(),
                    });
                }
                x.coords
                    .iter()
                    .map(|c| {
                        if !c.is_integer() {
                            return Err(Error::InvalidAlgebra(
                                "fast evaluation needs integral inputs".into(),
                            ));
                        }
                        num_traits::ToPrimitive::to_i128(&c.to_integer()).ok_or(Error::Overflow)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn evaluate(
        &self,
        w: &WitnessPolynomial,
        assignment: &[AlgebraElement],
    ) -> Result<AlgebraElement> {
        let values = self.to_int(assignment, w.degree())?;
        let v = self.evaluate_int(w, &values)?;
        Ok(AlgebraElement::from_coords(
            v.into_iter().map(|x| Q::from_integer(x.into())).collect(),
        ))
    }

    /// `f_k` alone at the given values of its variables.
    pub fn evaluate_block(
        &self,
        b: &WitnessBlock,
        assignment: &[AlgebraElement],
    ) -> Result<AlgebraElement> {
        let n = b.vars.iter().max().map_or(0, |m| m + 1);
        let values = self.to_int(assignment, n)?;
        let v = self.block_value(b, &values)?;
        Ok(AlgebraElement::from_coords(
            v.into_iter().map(|x| Q::from_integer(x.into())).collect(),
        ))
    }

    /// `Σ_{τ ∈ C_T, σ ∈ R_T} sgn(τ) f(s ∘ π)` where `π = τ∘σ` for
    /// [`SymmetrizerOrder::ColumnAfterRow`] (the `e*_T` convention) and
    /// `π = σ∘τ` for [`SymmetrizerOrder::RowAfterColumn`].
    pub fn symmetrized(
        &self,
        w: &WitnessPolynomial,
        tableau: &YoungTableau,
        assignment: &[AlgebraElement],
        order: SymmetrizerOrder,
    ) -> Result<AlgebraElement> {
        let n = w.degree();
        if tableau.n() != n {
            return Err(Error::SizeMismatch {
                perm: tableau.n(),
                poly: n,
            });
        }
        let values = self.to_int(assignment, n)?;
        let rows = tableau.row_group();
        let cols = tableau.column_group();
        let partials: Vec<Result<Vec<i128>>> = cols
            .par_iter()
            .map(|tau| {
                let sign = tau.sign() as i128;
                let mut acc = vec![0i128; self.ialg.dim()];
                for sigma in &rows {
                    let pi = match order {
                        SymmetrizerOrder::ColumnAfterRow => tau.compose(sigma),
                        SymmetrizerOrder::RowAfterColumn => sigma.compose(tau),
                    };
                    let moved: Vec<Vec<i128>> =
                        (0..n).map(|i| values[pi.apply(i)].clone()).collect();
                    let v = self.evaluate_int(w, &moved)?;
                    for (a, x) in acc.iter_mut().zip(v) {
                        *a = a.checked_add(sign * x).ok_or(Error::Overflow)?;
                    }
                }
                Ok(acc)
            })
            .collect();
        let mut total = vec![0i128; self.ialg.dim()];
        for p in partials {
            for (a, x) in total.iter_mut().zip(p?) {
                *a = a.checked_add(x).ok_or(Error::Overflow)?;
            }
        }
        Ok(AlgebraElement::from_coords(
            total
                .into_iter()
                .map(|x| Q::from_integer(x.into()))
                .collect(),
        ))
    }

    /// `a_T f` at `s`: `Σ_{σ ∈ R_T} f(s ∘ σ)`.
    pub fn row_symmetrized(
        &self,
        w: &WitnessPolynomial,
        tableau: &YoungTableau,
        assignment: &[AlgebraElement],
    ) -> Result<AlgebraElement> {
        let n = w.degree();
        let values = self.to_int(assignment, n)?;
        let mut total = vec![0i128; self.ialg.dim()];
        for sigma in tableau.row_group() {
            let moved: Vec<Vec<i128>> = (0..n).map(|i| values[sigma.apply(i)].clone()).collect();
            for (a, x) in total.iter_mut().zip(self.evaluate_int(w, &moved)?) {
                *a = a.checked_add(x).ok_or(Error::Overflow)?;
            }
        }
        Ok(AlgebraElement::from_coords(
            total
                .into_iter()
                .map(|x| Q::from_integer(x.into()))
                .collect(),
        ))
    }
}

/// Which product of the row and column parts a symmetrized evaluation uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetrizerOrder {
    /// `b_T a_T`: `Σ sgn(τ) τ∘σ`.
    ColumnAfterRow,
    /// `a_T b_T`: `Σ sgn(τ) σ∘τ`.
    RowAfterColumn,
}

/// `(5!)^{λ_5} (4!)^{β_2} (3!)^{β_3+β_4} (2!)^{β_5+β_6}`, the column-group order.
pub fn column_constant(beta: &BetaVector) -> u128 {
    let pow = |b: u128, e: usize| b.pow(e as u32);
    pow(120, beta.lambda5)
        * pow(24, beta.get(2))
        * pow(6, beta.get(3) + beta.get(4))
        * pow(2, beta.get(5) + beta.get(6))
}

/// Value of a single `f_k` under the reference rows, as `(coefficient, basis index)`.
pub fn reference_block_value(kind: usize) -> Result<(Q, usize)> {
    reference_block_value_in(&GradedLieAlgebra::example_algebra(), kind)
}

/// As [`reference_block_value`], in any five-dimensional algebra.
pub fn reference_block_value_in(alg: &GradedLieAlgebra, kind: usize) -> Result<(Q, usize)> {
    if alg.dim() != 5 {
        return Err(Error::DimensionMismatch {
            expected: 5,
            got: alg.dim(),
        });
    }
    let ev = WitnessEvaluator::new(alg)?;
    let size = block_size(kind);
    let b = WitnessBlock {
        kind,
        vars: (0..size).collect(),
    };
    let vals: Vec<AlgebraElement> = reference_rows(kind)
        .iter()
        .map(|&j| AlgebraElement::basis(5, j))
        .collect();
    let v = ev.evaluate_block(&b, &vals)?;
    v.as_multiple_of_basis().ok_or_else(|| {
        Error::InvalidAlgebra(format!(
            "f_{kind} is not a multiple of one basis vector: {v:?}"
        ))
    })
}
