//! Multilinear Lie polynomials in degree-labeled variables.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{AlgebraElement, GradedLieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{fmt_q, q, Q};
use crate::symmetric::{permutations_of, Permutation};

/// `x_index^{h_label}`. Indices are 0-based; `x1` in printed form is index 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LabeledVar {
    pub index: usize,
    pub label: usize,
}

impl LabeledVar {
    pub fn new(index: usize, label: usize) -> Self {
        LabeledVar { index, label }
    }
}

impl fmt::Display for LabeledVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}^{}", self.index + 1, self.label)
    }
}

/// A bracket tree with labeled leaves.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Bracket {
    Leaf(LabeledVar),
    Node(Box<Bracket>, Box<Bracket>),
}

impl Bracket {
    pub fn leaf(index: usize, label: usize) -> Self {
        Bracket::Leaf(LabeledVar::new(index, label))
    }

    pub fn node(a: Bracket, b: Bracket) -> Self {
        Bracket::Node(Box::new(a), Box::new(b))
    }

    /// `[v_1, …, v_m] = [[…[v_1, v_2], …], v_m]`. Panics on an empty slice.
    pub fn left_normed(vars: &[LabeledVar]) -> Self {
        let mut it = vars.iter();
        let first = it.next().expect("left-normed monomial needs a variable");
        it.fold(Bracket::Leaf(*first), |acc, v| {
            Bracket::node(acc, Bracket::Leaf(*v))
        })
    }

    pub fn leaves(&self) -> Vec<LabeledVar> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<LabeledVar>) {
        match self {
            Bracket::Leaf(v) => out.push(*v),
            Bracket::Node(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Bracket::Leaf(_) => 1,
            Bracket::Node(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn is_left_normed(&self) -> bool {
        match self {
            Bracket::Leaf(_) => true,
            Bracket::Node(a, b) => matches!(**b, Bracket::Leaf(_)) && a.is_left_normed(),
        }
    }

    /// Replaces each leaf index `i` by `f(i)`; labels stay in place.
    pub fn map_indices(&self, f: &impl Fn(usize) -> usize) -> Bracket {
        match self {
            Bracket::Leaf(v) => Bracket::leaf(f(v.index), v.label),
            Bracket::Node(a, b) => Bracket::node(a.map_indices(f), b.map_indices(f)),
        }
    }

    fn evaluate_with(
        &self,
        alg: &GradedLieAlgebra,
        values: &[AlgebraElement],
    ) -> Result<AlgebraElement> {
        match self {
            Bracket::Leaf(v) => {
                let x = values
                    .get(v.index)
                    .ok_or(Error::MissingIndex(v.index + 1))?;
                alg.homogeneous_projection(x, v.label)
            }
            Bracket::Node(a, b) => {
                let x = a.evaluate_with(alg, values)?;
                if x.is_zero() {
                    // still validate the right subtree's indices
                    b.check_indices(values.len())?;
                    return Ok(x);
                }
                let y = b.evaluate_with(alg, values)?;
                alg.bracket(&x, &y)
            }
        }
    }

    fn check_indices(&self, len: usize) -> Result<()> {
        for v in self.leaves() {
            if v.index >= len {
                return Err(Error::MissingIndex(v.index + 1));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_left_normed() {
            if let Bracket::Leaf(v) = self {
                return write!(f, "{v}");
            }
            let s: Vec<String> = self.leaves().iter().map(|v| v.to_string()).collect();
            return write!(f, "[{}]", s.join(","));
        }
        match self {
            Bracket::Leaf(v) => write!(f, "{v}"),
            Bracket::Node(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// A formal linear combination of multilinear monomials on `x_1..x_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LiePolynomial {
    n: usize,
    terms: Vec<(Q, Bracket)>,
}

fn check_multilinear(n: usize, b: &Bracket) -> Result<()> {
    let mut seen = vec![false; n];
    let leaves = b.leaves();
    if leaves.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: leaves.len(),
        });
    }
    for v in leaves {
        if v.index >= n || seen[v.index] {
            return Err(Error::MissingIndex(v.index + 1));
        }
        seen[v.index] = true;
    }
    Ok(())
}

impl LiePolynomial {
    /// Checks that every monomial uses each of `0..n` exactly once.
    pub fn new(n: usize, terms: Vec<(Q, Bracket)>) -> Result<Self> {
        for (_, b) in &terms {
            check_multilinear(n, b)?;
        }
        Ok(LiePolynomial { n, terms })
    }

    pub(crate) fn new_unchecked(n: usize, terms: Vec<(Q, Bracket)>) -> Self {
        LiePolynomial { n, terms }
    }

    pub fn monomial(b: Bracket) -> Self {
        LiePolynomial {
            n: b.degree(),
            terms: vec![(Q::one(), b)],
        }
    }

    pub fn zero(n: usize) -> Self {
        LiePolynomial {
            n,
            terms: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(Q, Bracket)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Merges coefficients of identical monomials and drops zeros; output sorted.
    pub fn merged(&self) -> LiePolynomial {
        let mut acc: HashMap<&Bracket, Q> = HashMap::new();
        for (c, b) in &self.terms {
            *acc.entry(b).or_insert_with(Q::zero) += c;
        }
        let mut terms: Vec<(Q, Bracket)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(b, c)| (c, b.clone()))
            .collect();
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        LiePolynomial { n: self.n, terms }
    }

    pub fn scale(&self, s: &Q) -> LiePolynomial {
        LiePolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(c, b)| (c * s, b.clone())).collect(),
        }
    }

    pub fn add(&self, other: &LiePolynomial) -> Result<LiePolynomial> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(LiePolynomial { n: self.n, terms })
    }

    /// Rewrites every monomial as a combination of left-normed ones using
    /// `[w, [v, c]] = [[w, v], c] - [[w, c], v]`.
    pub fn to_left_normed(&self) -> LiePolynomial {
        let mut terms = Vec::new();
        for (c, b) in &self.terms {
            for (s, seq) in left_normed_expansion(b) {
                terms.push((c * q(s), Bracket::left_normed(&seq)));
            }
        }
        LiePolynomial { n: self.n, terms }.merged()
    }

    /// `(coefficient, indices, labels)` rows of the left-normed form.
    pub fn left_normed_rows(&self) -> Vec<(Q, Vec<usize>, Vec<usize>)> {
        self.to_left_normed()
            .terms
            .into_iter()
            .map(|(c, b)| {
                let leaves = b.leaves();
                (
                    c,
                    leaves.iter().map(|v| v.index).collect(),
                    leaves.iter().map(|v| v.label).collect(),
                )
            })
            .collect()
    }
}

impl fmt::Display for LiePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, b)| format!("{}*{}", fmt_q(c), b))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Left-normed words (with signs) whose sum equals the given bracket tree.
pub fn left_normed_expansion(b: &Bracket) -> Vec<(i64, Vec<LabeledVar>)> {
    match b {
        Bracket::Leaf(v) => vec![(1, vec![*v])],
        Bracket::Node(a, c) => {
            let left = left_normed_expansion(a);
            let right = left_normed_expansion(c);
            let mut out = Vec::new();
            for (sa, wa) in &left {
                for (sc, wc) in &right {
                    for (s, w) in bracket_words(wa, wc) {
                        out.push((sa * sc * s, w));
                    }
                }
            }
            out
        }
    }
}

/// `[w, [v_1, …, v_m]]` as left-normed words.
fn bracket_words(w: &[LabeledVar], v: &[LabeledVar]) -> Vec<(i64, Vec<LabeledVar>)> {
    if v.len() == 1 {
        let mut x = w.to_vec();
        x.push(v[0]);
        return vec![(1, x)];
    }
    let (c, head) = v.split_last().expect("nonempty");
    let mut out: Vec<(i64, Vec<LabeledVar>)> = bracket_words(w, head)
        .into_iter()
        .map(|(s, mut x)| {
            x.push(*c);
            (s, x)
        })
        .collect();
    let mut wc = w.to_vec();
    wc.push(*c);
    out.extend(bracket_words(&wc, head).into_iter().map(|(s, x)| (-s, x)));
    out
}

/// Left-normed monomials `[x_{σ(1)}, …, x_{σ(n)}]`, each index `i` carrying
/// `labeling[i]`. With `reduced`, only those with `σ(1) = 1`.
pub fn spanning_monomials(n: usize, labeling: &[usize], reduced: bool) -> Result<Vec<Bracket>> {
    if labeling.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: labeling.len(),
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let orders: Vec<Vec<usize>> = if reduced {
        let rest: Vec<usize> = (1..n).collect();
        permutations_of(&rest)
            .into_iter()
            .map(|p| std::iter::once(0).chain(p).collect())
            .collect()
    } else {
        permutations_of(&(0..n).collect::<Vec<_>>())
    };
    Ok(orders
        .into_iter()
        .map(|o| {
            Bracket::left_normed(
                &o.iter()
                    .map(|&i| LabeledVar::new(i, labeling[i]))
                    .collect::<Vec<_>>(),
            )
        })
        .collect())
}

/// Leaf index `i` becomes `σ(i)`; labels stay with their slot.
pub fn apply_permutation(p: &LiePolynomial, sigma: &Permutation) -> Result<LiePolynomial> {
    if sigma.n() != p.n {
        return Err(Error::SizeMismatch {
            perm: sigma.n(),
            poly: p.n,
        });
    }
    let f = |i: usize| sigma.apply(i);
    Ok(LiePolynomial {
        n: p.n,
        terms: p
            .terms
            .iter()
            .map(|(c, b)| (c.clone(), b.map_indices(&f)))
            .collect(),
    })
}

/// Each leaf `(i, h_t)` evaluates to `π_t(assignment[i])`.
pub fn evaluate(
    alg: &GradedLieAlgebra,
    p: &LiePolynomial,
    assignment: &[AlgebraElement],
) -> Result<AlgebraElement> {
    for x in assignment {
        if x.dim() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                got: x.dim(),
            });
        }
    }
    let mut acc = AlgebraElement::zero(alg.dim());
    for (c, b) in &p.terms {
        let v = b.evaluate_with(alg, assignment)?;
        acc = &acc + &v.scale(c);
    }
    Ok(acc)
}

/// `Σ_{π ∈ Sym(vars)} sgn(π) [x^{l_1}_{π(v_1)}, …]`, where `pattern[m] = (l_m, r_m)`
/// names the label of slot `m` and the position `r_m` in `vars` of its variable.
pub fn alternating_polynomial(
    n: usize,
    pattern: &[(usize, usize)],
    vars: &[usize],
) -> Result<LiePolynomial> {
    let positions: Vec<usize> = (0..vars.len()).collect();
    let mut terms = Vec::new();
    for perm in permutations_of(&positions) {
        let sign = Permutation::from_images(perm.clone())?.sign();
        let slots: Vec<LabeledVar> = pattern
            .iter()
            .map(|&(label, r)| LabeledVar::new(vars[perm[r]], label))
            .collect();
        terms.push((q(sign), Bracket::left_normed(&slots)));
    }
    LiePolynomial::new(n, terms)
}
