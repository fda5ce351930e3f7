//! Finite-dimensional Lie algebras graded by a finite semigroup, stored as
//! structure constants in a fixed homogeneous basis.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{common_denominator, fmt_q, kernel, q, QMatrix, Subspace, Q};
use crate::semigroup::FiniteSemigroup;

/// Coordinates of an element in the algebra's fixed basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    pub coords: Vec<Q>,
}

impl AlgebraElement {
    pub fn zero(dim: usize) -> Self {
        AlgebraElement {
            coords: vec![Q::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coords[i] = Q::one();
        e
    }

    pub fn from_coords(coords: Vec<Q>) -> Self {
        AlgebraElement { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        AlgebraElement {
            coords: coords.iter().map(|&x| q(x)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Q) -> Self {
        AlgebraElement {
            coords: self.coords.iter().map(|x| x * s).collect(),
        }
    }

    /// Indices of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// If the element is `c · b_k` for a single basis vector, returns `(c, k)`.
    pub fn as_multiple_of_basis(&self) -> Option<(Q, usize)> {
        match self.support().as_slice() {
            [k] => Some((self.coords[*k].clone(), *k)),
            _ => None,
        }
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(fmt_q).collect();
        write!(f, "[{}]", c.join(", "))
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

/// A sparse linear combination `Σ c · b_k`, sorted by basis index.
pub type Combination = Vec<(usize, Q)>;

/// One failed axiom, with the offending basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Antisymmetry { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
    Grading { i: usize, j: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Antisymmetry { i, j } => write!(f, "antisymmetry\t{i}\t{j}"),
            Violation::Jacobi { i, j, k } => write!(f, "jacobi\t{i}\t{j}\t{k}"),
            Violation::Grading { i, j } => write!(f, "grading\t{i}\t{j}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Structure constants scaled to integers: `[b_i, b_j] = (1/denom) Σ c · b_k`.
#[derive(Debug, Clone)]
pub struct IntStructure {
    pub denom: i128,
    pub table: Vec<Vec<Vec<(usize, i128)>>>,
}

/// A Lie algebra over Q with a homogeneous basis graded by a finite semigroup.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedLieAlgebra {
    semigroup: FiniteSemigroup,
    names: Vec<String>,
    degree: Vec<usize>,
    structure: Vec<Vec<Combination>>,
}

fn normalize_combination(mut c: Vec<(usize, Q)>) -> Combination {
    c.sort_by_key(|(k, _)| *k);
    let mut out: Combination = Vec::with_capacity(c.len());
    for (k, x) in c {
        match out.last_mut() {
            Some((last, acc)) if *last == k => *acc += x,
            _ => out.push((k, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

impl GradedLieAlgebra {
    /// Builds an algebra from the brackets `[b_a, b_b]` with `a < b` or `a > b`;
    /// the opposite order is filled in by antisymmetry. Unlisted pairs are zero.
    /// Listing an unordered pair twice is an error.
    pub fn new(
        semigroup: FiniteSemigroup,
        names: Vec<String>,
        degree: Vec<usize>,
        brackets: &[(usize, usize, Combination)],
    ) -> Result<Self> {
        let dim = names.len();
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        if degree.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: degree.len(),
            });
        }
        for &d in &degree {
            semigroup.check(d)?;
        }
        let mut structure = vec![vec![Combination::new(); dim]; dim];
        let mut seen = vec![vec![false; dim]; dim];
        for (a, b, combo) in brackets {
            let (a, b) = (*a, *b);
            if a >= dim || b >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket index out of range: ({a}, {b})"
                )));
            }
            if let Some((k, _)) = combo.iter().find(|(k, _)| *k >= dim) {
                return Err(Error::InvalidAlgebra(format!(
                    "basis index {k} out of range"
                )));
            }
            if seen[a][b] {
                return Err(Error::InvalidAlgebra(format!(
                    "duplicate bracket ({}, {})",
                    names[a], names[b]
                )));
            }
            seen[a][b] = true;
            seen[b][a] = true;
            let c = normalize_combination(combo.clone());
            if a != b {
                structure[b][a] = c.iter().map(|(k, x)| (*k, -x.clone())).collect();
            }
            structure[a][b] = c;
        }
        Ok(GradedLieAlgebra {
            semigroup,
            names,
            degree,
            structure,
        })
    }

    /// Builds an algebra from a full table without antisymmetric completion.
    /// Used to represent (and validate) arbitrary bilinear products.
    pub fn from_table(
        semigroup: FiniteSemigroup,
        names: Vec<String>,
        degree: Vec<usize>,
        table: Vec<Vec<Combination>>,
    ) -> Result<Self> {
        let dim = names.len();
        if degree.len() != dim || table.len() != dim || table.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidAlgebra(
                "table shape does not match basis".into(),
            ));
        }
        for &d in &degree {
            semigroup.check(d)?;
        }
        let structure = table
            .into_iter()
            .map(|r| r.into_iter().map(normalize_combination).collect())
            .collect();
        Ok(GradedLieAlgebra {
            semigroup,
            names,
            degree,
            structure,
        })
    }

    /// Returns a copy with `[b_i, b_j] = combo` and `[b_j, b_i] = -combo`.
    pub fn with_bracket(&self, i: usize, j: usize, combo: Combination) -> Self {
        let mut out = self.clone();
        let c = normalize_combination(combo);
        out.structure[j][i] = c.iter().map(|(k, x)| (*k, -x.clone())).collect();
        out.structure[i][j] = c;
        out
    }

    /// Same brackets, new grading.
    pub fn regraded(&self, semigroup: FiniteSemigroup, degree: Vec<usize>) -> Result<Self> {
        Self::from_table(
            semigroup,
            self.names.clone(),
            degree,
            self.structure.clone(),
        )
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degree[i]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    /// Basis indices of degree `t`.
    pub fn homogeneous_basis(&self, t: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degree[i] == t).collect()
    }

    pub fn structure(&self, i: usize, j: usize) -> &Combination {
        &self.structure[i][j]
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(self.dim(), i)
    }

    fn check_dim(&self, x: &AlgebraElement) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.dim(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the structure table.
    pub fn bracket(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(self.bracket_unchecked(a, b))
    }

    pub(crate) fn bracket_unchecked(
        &self,
        a: &AlgebraElement,
        b: &AlgebraElement,
    ) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.dim());
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.structure[i][j] {
                    out.coords[*k] += &xy * c;
                }
            }
        }
        out
    }

    /// Zeroes the coordinates whose basis degree differs from `t`.
    pub fn homogeneous_projection(&self, x: &AlgebraElement, t: usize) -> Result<AlgebraElement> {
        self.check_dim(x)?;
        self.semigroup.check(t)?;
        let coords = x
            .coords
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if self.degree[i] == t {
                    c.clone()
                } else {
                    Q::zero()
                }
            })
            .collect();
        Ok(AlgebraElement { coords })
    }

    pub fn projection_matrix(&self, t: usize) -> QMatrix {
        let mut m = QMatrix::zeros(self.dim(), self.dim());
        for i in self.homogeneous_basis(t) {
            m.set(i, i, Q::one());
        }
        m
    }

    /// `ad(x)`, acting on column vectors.
    pub fn ad(&self, x: &AlgebraElement) -> Result<QMatrix> {
        self.check_dim(x)?;
        let cols: Vec<Vec<Q>> = (0..self.dim())
            .map(|j| self.bracket_unchecked(x, &self.basis_element(j)).coords)
            .collect();
        Ok(QMatrix::from_columns(self.dim(), &cols))
    }

    pub fn ad_basis(&self, i: usize) -> QMatrix {
        self.ad(&self.basis_element(i))
            .expect("basis element has the right dimension")
    }

    /// `κ(b_i, b_j) = tr(ad b_i · ad b_j)`.
    pub fn killing_form(&self) -> QMatrix {
        let ads: Vec<QMatrix> = (0..self.dim()).map(|i| self.ad_basis(i)).collect();
        let mut k = QMatrix::zeros(self.dim(), self.dim());
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                k.set(i, j, (&ads[i] * &ads[j]).trace());
            }
        }
        k
    }

    /// Lists every violated axiom: antisymmetry on all pairs, Jacobi on all
    /// triples `i < j < k`, and grading compatibility on all pairs.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i..n {
                let ok = if i == j {
                    self.structure[i][i].is_empty()
                } else {
                    let neg: Combination = self.structure[j][i]
                        .iter()
                        .map(|(k, x)| (*k, -x.clone()))
                        .collect();
                    self.structure[i][j] == neg
                };
                if !ok {
                    violations.push(Violation::Antisymmetry { i, j });
                }
            }
        }
        let basis: Vec<AlgebraElement> = (0..n).map(|i| self.basis_element(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (a, b, c) = (&basis[i], &basis[j], &basis[k]);
                    let t1 = self.bracket_unchecked(a, &self.bracket_unchecked(b, c));
                    let t2 = self.bracket_unchecked(b, &self.bracket_unchecked(c, a));
                    let t3 = self.bracket_unchecked(c, &self.bracket_unchecked(a, b));
                    if !(&(&t1 + &t2) + &t3).is_zero() {
                        violations.push(Violation::Jacobi { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let target = self.semigroup.mul(self.degree[i], self.degree[j]);
                if self.structure[i][j]
                    .iter()
                    .any(|(k, _)| self.degree[*k] != target)
                {
                    violations.push(Violation::Grading { i, j });
                }
            }
        }
        ValidationReport { violations }
    }

    /// Structure constants scaled by the common denominator, as `i128`.
    pub fn int_structure(&self) -> Result<IntStructure> {
        let all = self.structure.iter().flatten().flatten().map(|(_, x)| x);
        let d = common_denominator(all);
        let dq = Q::from_integer(d.clone());
        let denom = d.to_i128().ok_or(Error::Overflow)?;
        let mut table = Vec::with_capacity(self.dim());
        for row in &self.structure {
            let mut r = Vec::with_capacity(self.dim());
            for combo in row {
                let mut c = Vec::with_capacity(combo.len());
                for (k, x) in combo {
                    let v = (x * &dq).to_integer().to_i128().ok_or(Error::Overflow)?;
                    c.push((*k, v));
                }
                r.push(c);
            }
            table.push(r);
        }
        Ok(IntStructure { denom, table })
    }

    /// `span{[b_i, b_j]}`.
    pub fn derived_algebra(&self) -> Subspace {
        let mut vs = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let v = self.bracket_unchecked(&self.basis_element(i), &self.basis_element(j));
                if !v.is_zero() {
                    vs.push(v.coords);
                }
            }
        }
        Subspace::span(self.dim(), &vs).expect("bracket vectors have the algebra's dimension")
    }

    /// `span{[x, y] : x, y ∈ W}`.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                let v = self.bracket_unchecked(
                    &AlgebraElement::from_coords(x.clone()),
                    &AlgebraElement::from_coords(y.clone()),
                );
                if !v.is_zero() {
                    vs.push(v.coords);
                }
            }
        }
        Subspace::span(self.dim(), &vs).expect("bracket vectors have the algebra's dimension")
    }

    /// Solvable radical via the Killing-form criterion: `Rad = [L, L]^⊥`.
    pub fn solvable_radical(&self) -> Subspace {
        let k = self.killing_form();
        let derived = self.derived_algebra();
        if derived.is_zero() {
            return Subspace::full(self.dim());
        }
        let rows: Vec<Vec<Q>> = derived
            .basis()
            .iter()
            .map(|d| k.apply(d).expect("killing form is dim x dim"))
            .collect();
        let m = QMatrix::from_rows(rows).expect("rows share the algebra's dimension");
        let ker = kernel(&m);
        Subspace::span(self.dim(), &ker).expect("kernel vectors have the algebra's dimension")
    }

    /// True iff the derived series of `W` reaches zero.
    pub fn is_solvable(&self, w: &Subspace) -> bool {
        let mut cur = w.clone();
        loop {
            if cur.is_zero() {
                return true;
            }
            let next = self.bracket_subspaces(&cur, &cur);
            if next == cur {
                return false;
            }
            cur = next;
        }
    }

    /// True iff `[L, W] ⊆ W`.
    pub fn is_ideal(&self, w: &Subspace) -> bool {
        (0..self.dim()).all(|i| {
            w.basis().iter().all(|v| {
                w.contains(
                    &self
                        .bracket_unchecked(
                            &self.basis_element(i),
                            &AlgebraElement::from_coords(v.clone()),
                        )
                        .coords,
                )
            })
        })
    }

    /// True iff `W` is an ideal and closed under every homogeneous projection.
    pub fn is_graded_ideal(&self, w: &Subspace) -> bool {
        if w.ambient() != self.dim() || !self.is_ideal(w) {
            return false;
        }
        (0..self.semigroup.size()).all(|t| w.is_invariant_under(&self.projection_matrix(t)))
    }

    /// Center `{x : [x, L] = 0}`.
    pub fn center(&self) -> Subspace {
        let ads: Vec<QMatrix> = (0..self.dim()).map(|i| self.ad_basis(i)).collect();
        // x ↦ [x, b_j] = -ad(b_j) x
        let mut rows = Vec::new();
        for a in &ads {
            rows.extend(a.to_rows());
        }
        let m = QMatrix::from_rows(rows).expect("ad matrices are square");
        Subspace::span(self.dim(), &kernel(&m))
            .expect("kernel vectors have the algebra's dimension")
    }

    /// Smallest subspace containing `seed` and invariant under every operator.
    pub fn spin(&self, seed: &AlgebraElement, operators: &[QMatrix]) -> Result<Subspace> {
        self.check_dim(seed)?;
        spin(seed, operators)
    }

    /// The five-dimensional algebra `L = sl_2 ⊕ ⟨u, v⟩` with the `(Z_2, ·)` grading
    /// `L_0 = (sl_2, 0)`, `L_1 = {(a, a) : a ∈ ⟨u, v⟩}`.
    ///
    /// Basis order: `(u,0), (u,u), (v,0), (v,v), (t,0)`, degrees `0, 1, 0, 1, 0`.
    /// Brackets are computed componentwise from `[u,v] = -2v`, `[u,t] = 2t`, `[v,t] = -u`.
    pub fn example_algebra() -> Self {
        // sl_2 basis order u, v, t; pairs are (first component, second component).
        let sl2_bracket = |a: &[i64; 3], b: &[i64; 3]| -> [i64; 3] {
            // [u,v] = -2v, [u,t] = 2t, [v,t] = -u
            let (au, av, at) = (a[0], a[1], a[2]);
            let (bu, bv, bt) = (b[0], b[1], b[2]);
            let uv = au * bv - av * bu;
            let ut = au * bt - at * bu;
            let vt = av * bt - at * bv;
            [-vt, -2 * uv, 2 * ut]
        };
        let elems: [([i64; 3], [i64; 3]); 5] = [
            ([1, 0, 0], [0, 0, 0]),
            ([1, 0, 0], [1, 0, 0]),
            ([0, 1, 0], [0, 0, 0]),
            ([0, 1, 0], [0, 1, 0]),
            ([0, 0, 1], [0, 0, 0]),
        ];
        // (x, y) with y ∈ span{u, v}:
        //   y_u (u,u) + y_v (v,v) + (x_u - y_u)(u,0) + (x_v - y_v)(v,0) + x_t (t,0)
        let to_basis = |x: [i64; 3], y: [i64; 3]| -> Combination {
            assert_eq!(y[2], 0, "second component must stay in <u, v>");
            let coeffs = [x[0] - y[0], y[0], x[1] - y[1], y[1], x[2]];
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(k, c)| (k, q(*c)))
                .collect()
        };
        let mut brackets = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                let x = sl2_bracket(&elems[i].0, &elems[j].0);
                let y = sl2_bracket(&elems[i].1, &elems[j].1);
                let c = to_basis(x, y);
                if !c.is_empty() {
                    brackets.push((i, j, c));
                }
            }
        }
        let names = ["u0", "uu", "v0", "vv", "t0"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        GradedLieAlgebra::new(
            FiniteSemigroup::z2_multiplicative(),
            names,
            vec![0, 1, 0, 1, 0],
            &brackets,
        )
        .expect("example algebra is well formed")
    }

    /// `sl_2` in the basis `u = e11 - e22`, `v = e21`, `t = e12`, trivially graded.
    pub fn sl2() -> Self {
        let names = ["u", "v", "t"].iter().map(|s| s.to_string()).collect();
        let brackets = vec![
            (0, 1, vec![(1, q(-2))]),
            (0, 2, vec![(2, q(2))]),
            (1, 2, vec![(0, q(-1))]),
        ];
        GradedLieAlgebra::new(FiniteSemigroup::trivial(), names, vec![0; 3], &brackets)
            .expect("sl2 is well formed")
    }

    /// The 2-dimensional solvable algebra `⟨u, v⟩` with `[u, v] = -2v`.
    pub fn borel_uv() -> Self {
        let names = ["u", "v"].iter().map(|s| s.to_string()).collect();
        GradedLieAlgebra::new(
            FiniteSemigroup::trivial(),
            names,
            vec![0, 0],
            &[(0, 1, vec![(1, q(-2))])],
        )
        .expect("well formed")
    }

    /// Abelian algebra of dimension `dim` with the given grading.
    pub fn abelian(semigroup: FiniteSemigroup, degree: Vec<usize>) -> Result<Self> {
        let names = (0..degree.len()).map(|i| format!("a{}", i + 1)).collect();
        GradedLieAlgebra::new(semigroup, names, degree, &[])
    }
}

impl fmt::Debug for GradedLieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GradedLieAlgebra(dim {}, semigroup size {})",
            self.dim(),
            self.semigroup.size()
        )
    }
}

/// Smallest subspace containing `seed` and invariant under `operators`.
pub fn spin(seed: &AlgebraElement, operators: &[QMatrix]) -> Result<Subspace> {
    let d = seed.dim();
    for op in operators {
        if op.rows() != d || op.cols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: op.rows(),
            });
        }
    }
    let mut w = Subspace::zero(d);
    if seed.is_zero() {
        return Ok(w);
    }
    let mut queue = vec![seed.coords.clone()];
    w.insert(&seed.coords);
    while let Some(v) = queue.pop() {
        for op in operators {
            let img = op.apply(&v)?;
            if w.insert(&img) {
                queue.push(img);
            }
        }
    }
    Ok(w)
}
