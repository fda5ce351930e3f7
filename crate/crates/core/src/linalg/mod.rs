//! Exact linear algebra over the rationals.
//!
//! Dense matrices and reduced-echelon subspaces live here; the integer rank
//! kernels used by the codimension engine are in [`rank`].

pub mod rank;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Q::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Q::from_integer(n))
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(QMatrix {
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r: Vec<Vec<Q>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| q(x)).collect())
            .collect();
        Self::from_rows(r).expect("ragged literal matrix")
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(n_rows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(n_rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, s: &Q) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).fold(Q::zero(), |acc, i| acc + self.get(i, i))
    }

    /// Matrix-vector product `M v`.
    pub fn apply(&self, v: &[Q]) -> Result<Vec<Q>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Q::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn try_mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &QMatrix) -> Result<QMatrix> {
        Ok(&self.try_mul(other)? - &other.try_mul(self)?)
    }

    /// Entries flattened row-major; the coordinate vector of the matrix in `End(V)`.
    pub fn flatten(&self) -> Vec<Q> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Q>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(QMatrix { rows, cols, data })
    }

    pub fn rank(&self) -> usize {
        rref(self.to_rows()).1.len()
    }

    /// True iff the matrix equals `c * I` for some `c`; returns `c`.
    pub fn scalar_value(&self) -> Option<Q> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 {
            Q::zero()
        } else {
            self.get(0, 0).clone()
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = if i == j { &c } else { &Q::zero() };
                if self.get(i, j) != want {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Submatrix `rows r0..r0+nr`, `cols c0..c0+nc`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> QMatrix {
        let mut b = QMatrix::zeros(nr, nc);
        for i in 0..nr {
            for j in 0..nc {
                b.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        b
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &QMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(fmt_q).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl<'a> Add<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in add"
        );
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in sub"
        );
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.try_mul(rhs).expect("shape mismatch in mul")
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(mut rows: Vec<Vec<Q>>) -> (Vec<Vec<Q>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of `{x : M x = 0}` as a list of column vectors.
pub fn kernel(m: &QMatrix) -> Vec<Vec<Q>> {
    let (rows, pivots) = rref(m.to_rows());
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); n];
            v[f] = Q::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// A linear subspace of `Q^ambient`, stored as a canonical reduced echelon basis.
///
/// Two equal subspaces always have identical bases, so `==` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                (0..ambient)
                    .map(|j| if i == j { Q::one() } else { Q::zero() })
                    .collect()
            })
            .collect();
        Subspace {
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Q>]) -> Result<Self> {
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: v.len(),
                });
            }
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let (basis, pivots) = rref(vectors.to_vec());
        Ok(Subspace {
            ambient,
            basis,
            pivots,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Reduced echelon basis rows.
    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after reduction against the echelon basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, b) in w.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        v.len() == self.ambient && self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Adds `v`; returns true iff the dimension grew.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        if self.contains(v) {
            return false;
        }
        let mut vs = self.basis.clone();
        vs.push(v.to_vec());
        let (basis, pivots) = rref(vs);
        self.basis = basis;
        self.pivots = pivots;
        true
    }

    pub fn join(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        if vs.is_empty() {
            return Subspace::zero(self.ambient);
        }
        let (basis, pivots) = rref(vs);
        Subspace {
            ambient: self.ambient,
            basis,
            pivots,
        }
    }

    /// True iff `op · self ⊆ self`.
    pub fn is_invariant_under(&self, op: &QMatrix) -> bool {
        self.basis
            .iter()
            .all(|v| op.apply(v).map(|w| self.contains(&w)).unwrap_or(false))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) [", self.dim(), self.ambient)?;
        for row in &self.basis {
            let r: Vec<String> = row.iter().map(fmt_q).collect();
            write!(f, " ({})", r.join(","))?;
        }
        write!(f, " ]")
    }
}

/// Least common multiple of the denominators in `v`.
pub fn common_denominator<'a>(v: impl IntoIterator<Item = &'a Q>) -> BigInt {
    use num_integer::Integer;
    v.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Scales a rational vector to a primitive integer vector with positive leading entry.
pub fn primitive_integer_vector(v: &[Q]) -> Vec<BigInt> {
    use num_integer::Integer;
    let d = common_denominator(v);
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Q::from_integer(d.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for x in ints.iter_mut() {
            *x /= &g;
        }
        if ints
            .iter()
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_negative())
        {
            for x in ints.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    ints
}
