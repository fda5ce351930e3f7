//! Graded embeddings of a graded Lie algebra into block matrices indexed by
//! the grading semigroup.

use crate::algebra::{AlgebraElement, GradedLieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Subspace};
use crate::semigroup::FiniteSemigroup;

/// A linear map `L → End(V)` given on the basis of `L`.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    pub source: GradedLieAlgebra,
    pub d: usize,
    pub matrices: Vec<QMatrix>,
}

fn homomorphism_failures(alg: &GradedLieAlgebra, matrices: &[QMatrix]) -> Vec<(usize, usize)> {
    let n = alg.dim();
    let mut bad = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = combine(
                matrices,
                &alg.bracket_unchecked(&alg.basis_element(i), &alg.basis_element(j)),
            );
            let rhs = matrices[i]
                .commutator(&matrices[j])
                .expect("square matrices of equal size");
            if lhs != rhs {
                bad.push((i, j));
            }
        }
    }
    bad
}

fn combine(matrices: &[QMatrix], x: &AlgebraElement) -> QMatrix {
    let m = matrices[0].rows();
    let mut acc = QMatrix::zeros(m, m);
    for (c, mat) in x.coords.iter().zip(matrices) {
        if !num_traits::Zero::is_zero(c) {
            acc = &acc + &mat.scale(c);
        }
    }
    acc
}

/// Rank of `x ↦ ρ(x)` as a linear map from `L` into matrices.
fn coordinate_rank(matrices: &[QMatrix]) -> usize {
    let cols: Vec<_> = matrices.iter().map(QMatrix::flatten).collect();
    Subspace::span(cols.first().map_or(0, Vec::len), &cols)
        .map(|s| s.dim())
        .unwrap_or(0)
}

impl Representation {
    pub fn new(source: GradedLieAlgebra, matrices: Vec<QMatrix>) -> Result<Self> {
        if matrices.len() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: source.dim(),
                got: matrices.len(),
            });
        }
        let d = matrices.first().map_or(0, QMatrix::rows);
        for m in &matrices {
            if m.rows() != d || m.cols() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: m.rows().max(m.cols()),
                });
            }
        }
        Ok(Representation {
            source,
            d,
            matrices,
        })
    }

    pub fn image(&self, x: &AlgebraElement) -> Result<QMatrix> {
        if x.dim() != self.source.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.source.dim(),
                got: x.dim(),
            });
        }
        Ok(combine(&self.matrices, x))
    }

    /// Basis pairs `(i, j)` with `ρ([e_i, e_j]) ≠ [ρ(e_i), ρ(e_j)]`.
    pub fn homomorphism_failures(&self) -> Vec<(usize, usize)> {
        homomorphism_failures(&self.source, &self.matrices)
    }

    pub fn rank(&self) -> usize {
        coordinate_rank(&self.matrices)
    }

    pub fn is_faithful(&self) -> bool {
        self.rank() == self.source.dim()
    }
}

/// The adjoint representation; fails when `L` has a nonzero center.
pub fn adjoint_rep(alg: &GradedLieAlgebra) -> Result<Representation> {
    if !alg.center().is_zero() {
        return Err(Error::NotFaithful);
    }
    Representation::new(
        alg.clone(),
        (0..alg.dim()).map(|i| alg.ad_basis(i)).collect(),
    )
}

/// `ρ^gr` on `V^T = ⊕_{s∈T} V`: a basis element of degree `t` acts on the
/// `s`-block by `ρ` and lands in the `s·t`-block.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedRepresentation {
    pub base: Representation,
    pub semigroup: FiniteSemigroup,
    pub matrices: Vec<QMatrix>,
}

pub fn graded_ado(alg: &GradedLieAlgebra, rep: &Representation) -> Result<GradedRepresentation> {
    let sg = alg.semigroup();
    if !sg.is_abelian() {
        return Err(Error::NonAbelianSemigroup);
    }
    if rep.source != *alg {
        return Err(Error::InvalidAlgebra(
            "representation belongs to a different algebra".into(),
        ));
    }
    if !rep.is_faithful() {
        return Err(Error::NotFaithful);
    }
    let (d, k) = (rep.d, sg.size());
    let matrices = (0..alg.dim())
        .map(|i| {
            let t = alg.degree(i);
            let mut m = QMatrix::zeros(d * k, d * k);
            for s in 0..k {
                m.set_block(sg.mul(s, t) * d, s * d, &rep.matrices[i]);
            }
            m
        })
        .collect();
    Ok(GradedRepresentation {
        base: rep.clone(),
        semigroup: sg.clone(),
        matrices,
    })
}

impl GradedRepresentation {
    pub fn dim(&self) -> usize {
        self.base.d * self.semigroup.size()
    }

    pub fn block(&self, i: usize, r: usize, s: usize) -> QMatrix {
        let d = self.base.d;
        self.matrices[i].block(r * d, s * d, d, d)
    }

    /// Nonzero blocks `(r, s)` of the image of basis element `i`.
    pub fn block_support(&self, i: usize) -> Vec<(usize, usize)> {
        let k = self.semigroup.size();
        let mut out = Vec::new();
        for r in 0..k {
            for s in 0..k {
                if !self.block(i, r, s).is_zero() {
                    out.push((r, s));
                }
            }
        }
        out
    }

    pub fn image(&self, x: &AlgebraElement) -> Result<QMatrix> {
        if x.dim() != self.base.source.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.base.source.dim(),
                got: x.dim(),
            });
        }
        Ok(combine(&self.matrices, x))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdoReport {
    pub homomorphism_failures: Vec<(usize, usize)>,
    pub pairs_checked: usize,
    pub rank: usize,
    pub injective: bool,
    /// `(i, r, s)`: block `(r, s)` of basis element `i` is nonzero although `r ≠ s·deg(i)`.
    pub containment_failures: Vec<(usize, usize, usize)>,
}

impl AdoReport {
    pub fn passed(&self) -> bool {
        self.homomorphism_failures.is_empty()
            && self.injective
            && self.containment_failures.is_empty()
    }
}

pub fn verify_graded_ado(g: &GradedRepresentation) -> AdoReport {
    let alg = &g.base.source;
    let rank = coordinate_rank(&g.matrices);
    let mut containment = Vec::new();
    for i in 0..alg.dim() {
        let t = alg.degree(i);
        for (r, s) in g.block_support(i) {
            if r != g.semigroup.mul(s, t) {
                containment.push((i, r, s));
            }
        }
    }
    AdoReport {
        homomorphism_failures: homomorphism_failures(alg, &g.matrices),
        pairs_checked: alg.dim() * alg.dim(),
        rank,
        injective: rank == alg.dim(),
        containment_failures: containment,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn adjoint_faithfulness() {
        let l = GradedLieAlgebra::example_algebra();
        let rep = adjoint_rep(&l).unwrap();
        assert_eq!(rep.d, 5);
        assert!(rep.is_faithful());
        assert!(rep.homomorphism_failures().is_empty());
        assert_eq!(adjoint_rep(&GradedLieAlgebra::sl2()).unwrap().d, 3);
        let ab = GradedLieAlgebra::abelian(FiniteSemigroup::trivial(), vec![0]).unwrap();
        assert_eq!(adjoint_rep(&ab), Err(Error::NotFaithful));
    }

    #[test]
    fn example_embedding() {
        let l = GradedLieAlgebra::example_algebra();
        let g = graded_ado(&l, &adjoint_rep(&l).unwrap()).unwrap();
        assert_eq!(g.dim(), 10);
        let report = verify_graded_ado(&g);
        assert!(report.passed(), "{report:?}");
        assert_eq!((report.rank, report.pairs_checked), (5, 25));
        // degree-0 elements send both blocks into block 0
        assert_eq!(g.block_support(0), vec![(0, 0), (0, 1)]);
        assert_eq!(g.block_support(1), vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn block_products() {
        let l = GradedLieAlgebra::example_algebra();
        let rep = adjoint_rep(&l).unwrap();
        let g = graded_ado(&l, &rep).unwrap();
        let sg = l.semigroup();
        for a in 0..5 {
            for b in 0..5 {
                let prod = &g.matrices[a] * &g.matrices[b];
                let direct = &rep.matrices[a] * &rep.matrices[b];
                for s in 0..2 {
                    let r = sg.mul(sg.mul(s, l.degree(b)), l.degree(a));
                    let d = 5;
                    assert_eq!(prod.block(r * d, s * d, d, d), direct);
                }
            }
        }
    }

    #[test]
    fn trivial_semigroup_is_identity() {
        let l = GradedLieAlgebra::sl2();
        let rep = adjoint_rep(&l).unwrap();
        let g = graded_ado(&l, &rep).unwrap();
        assert_eq!(g.matrices, rep.matrices);
        assert!(verify_graded_ado(&g).passed());
    }

    #[test]
    fn corrupted_block_is_reported() {
        let l = GradedLieAlgebra::example_algebra();
        let mut g = graded_ado(&l, &adjoint_rep(&l).unwrap()).unwrap();
        g.matrices[2].set_block(0, 5, &QMatrix::zeros(5, 5));
        assert!(!verify_graded_ado(&g).homomorphism_failures.is_empty());

        let mut g = graded_ado(&l, &adjoint_rep(&l).unwrap()).unwrap();
        g.matrices[1].set(5, 0, q(1));
        let r = verify_graded_ado(&g);
        assert!(r.containment_failures.contains(&(1, 1, 0)));
    }

    #[test]
    fn non_abelian_rejected() {
        let sl2 = GradedLieAlgebra::sl2();
        let regraded = sl2
            .regraded(FiniteSemigroup::left_zero(2), vec![0, 0, 0])
            .unwrap();
        let rep = adjoint_rep(&regraded).unwrap();
        assert_eq!(graded_ado(&regraded, &rep), Err(Error::NonAbelianSemigroup));
    }

    #[test]
    fn general_elements_map_linearly() {
        let l = GradedLieAlgebra::example_algebra();
        let g = graded_ado(&l, &adjoint_rep(&l).unwrap()).unwrap();
        let x = AlgebraElement::from_i64(&[1, 2, 0, -1, 3]);
        let y = AlgebraElement::from_i64(&[0, 1, 1, 0, -2]);
        let lhs = g.image(&l.bracket(&x, &y).unwrap()).unwrap();
        let rhs = g
            .image(&x)
            .unwrap()
            .commutator(&g.image(&y).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}
