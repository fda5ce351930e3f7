use codimlab_core::ado::{adjoint_rep, graded_ado, verify_graded_ado};
use codimlab_core::haction::{dual_semigroup_action, verify_compatibility};
use codimlab_core::linalg::{q, QMatrix, Subspace};
use codimlab_core::{AlgebraElement, Error, FiniteSemigroup, GradedLieAlgebra};

fn vec_q(v: &[i64]) -> Vec<codimlab_core::linalg::Q> {
    v.iter().map(|&x| q(x)).collect()
}

fn operators(l: &GradedLieAlgebra) -> Vec<QMatrix> {
    (0..l.dim())
        .map(|i| l.ad_basis(i))
        .chain((0..2).map(|t| l.projection_matrix(t)))
        .collect()
}

#[test]
fn radical_is_the_second_summand() {
    let l = GradedLieAlgebra::example_algebra();
    let rad = l.solvable_radical();
    // (0,u) = (u,u) − (u,0), (0,v) = (v,v) − (v,0)
    let expected =
        Subspace::span(5, &[vec_q(&[-1, 1, 0, 0, 0]), vec_q(&[0, 0, -1, 1, 0])]).unwrap();
    assert_eq!(rad, expected);
    assert!(l.is_ideal(&rad));
    assert!(l.is_solvable(&rad));
    assert!(!l.is_graded_ideal(&rad));
}

#[test]
fn first_summand_is_a_graded_ideal() {
    let l = GradedLieAlgebra::example_algebra();
    let i0 = Subspace::span(
        5,
        &[
            vec_q(&[1, 0, 0, 0, 0]),
            vec_q(&[0, 0, 1, 0, 0]),
            vec_q(&[0, 0, 0, 0, 1]),
        ],
    )
    .unwrap();
    assert!(l.is_graded_ideal(&i0));
    let ops = operators(&l);
    for i in [0, 2, 4] {
        assert_eq!(l.spin(&l.basis_element(i), &ops).unwrap(), i0);
    }
}

#[test]
fn spins_of_degree_one_elements() {
    let l = GradedLieAlgebra::example_algebra();
    let ops = operators(&l);
    let full = Subspace::full(5);
    for v in [[0, 1, 0, 0, 0], [0, 1, 0, 1, 0], [0, 1, 0, -1, 0]] {
        assert_eq!(
            l.spin(&AlgebraElement::from_i64(&v), &ops).unwrap(),
            full,
            "{v:?}"
        );
    }
    // (v,v) only reaches a four-dimensional graded ideal
    let s = l.spin(&l.basis_element(3), &ops).unwrap();
    assert_eq!(s.dim(), 4);
    assert!(l.is_graded_ideal(&s));
    assert!(!s.contains(&vec_q(&[0, 1, 0, 0, 0])));
}

#[test]
fn embedding_passes_all_checks() {
    let l = GradedLieAlgebra::example_algebra();
    let g = graded_ado(&l, &adjoint_rep(&l).unwrap()).unwrap();
    let r = verify_graded_ado(&g);
    assert!(r.passed());
    assert_eq!(r.pairs_checked, 25);
    assert_eq!(r.rank, 5);
    assert_eq!(g.dim(), 10);
}

#[test]
fn embedding_rejects_non_commutative_grading() {
    let l = GradedLieAlgebra::sl2()
        .regraded(FiniteSemigroup::left_zero(3), vec![1, 1, 1])
        .unwrap();
    let rep = adjoint_rep(&l).unwrap();
    assert_eq!(graded_ado(&l, &rep), Err(Error::NonAbelianSemigroup));
}

#[test]
fn projection_action_moves_right() {
    let l = GradedLieAlgebra::example_algebra();
    let r = verify_compatibility(&l, &dual_semigroup_action(&l));
    assert!(r.passed(), "{r:?}");
}
